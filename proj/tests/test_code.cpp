/*
   Copyright 2026 The lagcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "lagc/channel.hpp"
#include "lagc/decoder.hpp"
#include "test_util.hpp"

using namespace lagc;
using namespace lagc::testutil;

namespace {

DDivisor inf_mult(const KummerSetup& s, long long a) {
    DDivisor d;
    d.set(s.infinity_place(), Rat(a));
    return d;
}

SkewElement poly_skew(const KummerSetup& s, Orientation o, std::size_t max_deg,
                      std::mt19937_64& rng) {
    std::vector<RatFunc> c;
    for (unsigned j = 0; j < s.r; ++j) c.emplace_back(random_poly(s.F, max_deg, rng));
    return SkewElement(o, std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("code");

TEST_CASE("evaluation matrices") {
    KummerSetup a = ref_a();
    const auto D = Orientation::primal;
    const std::size_t i4 = 1;  // a_i = 4, so x(a_i) = 2 and beta = 2

    SUBCASE("identity on one") {
        FqMatrix m = eval_place(a, SkewElement::one(a, D), i4);
        CHECK(m == FqMatrix::identity(a.F, 2));
    }
    SUBCASE("companion on T") {
        FqMatrix m = eval_place(a, SkewElement::t(a, D), i4);
        CHECK(m(0, 0) == 0);
        CHECK(m(0, 1) == 2);
        CHECK(m(1, 0) == 1);
        CHECK(m(1, 1) == 0);
    }
    SUBCASE("diagonal on functions") {
        SkewElement u = SkewElement::from_scalar(a, D, RatFunc(Poly::monomial(a.F, 1, 1)));
        FqMatrix m = eval_place(a, u, i4);
        CHECK(m(0, 0) == 2);
        CHECK(m(1, 1) == 3);
        CHECK(m(0, 1) == 0);
        CHECK(m(1, 0) == 0);
    }
    SUBCASE("pole detection") {
        RatFunc pole(Poly::constant(a.F, 1), Poly(a.F, {a.F.neg(2), 1}));  // 1/(u-2)
        CHECK_THROWS_AS(
            static_cast<void>(eval_place(a, SkewElement::from_scalar(a, D, pole), i4)),
            PoleError);
    }
    SUBCASE("T^r scales the identity by x(a_i)") {
        for (const KummerSetup& s : {ref_a(), ref_b()}) {
            for (Orientation o : {Orientation::primal, Orientation::adjoint}) {
                for (std::size_t i = 0; i < s.eval_points.size(); ++i) {
                    FqMatrix m = companion_matrix(s, i, o);
                    FqMatrix p = FqMatrix::identity(s.F, s.r);
                    for (unsigned k = 0; k < s.r; ++k) p = p * m;
                    Fe corner = s.x_at(i);
                    if (o == Orientation::adjoint) corner = s.F.inv(corner);
                    CHECK(p == FqMatrix::identity(s.F, s.r) * corner);
                }
            }
        }
    }
    SUBCASE("morphism property on random pairs") {
        std::mt19937_64 rng(61);
        for (const KummerSetup& s : {ref_a(), ref_b()}) {
            for (Orientation o : {Orientation::primal, Orientation::adjoint}) {
                for (int t = 0; t < 100; ++t) {
                    SkewElement f = poly_skew(s, o, 3, rng);
                    SkewElement g = poly_skew(s, o, 3, rng);
                    SkewElement fg = skew_mul(s, f, g);
                    for (std::size_t i = 0; i < s.eval_points.size(); ++i)
                        CHECK(eval_place(s, fg, i) == eval_place(s, f, i) * eval_place(s, g, i));
                }
            }
        }
    }
    SUBCASE("transpose matches the adjoint") {
        std::mt19937_64 rng(67);
        for (const KummerSetup& s : {ref_a(), ref_b()}) {
            for (int t = 0; t < 100; ++t) {
                SkewElement f = poly_skew(s, Orientation::primal, 3, rng);
                SkewElement fs = adjoint(s, f);
                for (std::size_t i = 0; i < s.eval_points.size(); ++i)
                    CHECK(eval_place(s, f, i).transpose() == eval_place(s, fs, i));
            }
        }
    }
    SUBCASE("trace matches the reduced trace") {
        std::mt19937_64 rng(71);
        for (const KummerSetup& s : {ref_a(), ref_b()}) {
            for (int t = 0; t < 100; ++t) {
                SkewElement f = poly_skew(s, Orientation::primal, 3, rng);
                RatFunc tr = reduced_trace(s, f);
                for (std::size_t i = 0; i < s.eval_points.size(); ++i) {
                    auto v = tr.eval(s.beta[i]);
                    REQUIRE(v.has_value());
                    CHECK(eval_place(s, f, i).trace() == *v);
                }
            }
        }
    }
}

TEST_CASE("sum-rank weight and pairing") {
    KummerSetup a = ref_a();
    BlockWord zero(a.F, 2, 2);
    CHECK(sumrank_weight(zero) == 0);

    BlockWord ident(a.F, 2, 2);
    ident.block(0) = FqMatrix::identity(a.F, 2);
    ident.block(1) = FqMatrix::identity(a.F, 2);
    CHECK(sumrank_weight(ident) == 4);

    SUBCASE("rank sum") {
        std::mt19937_64 rng(73);
        BlockWord w(a.F, 2, 2);
        w.block(0) = random_matrix_of_rank(a.F, 2, 2, 1, rng);
        w.block(1) = random_matrix_of_rank(a.F, 2, 2, 2, rng);
        CHECK(sumrank_weight(w) == 3);
        CHECK(sumrank_distance(w, w) == 0);
        CHECK(sumrank_distance(w, zero) == 3);
    }
    SUBCASE("pairing basics") {
        BlockWord e11(a.F, 2, 2);
        e11.block(0)(0, 0) = 1;
        CHECK(pairing(e11, e11) == 1);
        CHECK(pairing(e11, zero) == 0);
        // the evaluation of T pairs with itself to Tr([[0,2],[1,0]] [[0,1],[2,0]]) = 0 mod 5
        BlockWord tw(a.F, 2, 2);
        tw.block(1) = eval_place(a, SkewElement::t(a, Orientation::primal), 1);
        CHECK(pairing(tw, tw) == 0);
    }
}

TEST_CASE("code construction and encoding") {
    KummerSetup b = ref_b();
    CodeInstance code(b, inf_mult(b, 2), Orientation::primal, CodeMode::strict);
    CHECK(code.dim() == 6);
    CHECK(code.length() == 36);
    CHECK(code.designed_distance() == Rat(10));

    SUBCASE("zero message gives zero word") {
        std::vector<Fe> zero_msg(code.dim(), 0);
        CHECK(code.encode(zero_msg).is_zero());
    }
    SUBCASE("constant-one basis element encodes to identity blocks") {
        std::vector<Fe> msg(code.dim(), 0);
        msg[0] = 1;
        BlockWord w = code.encode(msg);
        for (std::size_t i = 0; i < w.num_blocks(); ++i)
            CHECK(w.block(i) == FqMatrix::identity(b.F, 3));
    }
    SUBCASE("encode then message_of round-trips") {
        std::mt19937_64 rng(79);
        for (int t = 0; t < 25; ++t) {
            auto msg = random_message(b.F, code.dim(), rng);
            auto back = code.message_of(code.encode(msg));
            REQUIRE(back.has_value());
            CHECK(*back == msg);
        }
    }
    SUBCASE("generator rows agree with direct evaluation") {
        std::mt19937_64 rng(80);
        for (int t = 0; t < 10; ++t) {
            auto msg = random_message(b.F, code.dim(), rng);
            SkewElement f = code.space().combine(msg);
            CHECK(code.encode(msg) == code.eval_word(f));
        }
    }
    SUBCASE("strict mode enforces the degree window") {
        CHECK_THROWS(CodeInstance(b, inf_mult(b, 0), Orientation::primal, CodeMode::strict));
        CHECK_THROWS(CodeInstance(b, inf_mult(b, 12), Orientation::primal, CodeMode::strict));
        CHECK_NOTHROW(CodeInstance(b, inf_mult(b, 0), Orientation::primal, CodeMode::relaxed));
    }
}

TEST_CASE("duality") {
    SUBCASE("REF-A dimension split across the window") {
        KummerSetup a = ref_a();
        for (long long v = 0; v <= 3; ++v) {
            CodeInstance code(a, inf_mult(a, v), Orientation::primal,
                              v == 0 ? CodeMode::relaxed : CodeMode::strict);
            CodeInstance dual = code.dual();
            CHECK(code.dim() == static_cast<std::size_t>(2 * v + 1));
            CHECK(dual.dim() == static_cast<std::size_t>(7 - 2 * v));
            CHECK(code.dim() + dual.dim() == 8);
            // expected dual divisor: 3 Q_0 - (1+v) inf + (1/2) Q_c
            const DDivisor& da = dual.divisor();
            CHECK(da.coeff(Place::rational(a.F, 0)) == Rat(3));
            CHECK(da.coeff(a.infinity_place()) == Rat(-1 - v));
            CHECK(da.coeff(a.inert_place()) == Rat(1, 2));
            // orthogonality of all generator rows
            for (std::size_t x = 0; x < code.dim(); ++x) {
                BlockWord wx = BlockWord::from_flat(a.F, 2, 2, code.generator().row(x));
                for (std::size_t y = 0; y < dual.dim(); ++y) {
                    BlockWord wy = BlockWord::from_flat(a.F, 2, 2, dual.generator().row(y));
                    CHECK(pairing(wx, wy) == 0);
                }
            }
            CHECK(code.generator().rank() + dual.generator().rank() == 8);
        }
    }
    SUBCASE("REF-B dimensions 6 and 30") {
        KummerSetup b = ref_b();
        CodeInstance code(b, inf_mult(b, 2), Orientation::primal, CodeMode::strict);
        CodeInstance dual = code.dual();
        CHECK(dual.dim() == 30);
        CHECK(dual.orientation() == Orientation::adjoint);
        for (std::size_t x = 0; x < code.dim(); ++x) {
            BlockWord wx = BlockWord::from_flat(b.F, 4, 3, code.generator().row(x));
            for (std::size_t y = 0; y < dual.dim(); ++y) {
                BlockWord wy = BlockWord::from_flat(b.F, 4, 3, dual.generator().row(y));
                CHECK(pairing(wx, wy) == 0);
            }
        }
    }
    SUBCASE("double dual spans the original code") {
        KummerSetup a = ref_a();
        CodeInstance code(a, inf_mult(a, 2), Orientation::primal, CodeMode::strict);
        CodeInstance dd = code.dual().dual();
        CHECK(dd.dim() == code.dim());
        CHECK(code.generator().vstack(dd.generator()).rank() == code.generator().rank());
    }
}

TEST_CASE("exhaustive minimum distance") {
    KummerSetup a = ref_a();
    SUBCASE("REF-A code meets the designed distance") {
        CodeInstance code(a, inf_mult(a, 1), Orientation::primal, CodeMode::strict);
        REQUIRE(code.dim() == 3);  // 124 nonzero codewords
        long long d = min_distance_exhaustive(code, 1000);
        CHECK(d >= 3);
        // Singleton defect: r d + k >= n + r(1 - g)
        CHECK(Rat(2 * d + 3) >= Rat(8) + Rat(2) * (Rat(1) - genus(a)));
    }
    SUBCASE("dual designed distance deg A - (2g-2)") {
        CodeInstance code(a, inf_mult(a, 3), Orientation::primal, CodeMode::strict);
        CodeInstance dual = code.dual();
        REQUIRE(dual.dim() == 1);
        long long d = min_distance_exhaustive(dual, 1000);
        CHECK(d >= 4);
        CHECK(Rat(2 * d + 1) >= Rat(8) + Rat(2) * (Rat(1) - genus(a)));
    }
    SUBCASE("cap and trivial code") {
        CodeInstance code(a, inf_mult(a, 1), Orientation::primal, CodeMode::strict);
        CHECK_THROWS(min_distance_exhaustive(code, 10));
        CodeInstance empty(a, inf_mult(a, -1), Orientation::primal, CodeMode::relaxed);
        CHECK(min_distance_exhaustive(empty, 10) == kInfiniteDistance);
    }
}

TEST_CASE("extension field end-to-end") {
    // GF(4), degree-3 twist, single split evaluation place
    SetupConfig cfg;
    cfg.p = 2;
    cfg.m = 2;
    cfg.modulus = {1, 1, 1};
    cfg.r = 3;
    cfg.c = 2;  // a non-cube, so u^3 - c is irreducible
    cfg.eval_points = {1};
    KummerSetup s = setup_validate(cfg);
    CHECK(genus(s) == Rat(1));

    CodeInstance code(s, inf_mult(s, 1), Orientation::primal, CodeMode::strict);
    CHECK(code.dim() == 3);
    CHECK(code.length() == 9);
    CodeInstance dual = code.dual();
    CHECK(dual.dim() == 6);
    for (std::size_t x = 0; x < code.dim(); ++x) {
        BlockWord wx = BlockWord::from_flat(s.F, 1, 3, code.generator().row(x));
        for (std::size_t y = 0; y < dual.dim(); ++y) {
            BlockWord wy = BlockWord::from_flat(s.F, 1, 3, dual.generator().row(y));
            CHECK(pairing(wx, wy) == 0);
        }
    }

    std::mt19937_64 rng(123);
    for (int t = 0; t < 20; ++t) {
        DDivisor a;
        a.set(s.infinity_place(), Rat(t % 5 - 2));
        a.set(s.inert_place(), Rat(t % 7 - 3, 3));
        CHECK(check_rr(s, a, Orientation::primal).ok);
    }

    DecoderContext ctx(code);
    CHECK(ctx.rho() == 0);
    auto msg = random_message(s.F, code.dim(), rng);
    DecodeResult res = ctx.decode(code.encode(msg));
    REQUIRE(res.ok());
    CHECK(*res.message == msg);
}

TEST_CASE("random errors have exact weight") {
    std::mt19937_64 rng(83);
    Field f13 = Field::prime(13);
    for (long long w = 0; w <= 12; ++w) {
        BlockWord e = random_error(f13, 4, 3, w, rng);
        CHECK(sumrank_weight(e) == w);
    }
    CHECK_THROWS(random_error(f13, 4, 3, 13, rng));
}

TEST_SUITE_END();
