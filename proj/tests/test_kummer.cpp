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
#include "lagc/factor.hpp"
#include "lagc/kummer.hpp"
#include "test_util.hpp"

using namespace lagc;
using namespace lagc::testutil;

TEST_SUITE_BEGIN("kummer");

TEST_CASE("reference setups validate") {
    KummerSetup a = ref_a();
    CHECK(a.F.q() == 5);
    CHECK(a.beta == std::vector<Fe>{1, 2});
    CHECK(a.zeta == 4);

    KummerSetup b = ref_b();
    CHECK(b.zeta == 3);
    CHECK(b.num_eval_places() == 4);

    SUBCASE("square c rejected in REF-A shape") {
        SetupConfig cfg;
        cfg.p = 5;
        cfg.r = 2;
        cfg.c = 4;  // 4 = 2^2, so u^2 - 4 splits
        cfg.eval_points = {1, 4};
        CHECK_THROWS_WITH_AS(static_cast<void>(setup_validate(cfg)),
                             doctest::Contains("reducible"), std::invalid_argument);
    }
    SUBCASE("r must divide q-1") {
        SetupConfig cfg;
        cfg.p = 5;
        cfg.r = 3;
        cfg.c = 2;
        cfg.eval_points = {1};
        CHECK_THROWS(static_cast<void>(setup_validate(cfg)));
    }
    SUBCASE("evaluation point must be an r-th power") {
        SetupConfig cfg;
        cfg.p = 5;
        cfg.r = 2;
        cfg.c = 2;
        cfg.eval_points = {3};
        CHECK_THROWS(static_cast<void>(setup_validate(cfg)));
    }
    SUBCASE("repeated evaluation points rejected") {
        SetupConfig cfg;
        cfg.p = 13;
        cfg.r = 3;
        cfg.c = 2;
        cfg.eval_points = {1, 1};
        CHECK_THROWS(static_cast<void>(setup_validate(cfg)));
    }
}

TEST_CASE("K-place decomposition") {
    KummerSetup s = ref_a();
    SUBCASE("split place s=1") {
        FiberData fd = decompose_kplace(s, KPlace::rational(s.F, 1));
        REQUIRE(fd.places.size() == 2);
        CHECK(fd.e == 1);
        CHECK(fd.f_deg == 1);
        CHECK(fd.b == 1);
        const bool has_u_minus_1 =
            std::find(fd.places.begin(), fd.places.end(), Place::rational(s.F, 1)) !=
            fd.places.end();
        const bool has_u_plus_1 =
            std::find(fd.places.begin(), fd.places.end(), Place::rational(s.F, 4)) !=
            fd.places.end();
        CHECK(has_u_minus_1);
        CHECK(has_u_plus_1);
    }
    SUBCASE("infinity is totally ramified") {
        FiberData fd = decompose_kplace(s, KPlace::infinity(s.F));
        REQUIRE(fd.places.size() == 1);
        CHECK(fd.places[0].is_infinity());
        CHECK(fd.e == 2);
        CHECK(fd.b == 1);
    }
    SUBCASE("s=c is inert with b = r") {
        FiberData fd = decompose_kplace(s, KPlace::rational(s.F, 2));
        REQUIRE(fd.places.size() == 1);
        CHECK(fd.places[0].degree() == 2);
        CHECK(fd.places[0] == s.inert_place());
        CHECK(fd.e == 1);
        CHECK(fd.f_deg == 2);
        CHECK(fd.b == 2);
    }
    SUBCASE("non-square non-c value is inert with b = 1") {
        FiberData fd = decompose_kplace(s, KPlace::rational(s.F, 3));
        REQUIRE(fd.places.size() == 1);
        CHECK(fd.places[0].degree() == 2);
        CHECK(fd.b == 1);
    }
}

TEST_CASE("theta action") {
    KummerSetup a = ref_a();
    Poly u = Poly::monomial(a.F, 1, 1);
    CHECK(a.theta(u) == u * Fe(4));  // zeta^{-1} = 4 = -1
    CHECK(a.theta(a.x_func()) == a.x_func());

    KummerSetup b = ref_b();
    CHECK(b.theta(Place::rational(b.F, 1)) == Place::rational(b.F, 3));
    CHECK(b.theta(b.inert_place()) == b.inert_place());
    // theta^r = identity
    Place q = Place::rational(b.F, 5);
    CHECK(b.theta(q, 3) == q);
}

TEST_CASE("different and genus") {
    KummerSetup a = ref_a();
    DDivisor delta_a = different_delta(a);
    CHECK(delta_a.coeff(a.inert_place()) == Rat(1, 2));
    CHECK(delta_a.degree() == Rat(1));
    CHECK(genus(a) == Rat(1, 2));

    KummerSetup b = ref_b();
    CHECK(different_delta(b).coeff(b.inert_place()) == Rat(2, 3));
    CHECK(different_delta(b).degree() == Rat(2));
    CHECK(genus(b) == Rat(1));

    SUBCASE("degenerate r=1 gives the projective line") {
        SetupConfig cfg;
        cfg.p = 5;
        cfg.r = 1;
        cfg.c = 2;
        cfg.eval_points = {1, 3, 4};
        KummerSetup s1 = setup_validate(cfg);
        CHECK(genus(s1) == Rat(0));
        CHECK(different_delta(s1).is_zero());
    }
}

TEST_CASE("divisors of functions") {
    KummerSetup a = ref_a();
    Poly u = Poly::monomial(a.F, 1, 1);
    SUBCASE("divisor of u") {
        DDivisor d = divisor_of(RatFunc(u));
        CHECK(d.coeff(Place::rational(a.F, 0)) == Rat(1));
        CHECK(d.coeff(a.infinity_place()) == Rat(-1));
        CHECK(d.support_size() == 2);
    }
    SUBCASE("differential of dt/t in REF-A") {
        Poly t = t_d_poly(a);
        CHECK(t == Poly(a.F, {4, 0, 0, 0, 1}));  // u^4 + 4
        DDivisor d = differential_divisor(RatFunc(t.derivative(), t));
        CHECK(d.coeff(Place::rational(a.F, 0)) == Rat(3));
        CHECK(d.coeff(a.infinity_place()) == Rat(-1));
        for (std::size_t i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) CHECK(d.coeff(a.fiber_place(i, j)) == Rat(-1));
    }
    SUBCASE("differential of dt/t in REF-B") {
        KummerSetup b = ref_b();
        Poly t = t_d_poly(b);
        Poly u12m1(b.F, {12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
        CHECK(t == u12m1);
        DDivisor d = differential_divisor(RatFunc(t.derivative(), t));
        CHECK(d.coeff(Place::rational(b.F, 0)) == Rat(11));
        CHECK(d.coeff(b.infinity_place()) == Rat(-1));
    }
    SUBCASE("principal divisors have degree zero") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 50; ++t) {
            RatFunc f = random_nonzero_ratfunc(a.F, 6, rng);
            CHECK(divisor_of(f).degree() == Rat(0));
        }
    }
}

TEST_CASE("canonical divisor") {
    KummerSetup a = ref_a();
    DDivisor k = canonical_divisor(a);
    CHECK(k.degree() == Rat(-1));
    CHECK(k.coeff(a.inert_place()) == Rat(1, 2));
    CHECK(k.coeff(Place::rational(a.F, 0)) == Rat(3));
    CHECK(k.coeff(a.infinity_place()) == Rat(-1));
    CHECK(k.degree() == Rat(2) * genus(a) - Rat(2));

    KummerSetup b = ref_b();
    CHECK(canonical_divisor(b).degree() == Rat(0));
    CHECK(canonical_divisor(b).coeff(b.inert_place()) == Rat(2, 3));
}

TEST_CASE("conorm and Galois divisors") {
    KummerSetup a = ref_a();
    SUBCASE("conorm of a split place") {
        DDivisor d = conorm(a, KPlace::rational(a.F, 1));
        CHECK(d.coeff(Place::rational(a.F, 1)) == Rat(1));
        CHECK(d.coeff(Place::rational(a.F, 4)) == Rat(1));
        CHECK(d.support_size() == 2);
    }
    SUBCASE("conorm of infinity") {
        DDivisor d = conorm(a, KPlace::infinity(a.F));
        CHECK(d.coeff(a.infinity_place()) == Rat(2));
        CHECK(d.support_size() == 1);
    }
    SUBCASE("Galois detection on an orbit") {
        DDivisor not_gal;
        not_gal.set(Place::rational(a.F, 1), Rat(3));
        CHECK(!is_galois(a, not_gal));
        not_gal.set(Place::rational(a.F, 4), Rat(3));
        CHECK(is_galois(a, not_gal));
    }
    SUBCASE("structural divisors are Galois") {
        CHECK(is_galois(a, different_delta(a)));
        CHECK(is_galois(a, canonical_divisor(a)));
        CHECK(is_galois(a, conorm_of_eval_divisor(a)));
        KummerSetup b = ref_b();
        CHECK(is_galois(b, canonical_divisor(b)));
        CHECK(is_galois(b, conorm_of_eval_divisor(b)));
    }
}

TEST_CASE("pi maps") {
    KummerSetup a = ref_a();
    SUBCASE("REF-A worked example") {
        DDivisor two_inf;
        two_inf.set(a.infinity_place(), Rat(2));
        DDivisor p1 = pi_map(a, two_inf, 1, +1);
        CHECK(p1.coeff(a.infinity_place()) == Rat(1));
        CHECK(p1.coeff(a.inert_place()) == Rat(0));
        CHECK(p1.support_size() == 1);
        // pi_0 is the coefficientwise floor
        DDivisor p0 = pi_map(a, two_inf, 0, +1);
        CHECK(p0 == two_inf);
    }
    SUBCASE("REF-B adjoint worked example") {
        KummerSetup b = ref_b();
        DDivisor d;
        d.set(Place::rational(b.F, 0), Rat(11));
        d.set(b.infinity_place(), Rat(-3));
        d.set(b.inert_place(), Rat(2, 3));
        DDivisor p2 = pi_map(b, d, 2, -1);
        CHECK(p2.coeff(Place::rational(b.F, 0)) == Rat(11));
        CHECK(p2.coeff(b.infinity_place()) == Rat(-1));
        CHECK(p2.coeff(b.inert_place()) == Rat(0));
    }
    SUBCASE("degree sum identity") {
        std::mt19937_64 rng(17);
        for (const KummerSetup& s : {ref_a(), ref_b()}) {
            const Rat half_delta = different_delta(s).degree() / Rat(2);
            for (int t = 0; t < 40; ++t) {
                DDivisor d = random_divisor(s, rng, false);
                Rat sum(0);
                for (unsigned i = 0; i < s.r; ++i) sum += pi_map(s, d, i, +1).degree();
                CHECK(sum == Rat(s.r) * d.degree() - Rat(s.r) * half_delta);
            }
        }
    }
}

TEST_CASE("divisor denominator validation") {
    KummerSetup a = ref_a();
    DDivisor good;
    good.set(a.inert_place(), Rat(3, 2));
    CHECK_NOTHROW(check_denominators(a, good));
    DDivisor bad;
    bad.set(a.infinity_place(), Rat(1, 2));  // b = 1 at infinity
    CHECK_THROWS(check_denominators(a, bad));
    DDivisor bad2;
    bad2.set(a.inert_place(), Rat(1, 4));
    CHECK_THROWS(check_denominators(a, bad2));
}

TEST_CASE("b equals one wherever x is a unit") {
    for (const KummerSetup& s : {ref_a(), ref_b()}) {
        for (Fe v = 0; v < s.F.q(); ++v) {
            if (v == s.c) continue;
            FiberData fd = decompose_kplace(s, KPlace::rational(s.F, v));
            CHECK(fd.b == 1);
        }
    }
}

TEST_SUITE_END();
