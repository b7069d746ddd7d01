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

#include "lagc/selftest.hpp"

#include <functional>

#include "lagc/channel.hpp"
#include "lagc/factor.hpp"

namespace lagc {

namespace {

Poly random_poly(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> cdist(0, f.q() - 1);
    std::uniform_int_distribution<std::size_t> ddist(0, max_deg);
    std::vector<Fe> c(ddist(rng) + 1);
    for (auto& v : c) v = cdist(rng);
    return Poly(f, std::move(c));
}

Poly random_nonzero_poly(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
    while (true) {
        Poly p = random_poly(f, max_deg, rng);
        if (!p.is_zero()) return p;
    }
}

SkewElement random_skew(const KummerSetup& s, Orientation o, std::mt19937_64& rng,
                        bool integral) {
    std::vector<RatFunc> c;
    for (unsigned j = 0; j < s.r; ++j) {
        Poly num = random_poly(s.F, 3, rng);
        if (integral)
            c.emplace_back(std::move(num));
        else
            c.emplace_back(std::move(num), random_nonzero_poly(s.F, 3, rng));
    }
    return SkewElement(o, std::move(c));
}

SkewElement random_nonzero_skew(const KummerSetup& s, Orientation o, std::mt19937_64& rng,
                                bool integral) {
    while (true) {
        SkewElement f = random_skew(s, o, rng, integral);
        if (!f.is_zero()) return f;
    }
}

DDivisor random_divisor(const KummerSetup& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    DDivisor a;
    a.set(s.infinity_place(), Rat(coeff(rng)));
    a.set(Place::rational(s.F, 0), Rat(coeff(rng)));
    a.set(s.inert_place(), Rat(coeff(rng), s.r));
    return a;
}

std::vector<FqMatrix> random_subspaces(const KummerSetup& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> ddist(0, s.r);
    std::vector<FqMatrix> w;
    for (std::size_t i = 0; i < s.eval_points.size(); ++i)
        w.push_back(random_matrix(s.F, ddist(rng), s.r, rng).row_basis());
    return w;
}

using CheckFn = std::function<bool(std::string&)>;

CheckResult run_one(const std::string& name, const CheckFn& fn) {
    CheckResult res;
    res.name = name;
    try {
        res.pass = fn(res.detail);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    return res;
}

}  // namespace

std::vector<CheckResult> run_selftest(const Bundle& bundle, std::uint64_t seed) {
    const KummerSetup& s = bundle.setup();
    const Field& F = s.F;
    std::vector<CheckResult> out;

    out.push_back(run_one("field-axioms", [&](std::string& detail) {
        auto rng = trial_rng(seed, 1);
        std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
        for (int t = 0; t < 1000; ++t) {
            Fe a = dist(rng), b = dist(rng), c = dist(rng);
            if (F.add(a, F.add(b, c)) != F.add(F.add(a, b), c) ||
                F.mul(a, F.mul(b, c)) != F.mul(F.mul(a, b), c) ||
                F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)) ||
                (a != 0 && F.mul(a, F.inv(a)) != 1)) {
                detail = "axiom failed at trial " + std::to_string(t);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_one("factor-reconstruction", [&](std::string& detail) {
        auto rng = trial_rng(seed, 2);
        for (int t = 0; t < 50; ++t) {
            Poly a = random_nonzero_poly(F, 10, rng);
            Poly prod = Poly::constant(F, a.leading());
            for (auto& [p, m] : factor(a, rng)) {
                if (!is_irreducible(p)) {
                    detail = "non-irreducible factor";
                    return false;
                }
                for (unsigned i = 0; i < m; ++i) prod = prod * p;
            }
            if (prod != a) {
                detail = "product mismatch";
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_one("gauge-surmultiplicativity", [&](std::string& detail) {
        auto rng = trial_rng(seed, 3);
        std::vector<KPlace> kps = {KPlace::infinity(F), KPlace::rational(F, s.c),
                                   KPlace::rational(F, 0)};
        for (int t = 0; t < 100; ++t) {
            for (Orientation o : {Orientation::primal, Orientation::adjoint}) {
                SkewElement f = random_nonzero_skew(s, o, rng, false);
                SkewElement g = random_nonzero_skew(s, o, rng, false);
                SkewElement fg = skew_mul(s, f, g);
                for (const KPlace& p : kps) {
                    Gauge wf = gauge_at_kplace(s, f, p);
                    Gauge wg = gauge_at_kplace(s, g, p);
                    Gauge wfg = gauge_at_kplace(s, fg, p);
                    if (!wf.finite || !wg.finite) continue;
                    if (wfg < Gauge::of(wf.v + wg.v)) {
                        detail = "violated at trial " + std::to_string(t);
                        return false;
                    }
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("adjoint-involution", [&](std::string& detail) {
        auto rng = trial_rng(seed, 4);
        std::vector<KPlace> kps = {KPlace::infinity(F), KPlace::rational(F, s.c),
                                   KPlace::rational(F, 0)};
        for (int t = 0; t < 100; ++t) {
            SkewElement f = random_skew(s, Orientation::primal, rng, false);
            SkewElement g = random_skew(s, Orientation::primal, rng, false);
            if (adjoint(s, adjoint(s, f)) != f) {
                detail = "not an involution";
                return false;
            }
            if (adjoint(s, skew_mul(s, f, g)) != skew_mul(s, adjoint(s, g), adjoint(s, f))) {
                detail = "not an anti-morphism";
                return false;
            }
            if (f.is_zero()) continue;
            for (const KPlace& p : kps) {
                if (!(gauge_at_kplace(s, f, p) == gauge_at_kplace(s, adjoint(s, f), p))) {
                    detail = "gauge not preserved";
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("riemann-roch", [&](std::string& detail) {
        auto rng = trial_rng(seed, 5);
        for (int t = 0; t < 25; ++t) {
            for (Orientation o : {Orientation::primal, Orientation::adjoint}) {
                DDivisor a = random_divisor(s, rng);
                auto rep = check_rr(s, a, o);
                if (!rep.ok) {
                    detail = "identity failed on " + a.to_string();
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("riemann-roch-extended", [&](std::string& detail) {
        auto rng = trial_rng(seed, 6);
        for (int t = 0; t < 25; ++t) {
            ExtendedDivisor e = make_extended(s, random_divisor(s, rng), random_subspaces(s, rng));
            const Orientation o = (t % 2 == 0) ? Orientation::primal : Orientation::adjoint;
            if (!check_rr_extended(s, e, o).ok) {
                detail = "identity failed on " + e.a.to_string();
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_one("vanishing-full-constraints", [&](std::string& detail) {
        // Lambda(A, V_D) must coincide with Lambda(A - CoNr(D))
        const long long big =
            static_cast<long long>(s.r) * static_cast<long long>(s.eval_points.size()) + 1;
        DDivisor a;
        a.set(s.infinity_place(), Rat(big));
        std::vector<FqMatrix> full(s.eval_points.size(), FqMatrix::identity(F, s.r));
        ExtendedBasis eb = extended_basis(s, make_extended(s, a, full), Orientation::primal);
        RRSpace shifted(s, a - conorm_of_eval_divisor(s), Orientation::primal);
        if (eb.dim() != shifted.dim()) {
            detail = "dimension mismatch";
            return false;
        }
        RRSpace ambient(s, a, Orientation::primal);
        std::vector<std::vector<Fe>> rows;
        for (const auto& e : eb.basis) {
            auto c = ambient.coords(e);
            if (!c) return false;
            rows.push_back(*c);
        }
        std::size_t nx = rows.size();
        for (const auto& e : shifted.basis()) {
            auto c = ambient.coords(e);
            if (!c) {
                detail = "shifted basis escapes the ambient space";
                return false;
            }
            rows.push_back(*c);
        }
        FqMatrix all = FqMatrix::from_rows(F, rows);
        FqMatrix first(F, nx, all.cols());
        for (std::size_t i = 0; i < nx; ++i) first.set_row(i, all.row(i));
        if (all.rank() != first.rank() || first.rank() != nx) {
            detail = "span mismatch";
            return false;
        }
        return true;
    }));

    out.push_back(run_one("galois-product-containment", [&](std::string& detail) {
        auto rng = trial_rng(seed, 7);
        std::uniform_int_distribution<std::uint32_t> small(0, 4);
        std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
        for (int t = 0; t < 25; ++t) {
            DDivisor a1 = random_divisor(s, rng);
            DDivisor a2;
            a2.set(s.infinity_place(), Rat(small(rng)));
            a2.set(s.inert_place(), Rat(small(rng), s.r));
            RRSpace sp1(s, a1, Orientation::adjoint);
            RRSpace sp2(s, a2, Orientation::adjoint);
            RRSpace sum(s, a1 + a2, Orientation::adjoint);
            if (sp1.dim() == 0 || sp2.dim() == 0) continue;
            std::vector<Fe> c1(sp1.dim()), c2(sp2.dim());
            for (auto& v : c1) v = dist(rng);
            for (auto& v : c2) v = dist(rng);
            SkewElement prod = skew_mul(s, sp1.combine(c1), sp2.combine(c2));
            if (!sum.contains(prod)) {
                detail = "product escaped the sum space";
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_one("evaluation-morphism", [&](std::string& detail) {
        auto rng = trial_rng(seed, 8);
        for (int t = 0; t < 100; ++t) {
            for (Orientation o : {Orientation::primal, Orientation::adjoint}) {
                SkewElement f = random_skew(s, o, rng, true);
                SkewElement g = random_skew(s, o, rng, true);
                SkewElement fg = skew_mul(s, f, g);
                for (std::size_t i = 0; i < s.eval_points.size(); ++i) {
                    if (eval_place(s, fg, i) != eval_place(s, f, i) * eval_place(s, g, i)) {
                        detail = "not multiplicative";
                        return false;
                    }
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("adjoint-transpose", [&](std::string& detail) {
        auto rng = trial_rng(seed, 9);
        for (int t = 0; t < 100; ++t) {
            SkewElement f = random_skew(s, Orientation::primal, rng, true);
            SkewElement fs = adjoint(s, f);
            for (std::size_t i = 0; i < s.eval_points.size(); ++i) {
                if (eval_place(s, f, i).transpose() != eval_place(s, fs, i)) {
                    detail = "transpose mismatch";
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("reduced-trace", [&](std::string& detail) {
        auto rng = trial_rng(seed, 10);
        for (int t = 0; t < 100; ++t) {
            SkewElement f = random_skew(s, Orientation::primal, rng, true);
            RatFunc tr = reduced_trace(s, f);
            for (std::size_t i = 0; i < s.eval_points.size(); ++i) {
                auto v = tr.eval(s.beta[i]);
                if (!v || eval_place(s, f, i).trace() != *v) {
                    detail = "trace mismatch";
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("duality-orthogonality", [&](std::string& detail) {
        // uses the bundle's stored generator matrix
        CodeInstance dual = bundle.instantiate().dual();
        const FqMatrix& g = bundle.generator();
        const std::size_t n = g.cols();
        if (g.rank() + dual.generator().rank() != n) {
            detail = "dimensions do not sum to s*r^2";
            return false;
        }
        const std::size_t nblocks = s.eval_points.size();
        for (std::size_t x = 0; x < g.rows(); ++x) {
            BlockWord wx = BlockWord::from_flat(F, nblocks, s.r, g.row(x));
            for (std::size_t y = 0; y < dual.generator().rows(); ++y) {
                BlockWord wy = BlockWord::from_flat(F, nblocks, s.r, dual.generator().row(y));
                if (pairing(wx, wy) != 0) {
                    detail = "rows " + std::to_string(x) + "," + std::to_string(y) +
                             " fail to pair to zero";
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_one("evaluation-surjectivity", [&](std::string& detail) {
        auto rng = trial_rng(seed, 11);
        const Rat bound = Rat(2) * genus(s) - Rat(2);
        int done = 0;
        while (done < 25) {
            ExtendedDivisor e = make_extended(s, random_divisor(s, rng), random_subspaces(s, rng));
            if (e.degree() <= bound) continue;
            ++done;
            RRSpace ambient(s, e.a, Orientation::primal);
            if (restriction_matrix(s, ambient, e).rank() !=
                static_cast<std::size_t>(s.r) * e.dim_w()) {
                detail = "rank below r * dim W";
                return false;
            }
        }
        return true;
    }));

    if (bundle.strict()) {
        out.push_back(run_one("decode-roundtrip", [&](std::string& detail) {
            CodeInstance code = bundle.instantiate();
            DecoderContext ctx(code);
            const std::size_t nblocks = s.eval_points.size();
            int trial = 0;
            for (long long w = 0; w <= ctx.rho(); ++w) {
                for (int t = 0; t < 5; ++t, ++trial) {
                    auto rng = trial_rng(seed, 1000 + trial);
                    auto msg = random_message(F, code.dim(), rng);
                    BlockWord e = random_error(F, nblocks, s.r, w, rng);
                    DecodeResult res = ctx.decode(code.encode(msg) + e);
                    if (!res.ok() || *res.error != e || *res.message != msg) {
                        detail = "failed at weight " + std::to_string(w);
                        return false;
                    }
                }
            }
            return true;
        }));
    }

    return out;
}

}  // namespace lagc
