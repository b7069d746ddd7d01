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

#ifndef LAGC_TEST_UTIL_HPP
#define LAGC_TEST_UTIL_HPP

#include <random>

#include "lagc/kummer.hpp"
#include "lagc/skew.hpp"

namespace lagc::testutil {

// q=5, r=2, zeta=4, c=2, split evaluation places at s=1 and s=4
inline KummerSetup ref_a() {
    SetupConfig cfg;
    cfg.p = 5;
    cfg.r = 2;
    cfg.c = 2;
    cfg.zeta = 4;
    cfg.eval_points = {1, 4};
    return setup_validate(cfg);
}

// q=13, r=3, zeta=3, c=2, split evaluation places at the four cubes
inline KummerSetup ref_b() {
    SetupConfig cfg;
    cfg.p = 13;
    cfg.r = 3;
    cfg.c = 2;
    cfg.zeta = 3;
    cfg.eval_points = {1, 5, 8, 12};
    return setup_validate(cfg);
}

inline Poly random_poly(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> cdist(0, f.q() - 1);
    std::uniform_int_distribution<std::size_t> ddist(0, max_deg);
    std::vector<Fe> c(ddist(rng) + 1);
    for (auto& v : c) v = cdist(rng);
    return Poly(f, std::move(c));
}

inline Poly random_nonzero_poly(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
    while (true) {
        Poly p = random_poly(f, max_deg, rng);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
    return RatFunc(random_poly(f, max_deg, rng), random_nonzero_poly(f, max_deg, rng));
}

inline RatFunc random_nonzero_ratfunc(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
    return RatFunc(random_nonzero_poly(f, max_deg, rng), random_nonzero_poly(f, max_deg, rng));
}

inline SkewElement random_skew(const KummerSetup& s, Orientation o, std::size_t max_deg,
                               std::mt19937_64& rng) {
    std::vector<RatFunc> c;
    for (unsigned j = 0; j < s.r; ++j) c.push_back(random_ratfunc(s.F, max_deg, rng));
    return SkewElement(o, std::move(c));
}

inline SkewElement random_nonzero_skew(const KummerSetup& s, Orientation o, std::size_t max_deg,
                                       std::mt19937_64& rng) {
    while (true) {
        SkewElement f = random_skew(s, o, max_deg, rng);
        if (!f.is_zero()) return f;
    }
}

// A non-evaluation inert place of degree r: the fiber above s = v for the
// smallest v that is not an r-th power and not c.
inline Place extra_inert_place(const KummerSetup& s) {
    for (Fe v = 2; v < s.F.q(); ++v) {
        if (v == s.c) continue;
        const bool is_power = std::any_of(s.eval_points.begin(), s.eval_points.end(),
                                          [&](Fe a) { return a == v; });
        if (is_power) continue;
        FiberData fd = decompose_kplace(s, KPlace::rational(s.F, v));
        if (fd.places.size() == 1 && fd.places.front().degree() == s.r &&
            !(fd.places.front() == s.inert_place()))
            return fd.places.front();
    }
    throw std::logic_error("no spare inert place in this field");
}

// Random divisor supported on a fixed pool away from the evaluation fibers:
// infinity, the inert place (fractional coefficients), u = 0, and a degree-r
// place above a non-power coordinate.
inline DDivisor random_divisor(const KummerSetup& s, std::mt19937_64& rng,
                               bool away_from_eval = true) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 1);
    DDivisor a;
    a.set(s.infinity_place(), Rat(coeff(rng)));
    a.set(Place::rational(s.F, 0), Rat(coeff(rng)));
    // coefficient at the inert place: multiple of 1/r within b_P's bound
    a.set(s.inert_place(), Rat(coeff(rng), s.r));
    if (s.r > 1 && pick(rng)) a.set(extra_inert_place(s), Rat(coeff(rng)));
    if (!away_from_eval && pick(rng)) {
        a.set(s.fiber_place(0, 0), Rat(coeff(rng)));
    }
    return a;
}

}  // namespace lagc::testutil

#endif
