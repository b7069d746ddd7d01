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

#include "lagc/kummer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lagc/factor.hpp"

namespace lagc {

RatFunc KummerSetup::x_func() const {
    std::vector<Fe> cf(r + 1, 0);
    cf[0] = F.neg(c);
    cf[r] = 1;
    return RatFunc(Poly(F, std::move(cf)));
}

Place KummerSetup::inert_place() const { return Place::finite(x_func().num()); }

Fe KummerSetup::fiber_point(std::size_t i, unsigned j) const {
    return F.mul(beta[i], F.pow(zeta, j));
}

Place KummerSetup::fiber_place(std::size_t i, unsigned j) const {
    return Place::rational(F, fiber_point(i, j));
}

long long KummerSetup::w_x(const Place& q) const {
    if (q.is_infinity()) return -static_cast<long long>(r);
    if (q.degree() != r) return 0;
    return q.poly() == x_func().num() ? 1 : 0;
}

long long KummerSetup::b_of(const Place& q) const {
    const long long w = w_x(q);
    return static_cast<long long>(r) / std::gcd(w < 0 ? -w : w, static_cast<long long>(r));
}

Poly KummerSetup::theta(const Poly& f, long long power) const {
    long long k = power % r;
    if (k < 0) k += r;
    return f.scale_arg(F.pow(zeta_inv, k));
}

RatFunc KummerSetup::theta(const RatFunc& f, long long power) const {
    return RatFunc(theta(f.num(), power), theta(f.den(), power));
}

Place KummerSetup::theta(const Place& q, long long power) const {
    if (q.is_infinity()) return q;
    // the zero set of pi(zeta^{-k} u) is zeta^k times the zero set of pi
    return Place::finite(theta(q.poly(), power).monic());
}

std::vector<Place> KummerSetup::fiber_of(const Place& q) const {
    std::vector<Place> orbit;
    Place cur = q;
    for (unsigned k = 0; k < r; ++k) {
        if (std::find(orbit.begin(), orbit.end(), cur) == orbit.end()) orbit.push_back(cur);
        cur = theta(cur);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

KummerSetup setup_validate(const SetupConfig& cfg) {
    Field F = cfg.m == 1 ? Field::prime(cfg.p) : Field::extension(cfg.p, cfg.m, cfg.modulus);
    const std::uint32_t q = F.q();

    if (cfg.r == 0) throw std::invalid_argument("r must be positive");
    if ((q - 1) % cfg.r != 0) throw std::invalid_argument("r must divide q-1");

    KummerSetup s(F);
    s.r = cfg.r;

    if (cfg.zeta) {
        s.zeta = *cfg.zeta;
        if (s.zeta == 0 || F.order(s.zeta) != cfg.r)
            throw std::invalid_argument("zeta must have exact multiplicative order r");
    } else {
        s.zeta = F.pow(F.generator(), (q - 1) / cfg.r);
    }
    s.zeta_inv = F.inv(s.zeta);

    if (cfg.c == 0) throw std::invalid_argument("c must be nonzero");
    if (cfg.c >= q) throw std::invalid_argument("c out of field range");
    s.c = cfg.c;

    // u^r - c irreducible over GF(q) certifies the division-algebra hypothesis:
    // at the inert place above s = c the valuation of x is 1, so x has order r
    // modulo norms.
    {
        std::vector<Fe> cf(cfg.r + 1, 0);
        cf[0] = F.neg(cfg.c);
        cf[cfg.r] = 1;
        if (!is_irreducible(Poly(F, std::move(cf))))
            throw std::invalid_argument("u^r - c is reducible: c must not be an r-th power");
    }

    if (cfg.eval_points.empty()) throw std::invalid_argument("no evaluation points");
    if (cfg.eval_points.size() > (q - 1) / cfg.r)
        throw std::invalid_argument("more evaluation points than split rational places");

    const std::vector<Fe> powers = rth_power_classes(F, cfg.r);
    for (Fe a : cfg.eval_points) {
        if (a == 0 || a >= q) throw std::invalid_argument("evaluation point out of range");
        if (a == cfg.c) throw std::invalid_argument("evaluation point equals c");
        if (!std::binary_search(powers.begin(), powers.end(), a))
            throw std::invalid_argument("evaluation point is not an r-th power");
    }
    {
        std::vector<Fe> sorted = cfg.eval_points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated evaluation point");
    }
    s.eval_points = cfg.eval_points;

    // smallest r-th root of each a_i; the split fiber is (beta, zeta beta, ...)
    for (Fe a : s.eval_points) {
        Fe root = 0;
        for (Fe b = 1; b < q; ++b) {
            if (F.pow(b, cfg.r) == a) {
                root = b;
                break;
            }
        }
        if (root == 0) throw std::logic_error("no r-th root found");
        s.beta.push_back(root);
    }

    // the place s = infinity is totally ramified of degree 1 and is not an
    // evaluation place, so Galois auxiliary divisors are always available
    if (decompose_kplace(s, KPlace::infinity(F)).e != cfg.r)
        throw std::logic_error("infinity is not totally ramified");

    if (t_d_poly(s).derivative().is_zero())
        throw std::invalid_argument("t_D has vanishing derivative");

    return s;
}

FiberData decompose_kplace(const KummerSetup& setup, const KPlace& P) {
    FiberData out;
    if (P.is_infinity()) {
        out.places = {Place::infinity(setup.F)};
        out.e = setup.r;
        out.f_deg = 1;
        out.b = 1;  // e * v_inf(x) = -r
        return out;
    }
    const Poly& pi_s = P.as_place().poly();
    const Poly pulled = pi_s.compose_power(setup.r);  // pi(u^r)
    unsigned e = 0;
    for (const auto& [fac, mult] : factor(pulled)) {
        out.places.push_back(Place::finite(fac));
        e = mult;
    }
    out.e = e;
    out.f_deg = out.places.front().degree() / P.degree();
    // v_P(x) for x = s - c: 1 at the place s = c, 0 at every other finite place
    const long long v_x = (pi_s == Poly(setup.F, {setup.F.neg(setup.c), 1})) ? 1 : 0;
    const long long ev = static_cast<long long>(out.e) * v_x;
    out.b = static_cast<long long>(setup.r) /
            std::gcd(ev < 0 ? -ev : ev, static_cast<long long>(setup.r));
    return out;
}

DDivisor conorm(const KummerSetup& setup, const KPlace& P, const Rat& coeff) {
    const FiberData fd = decompose_kplace(setup, P);
    DDivisor d;
    for (const Place& q : fd.places) d.add(q, coeff * Rat(fd.e));
    return d;
}

DDivisor conorm_of_eval_divisor(const KummerSetup& setup) {
    DDivisor d;
    for (std::size_t i = 0; i < setup.eval_points.size(); ++i)
        for (unsigned j = 0; j < setup.r; ++j) d.add(setup.fiber_place(i, j), Rat(1));
    return d;
}

bool is_galois(const KummerSetup& setup, const DDivisor& a) {
    for (const auto& [q, coeff] : a.support()) {
        for (const Place& other : setup.fiber_of(q)) {
            if (a.coeff(other) != coeff) return false;
        }
    }
    return true;
}

DDivisor different_delta(const KummerSetup& setup) {
    DDivisor d;
    const long long b = setup.r;  // b at the inert place is r
    if (b > 1) d.set(setup.inert_place(), Rat(b - 1, b));
    return d;
}

Rat genus(const KummerSetup& setup) {
    const Rat two_g_minus_2 = Rat(-2) + different_delta(setup).degree();
    return (two_g_minus_2 + Rat(2)) / Rat(2);
}

DDivisor divisor_of(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("divisor of zero function");
    DDivisor d;
    for (const auto& [p, mult] : factor(f.num()))
        d.add(Place::finite(p), Rat(mult));
    for (const auto& [p, mult] : factor(f.den()))
        d.add(Place::finite(p), Rat(-static_cast<long long>(mult)));
    const long long inf = f.val_infinity();
    if (inf != 0) d.add(Place::infinity(f.field()), Rat(inf));
    return d;
}

DDivisor differential_divisor(const RatFunc& h) {
    DDivisor d = divisor_of(h);
    d.add(Place::infinity(h.field()), Rat(-2));
    return d;
}

Poly t_d_poly(const KummerSetup& setup) {
    Poly t = Poly::constant(setup.F, 1);
    for (Fe a : setup.eval_points) {
        std::vector<Fe> cf(setup.r + 1, 0);
        cf[0] = setup.F.neg(a);
        cf[setup.r] = 1;
        t = t * Poly(setup.F, std::move(cf));
    }
    return t;
}

DDivisor canonical_divisor(const KummerSetup& setup) {
    const Poly t = t_d_poly(setup);
    const Poly dt = t.derivative();
    if (dt.is_zero()) throw std::domain_error("t_D has vanishing derivative");
    DDivisor k = differential_divisor(RatFunc(dt, t)) + different_delta(setup);
    if (k.degree() != Rat(2) * genus(setup) - Rat(2))
        throw std::logic_error("canonical divisor degree mismatch");
    return k;
}

DDivisor pi_map(const KummerSetup& setup, const DDivisor& a, unsigned i, int orientation) {
    if (orientation != 1 && orientation != -1) throw std::invalid_argument("bad orientation");
    DDivisor out;
    // places where the shift term is nonzero must be considered even if A skips them
    std::vector<Place> extra = {setup.infinity_place(), setup.inert_place()};
    auto floor_coeff = [&](const Place& q) {
        const Rat shift = Rat(orientation * static_cast<long long>(i) * setup.w_x(q),
                              static_cast<long long>(setup.r));
        return Rat(rat_floor(a.coeff(q) + shift));
    };
    for (const auto& [q, coeff] : a.support()) out.set(q, floor_coeff(q));
    for (const Place& q : extra)
        if (a.coeff(q) == Rat(0)) out.set(q, floor_coeff(q));
    return out;
}

void check_denominators(const KummerSetup& setup, const DDivisor& a) {
    for (const auto& [q, coeff] : a.support()) {
        if (setup.b_of(q) % coeff.denominator() != 0)
            throw std::invalid_argument("divisor coefficient denominator does not divide b_P at " +
                                        q.to_string());
    }
}

}  // namespace lagc
