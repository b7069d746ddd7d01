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

#include "lagc/skew.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lagc/factor.hpp"

namespace lagc {

SkewElement::SkewElement(Orientation o, std::vector<RatFunc> coeffs)
    : o_(o), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("empty coefficient vector");
}

SkewElement SkewElement::zero(const KummerSetup& s, Orientation o) {
    return SkewElement(o, std::vector<RatFunc>(s.r, RatFunc(s.F)));
}

SkewElement SkewElement::one(const KummerSetup& s, Orientation o) {
    return from_scalar(s, o, RatFunc::constant(s.F, 1));
}

SkewElement SkewElement::t(const KummerSetup& s, Orientation o) {
    if (s.r == 1) {
        // T^1 reduces immediately to x^{+-1}
        RatFunc x = s.x_func();
        return from_scalar(s, o, o == Orientation::primal ? x : x.inverse());
    }
    return monomial(s, o, RatFunc::constant(s.F, 1), 1);
}

SkewElement SkewElement::from_scalar(const KummerSetup& s, Orientation o, RatFunc f) {
    std::vector<RatFunc> c(s.r, RatFunc(s.F));
    c[0] = std::move(f);
    return SkewElement(o, std::move(c));
}

SkewElement SkewElement::monomial(const KummerSetup& s, Orientation o, RatFunc f, unsigned j) {
    if (j >= s.r) throw std::invalid_argument("monomial exponent out of range");
    std::vector<RatFunc> c(s.r, RatFunc(s.F));
    c[j] = std::move(f);
    return SkewElement(o, std::move(c));
}

bool SkewElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFunc& f) { return f.is_zero(); });
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
    if (o_ != o.o_) throw std::invalid_argument("orientation mismatch");
    std::vector<RatFunc> c;
    c.reserve(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) c.push_back(c_[j] + o.c_[j]);
    return SkewElement(o_, std::move(c));
}

SkewElement SkewElement::operator-(const SkewElement& o) const { return *this + (-o); }

SkewElement SkewElement::operator-() const {
    std::vector<RatFunc> c;
    c.reserve(c_.size());
    for (const auto& f : c_) c.push_back(-f);
    return SkewElement(o_, std::move(c));
}

SkewElement SkewElement::operator*(Fe s) const {
    std::vector<RatFunc> c;
    c.reserve(c_.size());
    for (const auto& f : c_) c.push_back(f * s);
    return SkewElement(o_, std::move(c));
}

bool SkewElement::operator==(const SkewElement& o) const {
    return o_ == o.o_ && c_ == o.c_;
}

std::string SkewElement::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[j].to_string() + ")";
        if (j > 0) s += "*T" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s.empty() ? "0" : s;
}

SkewElement skew_mul(const KummerSetup& s, const SkewElement& f, const SkewElement& g) {
    if (f.orientation() != g.orientation())
        throw std::invalid_argument("cannot multiply across orientations");
    const unsigned r = s.r;
    RatFunc x = s.x_func();
    if (f.orientation() == Orientation::adjoint) x = x.inverse();

    std::vector<RatFunc> out(r, RatFunc(s.F));
    for (unsigned i = 0; i < r; ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (unsigned j = 0; j < r; ++j) {
            if (g.coeff(j).is_zero()) continue;
            // f_i T^i * g_j T^j = f_i theta^i(g_j) T^(i+j)
            RatFunc term = f.coeff(i) * s.theta(g.coeff(j), i);
            unsigned k = i + j;
            if (k >= r) {
                k -= r;
                term = term * x;
            }
            out[k] = out[k] + term;
        }
    }
    return SkewElement(f.orientation(), std::move(out));
}

SkewElement adjoint(const KummerSetup& s, const SkewElement& f) {
    const unsigned r = s.r;
    const Orientation target = opposite(f.orientation());
    // Reduction of T^{-i} in the target algebra: under T^r = x^{-1} it is x T^{r-i},
    // under T^r = x it is x^{-1} T^{r-i}; i.e. the x-exponent is the sign of the
    // source orientation.
    RatFunc xpow = s.x_func();
    if (sign_of(f.orientation()) < 0) xpow = xpow.inverse();

    std::vector<RatFunc> out(r, RatFunc(s.F));
    out[0] = f.coeff(0);
    for (unsigned i = 1; i < r; ++i) {
        if (f.coeff(i).is_zero()) continue;
        const unsigned j = r - i;
        // T^{-i} alpha_i = x^{sigma} theta^{r-i}(alpha_i) T^{r-i}
        out[j] = out[j] + xpow * s.theta(f.coeff(i), j);
    }
    return SkewElement(target, std::move(out));
}

Gauge gauge_at(const KummerSetup& s, const SkewElement& f, const Place& q) {
    const long long wx = s.w_x(q) * sign_of(f.orientation());
    Gauge best = Gauge::infinite();
    for (unsigned j = 0; j < f.r(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        const long long w = q.is_infinity() ? f.coeff(j).val_infinity()
                                            : f.coeff(j).val_finite(q.poly());
        const Gauge g = Gauge::of(Rat(w) + Rat(static_cast<long long>(j) * wx,
                                               static_cast<long long>(s.r)));
        if (g < best) best = g;
    }
    return best;
}

Gauge gauge_at_kplace(const KummerSetup& s, const SkewElement& f, const KPlace& p) {
    const FiberData fd = decompose_kplace(s, p);
    Gauge best = Gauge::infinite();
    for (const Place& q : fd.places) {
        Gauge g = gauge_at(s, f, q);
        if (g.finite) g.v /= Rat(fd.e);
        if (g < best) best = g;
    }
    return best;
}

DDivisor principal_divisor(const KummerSetup& s, const SkewElement& f) {
    if (f.is_zero()) throw std::domain_error("principal divisor of zero");
    std::set<Place> candidates = {s.infinity_place(), s.inert_place()};
    for (unsigned j = 0; j < f.r(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        for (const Poly& part : {f.coeff(j).num(), f.coeff(j).den()}) {
            if (part.deg() == 0) continue;
            for (const auto& [p, mult] : factor(part)) candidates.insert(Place::finite(p));
        }
    }
    DDivisor d;
    for (const Place& q : candidates) {
        const Gauge g = gauge_at(s, f, q);
        if (g.finite && g.v != Rat(0)) d.set(q, g.v);
    }
    return d;
}

RatFunc reduced_trace(const KummerSetup& s, const SkewElement& f) {
    RatFunc acc(s.F);
    for (unsigned k = 0; k < s.r; ++k) acc = acc + s.theta(f.coeff(0), k);
    if (s.theta(acc) != acc) throw std::logic_error("reduced trace not theta-invariant");
    return acc;
}

}  // namespace lagc
