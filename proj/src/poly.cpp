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

#include "lagc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagc {

long long Degree::value() const {
    if (neg_inf_) throw std::domain_error("degree of the zero polynomial has no integer value");
    return v_;
}

Poly::Poly(Field f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (Fe c : c_)
        if (c >= f_.q()) throw std::invalid_argument("coefficient out of field range");
    prune();
}

Poly Poly::constant(const Field& f, Fe c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Fe c, std::size_t deg) {
    std::vector<Fe> v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
}

std::size_t Poly::deg() const {
    if (c_.empty()) throw std::domain_error("deg() on zero polynomial");
    return c_.size() - 1;
}

Fe Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Fe> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_.neg(c_[i]);
    Poly p(f_);
    p.c_ = std::move(r);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<Fe> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(Fe s) const {
    std::vector<Fe> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_.mul(c_[i], s);
    return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
    return *this * f_.inv(leading());
}

Fe Poly::eval(Fe at) const {
    Fe v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = f_.add(f_.mul(v, at), c_[i]);
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Fe> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = f_.mul(c_[i], f_.from_int(i));  // i acts through the prime subfield
    return Poly(f_, std::move(r));
}

Poly Poly::scale_arg(Fe s) const {
    std::vector<Fe> r(c_.size());
    Fe sp = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = f_.mul(c_[i], sp);
        sp = f_.mul(sp, s);
    }
    return Poly(f_, std::move(r));
}

Poly Poly::compose_power(unsigned r) const {
    if (is_zero()) return Poly(f_);
    std::vector<Fe> v((c_.size() - 1) * r + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * r] = c_[i];
    return Poly(f_, std::move(v));
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += f_.to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.is_zero() || a.deg() < b.deg()) return {Poly(f), a};
    const Fe lcinv = f.inv(b.leading());
    std::vector<Fe> rem(a.coeffs());
    std::vector<Fe> quot(a.deg() - b.deg() + 1, 0);
    for (std::size_t top = a.deg() + 1; top-- > b.deg();) {
        if (rem[top] == 0) continue;
        const Fe q = f.mul(rem[top], lcinv);
        quot[top - b.deg()] = q;
        for (std::size_t j = 0; j <= b.deg(); ++j)
            rem[top - b.deg() + j] = f.sub(rem[top - b.deg() + j], f.mul(q, b.coeff(j)));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly result = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) result = (result * b) % mod;
        e >>= 1;
        if (e > 0) b = (b * b) % mod;
    }
    return result;
}

unsigned multiplicity(const Poly& a, const Poly& d) {
    if (a.is_zero()) throw std::domain_error("multiplicity in zero polynomial");
    if (d.is_zero() || d.deg() == 0) throw std::domain_error("multiplicity of constant divisor");
    unsigned m = 0;
    Poly cur = a;
    while (true) {
        auto [q, r] = divmod(cur, d);
        if (!r.is_zero()) return m;
        ++m;
        cur = q;
    }
}

}  // namespace lagc
