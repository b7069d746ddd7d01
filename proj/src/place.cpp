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

#include "lagc/place.hpp"

#include <stdexcept>

namespace lagc {

Place Place::finite(Poly monic_irreducible) {
    if (monic_irreducible.is_zero() || monic_irreducible.deg() == 0)
        throw std::invalid_argument("place polynomial must be nonconstant");
    if (!monic_irreducible.is_monic())
        throw std::invalid_argument("place polynomial must be monic");
    Place p(monic_irreducible.field());
    p.pi_ = std::move(monic_irreducible);
    return p;
}

Place Place::rational(const Field& f, Fe a) {
    return finite(Poly(f, {f.neg(a), 1}));
}

const Poly& Place::poly() const {
    if (is_infinity()) throw std::domain_error("no polynomial at infinity");
    return *pi_;
}

bool Place::operator==(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return false;
    if (is_infinity()) return true;
    return *pi_ == *o.pi_;
}

bool Place::operator<(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return is_infinity();
    if (is_infinity()) return false;
    return Poly::compare(*pi_, *o.pi_) < 0;
}

std::string Place::to_string(const std::string& var) const {
    if (is_infinity()) return "inf";
    return "(" + pi_->to_string(var) + ")";
}

Rat DDivisor::coeff(const Place& p) const {
    auto it = c_.find(p);
    return it == c_.end() ? Rat(0) : it->second;
}

void DDivisor::set(const Place& p, const Rat& c) {
    if (c == Rat(0))
        c_.erase(p);
    else
        c_[p] = c;
}

void DDivisor::add(const Place& p, const Rat& c) { set(p, coeff(p) + c); }

Rat DDivisor::degree() const {
    Rat d(0);
    for (const auto& [p, c] : c_) d += c * Rat(p.degree());
    return d;
}

bool DDivisor::is_integral() const {
    for (const auto& [p, c] : c_)
        if (!rat_is_integer(c)) return false;
    return true;
}

DDivisor DDivisor::operator+(const DDivisor& o) const {
    DDivisor r = *this;
    for (const auto& [p, c] : o.c_) r.add(p, c);
    return r;
}

DDivisor DDivisor::operator-(const DDivisor& o) const {
    DDivisor r = *this;
    for (const auto& [p, c] : o.c_) r.add(p, -c);
    return r;
}

DDivisor DDivisor::operator*(const Rat& s) const {
    DDivisor r;
    if (s == Rat(0)) return r;
    for (const auto& [p, c] : c_) r.c_[p] = c * s;
    return r;
}

bool DDivisor::dominates(const DDivisor& o) const {
    for (const auto& [p, c] : c_)
        if (c < o.coeff(p)) return false;
    for (const auto& [p, c] : o.c_)
        if (coeff(p) < c) return false;
    return true;
}

std::string DDivisor::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : c_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*" + p.to_string(var);
    }
    return s;
}

}  // namespace lagc
