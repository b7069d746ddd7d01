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

#include "lagc/ratfunc.hpp"

#include <stdexcept>

namespace lagc {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Fe lc = den_.leading();
    if (lc != 1) {
        const Fe lcinv = num_.field().inv(lc);
        num_ = num_ * lcinv;
        den_ = den_ * lcinv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(Fe s) const { return RatFunc(num_ * s, den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

std::optional<Fe> RatFunc::eval(Fe at) const {
    const Fe d = den_.eval(at);
    if (d == 0) return std::nullopt;
    return field().div(num_.eval(at), d);
}

long long RatFunc::val_finite(const Poly& pi) const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return static_cast<long long>(multiplicity(num_, pi)) -
           static_cast<long long>(multiplicity(den_, pi));
}

long long RatFunc::val_infinity() const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return static_cast<long long>(den_.deg()) - static_cast<long long>(num_.deg());
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace lagc
