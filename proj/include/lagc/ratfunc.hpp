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

#ifndef LAGC_RATFUNC_HPP
#define LAGC_RATFUNC_HPP

#include <optional>
#include <string>

#include "lagc/poly.hpp"

namespace lagc {

/// Rational function num/den over GF(q), always reduced (gcd = 1) with monic
/// denominator; zero is 0/1. Immutable value type.
class RatFunc {
   public:
    explicit RatFunc(Field f) : num_(Poly(std::move(f))), den_(Poly::constant(num_.field(), 1)) {}
    RatFunc(Poly num);             // NOLINT: polynomials embed implicitly
    RatFunc(Poly num, Poly den);   // normalizes; throws on zero denominator
    static RatFunc constant(const Field& f, Fe c) { return RatFunc(Poly::constant(f, c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Field& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(Fe s) const;
    RatFunc operator/(const RatFunc& o) const;  // throws on zero divisor
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Value at u = at; nullopt at a pole.
    std::optional<Fe> eval(Fe at) const;

    /// Valuation at the finite place given by a monic irreducible pi.
    long long val_finite(const Poly& pi) const;
    /// Valuation at the place at infinity: deg(den) - deg(num).
    long long val_infinity() const;

    std::string to_string(const std::string& var = "u") const;

   private:
    Poly num_, den_;
};

}  // namespace lagc

#endif
