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

#ifndef LAGC_POLY_HPP
#define LAGC_POLY_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "lagc/field.hpp"

namespace lagc {

/// Degree of a univariate polynomial. The zero polynomial has degree minus infinity,
/// kept as an explicit state so it can never be confused with an integer.
class Degree {
   public:
    static Degree neg_inf() { return Degree(true, 0); }
    Degree(long long d) : neg_inf_(false), v_(d) {}  // NOLINT: implicit by design

    bool is_neg_inf() const { return neg_inf_; }
    long long value() const;  // throws on minus infinity

    Degree operator+(const Degree& o) const {
        if (neg_inf_ || o.neg_inf_) return neg_inf();
        return Degree(v_ + o.v_);
    }
    friend bool operator==(const Degree& a, const Degree& b) {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.neg_inf_ && b.neg_inf_) return std::strong_ordering::equal;
        if (a.neg_inf_) return std::strong_ordering::less;
        if (b.neg_inf_) return std::strong_ordering::greater;
        return a.v_ <=> b.v_;
    }

   private:
    Degree(bool ninf, long long v) : neg_inf_(ninf), v_(v) {}
    bool neg_inf_;
    long long v_;
};

/// Univariate polynomial over GF(q) in canonical form (no trailing zero coefficients;
/// the zero polynomial is the empty coefficient sequence). Immutable value type.
class Poly {
   public:
    explicit Poly(Field f) : f_(std::move(f)) {}                  // zero
    Poly(Field f, std::vector<Fe> coeffs);                        // c[i] is the u^i coefficient
    static Poly constant(const Field& f, Fe c);
    static Poly monomial(const Field& f, Fe c, std::size_t deg);  // c * u^deg

    const Field& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    Degree degree() const {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long long>(c_.size()) - 1);
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const;
    Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Fe>& coeffs() const { return c_; }
    Fe leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Fe s) const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;  // throws on zero
    Fe eval(Fe at) const;
    Poly derivative() const;
    /// p(s*u) — coefficient c_k becomes c_k * s^k.
    Poly scale_arg(Fe s) const;
    /// p(u^r) — coefficients spread out by stride r.
    Poly compose_power(unsigned r) const;

    /// Total order usable as a map key (field-compatible operands assumed).
    static int compare(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var = "u") const;

   private:
    void prune();

    Field f_;
    std::vector<Fe> c_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor); throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);

/// Multiplicity of the factor d in a (d nonconstant); 0 if d does not divide a.
unsigned multiplicity(const Poly& a, const Poly& d);

}  // namespace lagc

#endif
