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

#ifndef LAGC_PLACE_HPP
#define LAGC_PLACE_HPP

#include <map>
#include <optional>
#include <string>

#include "lagc/poly.hpp"
#include "lagc/rational.hpp"

namespace lagc {

/// A place of a rational function field: a monic irreducible polynomial in the
/// coordinate, or the place at infinity. Places of L live in the variable u,
/// places of K in s = u^r; both use this type.
class Place {
   public:
    static Place infinity(const Field& f) { return Place(f); }
    static Place finite(Poly monic_irreducible);
    /// The degree-one place at coordinate value a (the zero of coord - a).
    static Place rational(const Field& f, Fe a);

    bool is_infinity() const { return !pi_.has_value(); }
    const Poly& poly() const;  // throws at infinity
    const Field& field() const { return f_; }
    unsigned degree() const {
        return is_infinity() ? 1 : static_cast<unsigned>(pi_->deg());
    }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;  // infinity sorts first, then by (deg, coeffs)

    std::string to_string(const std::string& var = "u") const;

   private:
    explicit Place(Field f) : f_(std::move(f)) {}
    Field f_;
    std::optional<Poly> pi_;
};

/// Divisor with exact rational coefficients and finite support; zero-coefficient
/// entries are never stored. Degree weights each coefficient by the place degree.
class DDivisor {
   public:
    DDivisor() = default;

    Rat coeff(const Place& p) const;
    void set(const Place& p, const Rat& c);
    void add(const Place& p, const Rat& c);

    const std::map<Place, Rat>& support() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t support_size() const { return c_.size(); }

    Rat degree() const;
    bool is_integral() const;

    DDivisor operator+(const DDivisor& o) const;
    DDivisor operator-(const DDivisor& o) const;
    DDivisor operator*(const Rat& s) const;
    DDivisor operator-() const { return *this * Rat(-1); }
    bool operator==(const DDivisor& o) const { return c_ == o.c_; }
    bool operator!=(const DDivisor& o) const { return !(*this == o); }

    /// A >= B coefficientwise.
    bool dominates(const DDivisor& o) const;

    std::string to_string(const std::string& var = "u") const;

   private:
    std::map<Place, Rat> c_;
};

}  // namespace lagc

#endif
