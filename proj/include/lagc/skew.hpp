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

#ifndef LAGC_SKEW_HPP
#define LAGC_SKEW_HPP

#include <vector>

#include "lagc/kummer.hpp"

namespace lagc {

/// Which of the two twisted algebras an element lives in: the primal one with
/// relation T^r = x, or the adjoint one with T^r = x^{-1}. The adjunction maps
/// between them; arithmetic never mixes them.
enum class Orientation : int { primal = 1, adjoint = -1 };

inline int sign_of(Orientation o) { return static_cast<int>(o); }
inline Orientation opposite(Orientation o) {
    return o == Orientation::primal ? Orientation::adjoint : Orientation::primal;
}

/// Element f_0 + f_1 T + ... + f_{r-1} T^{r-1} with rational-function coefficients
/// and twisted multiplication T a = theta(a) T. Immutable value type.
class SkewElement {
   public:
    SkewElement(Orientation o, std::vector<RatFunc> coeffs);
    static SkewElement zero(const KummerSetup& s, Orientation o);
    static SkewElement one(const KummerSetup& s, Orientation o);
    static SkewElement t(const KummerSetup& s, Orientation o);  // the generator T
    static SkewElement from_scalar(const KummerSetup& s, Orientation o, RatFunc f);
    /// f * T^j.
    static SkewElement monomial(const KummerSetup& s, Orientation o, RatFunc f, unsigned j);

    Orientation orientation() const { return o_; }
    unsigned r() const { return static_cast<unsigned>(c_.size()); }
    const RatFunc& coeff(unsigned j) const { return c_[j]; }
    const Field& field() const { return c_[0].field(); }
    bool is_zero() const;

    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    SkewElement operator-() const;
    SkewElement operator*(Fe s) const;
    bool operator==(const SkewElement& o) const;
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string to_string() const;

   private:
    Orientation o_;
    std::vector<RatFunc> c_;
};

/// Product with T^j a = theta^j(a) T^j and T^r reduced to x (primal) or x^{-1}
/// (adjoint). Throws on orientation mismatch.
SkewElement skew_mul(const KummerSetup& s, const SkewElement& f, const SkewElement& g);

/// The adjunction f = sum alpha_i T^i  |->  f* = sum T^{-i} alpha_i, landing in the
/// opposite algebra. T^{-i} reduces to x^{+-1} T^{r-i} there; the exponent of x is
/// pinned by unit tests against the defining identity T * T^{-1} = 1.
SkewElement adjoint(const KummerSetup& s, const SkewElement& f);

/// Gauge value: a rational, or +infinity for the zero element.
struct Gauge {
    bool finite = true;
    Rat v = Rat(0);

    static Gauge infinite() { return Gauge{false, Rat(0)}; }
    static Gauge of(const Rat& r) { return Gauge{true, r}; }
    bool operator==(const Gauge& o) const {
        return finite == o.finite && (!finite || v == o.v);
    }
    bool operator<(const Gauge& o) const {
        if (!finite) return false;       // +inf is not less than anything
        if (!o.finite) return true;
        return v < o.v;
    }
    bool operator>=(const Gauge& o) const { return !(*this < o); }
};

/// omega_Q(f) = min_j ( w_Q(f_j) + j * w_Q(x^{+-1}) / r ), the sign matching the
/// orientation.
Gauge gauge_at(const KummerSetup& s, const SkewElement& f, const Place& q);

/// omega_P(f) = min over the fiber of omega_Q / e_P.
Gauge gauge_at_kplace(const KummerSetup& s, const SkewElement& f, const KPlace& p);

/// (f) = sum omega_Q(f) Q over the finitely many places with nonzero gauge.
DDivisor principal_divisor(const KummerSetup& s, const SkewElement& f);

/// Trd(f) = sum_k theta^k(f_0); theta-invariant, i.e. a function of s = u^r.
RatFunc reduced_trace(const KummerSetup& s, const SkewElement& f);

}  // namespace lagc

#endif
