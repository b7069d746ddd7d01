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

#ifndef LAGC_KUMMER_HPP
#define LAGC_KUMMER_HPP

#include <optional>
#include <vector>

#include "lagc/place.hpp"
#include "lagc/ratfunc.hpp"

namespace lagc {

/// Input parameters for a split Kummer tower K = GF(q)(s) inside L = GF(q)(u),
/// s = u^r, with the cyclic algebra built on x = s - c.
struct SetupConfig {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::vector<Fe> modulus;  // degree-m monic irreducible over GF(p); empty when m == 1
    unsigned r = 0;
    Fe c = 0;
    std::optional<Fe> zeta;   // derived from a group generator when absent
    std::vector<Fe> eval_points;  // a_1..a_s: distinct nonzero r-th powers, != c
};

/// Validated Kummer instantiation. L/K is cyclic of degree r with Galois action
/// theta(u) = zeta^{-1} u; x = u^r - c is irreducible over GF(q), which certifies
/// that the twisted algebra on T^r = x is division. Evaluation places s = a_i are
/// totally split with fiber ordered (beta_i, zeta*beta_i, ..., zeta^{r-1}*beta_i).
/// The place s = infinity is totally ramified of degree one and never evaluated.
class KummerSetup {
   public:
    explicit KummerSetup(Field f) : F(std::move(f)) {}

    Field F;
    unsigned r = 0;
    Fe zeta = 0;
    Fe zeta_inv = 0;
    Fe c = 0;
    std::vector<Fe> eval_points;
    std::vector<Fe> beta;  // beta[i]^r = eval_points[i], smallest root chosen

    unsigned num_eval_places() const { return static_cast<unsigned>(eval_points.size()); }

    /// x = u^r - c as a function on L.
    RatFunc x_func() const;
    /// x(a_i) = a_i - c.
    Fe x_at(std::size_t i) const { return F.sub(eval_points[i], c); }

    Place infinity_place() const { return Place::infinity(F); }
    /// The inert place above s = c (the zero of u^r - c), of degree r.
    Place inert_place() const;
    /// Fiber point j above evaluation place i: zeta^j * beta_i.
    Fe fiber_point(std::size_t i, unsigned j) const;
    /// Degree-one place u = fiber_point(i, j).
    Place fiber_place(std::size_t i, unsigned j) const;

    /// Valuation of x at an L-place (equals e_P * v_P(x) for the K-place below).
    long long w_x(const Place& q) const;
    /// b_P of the K-place below: r / gcd(w_x, r).
    long long b_of(const Place& q) const;

    /// Galois action on functions: (theta f)(u) = f(zeta^{-1} u).
    Poly theta(const Poly& f, long long power = 1) const;
    RatFunc theta(const RatFunc& f, long long power = 1) const;
    /// Galois action on places: the zero of f moves by u -> zeta u.
    Place theta(const Place& q, long long power = 1) const;

    /// Places above the K-place below q, i.e. the theta-orbit of q, sorted.
    std::vector<Place> fiber_of(const Place& q) const;
};

KummerSetup setup_validate(const SetupConfig& cfg);

/// K-place: finite places are monic irreducibles in s.
class KPlace {
   public:
    static KPlace infinity(const Field& f) { return KPlace(Place::infinity(f)); }
    static KPlace rational(const Field& f, Fe a) { return KPlace(Place::rational(f, a)); }
    static KPlace finite(Poly monic_irreducible_in_s) {
        return KPlace(Place::finite(std::move(monic_irreducible_in_s)));
    }
    const Place& as_place() const { return p_; }  // polynomial read in the variable s
    bool is_infinity() const { return p_.is_infinity(); }
    unsigned degree() const { return p_.degree(); }
    bool operator==(const KPlace& o) const { return p_ == o.p_; }

   private:
    explicit KPlace(Place p) : p_(std::move(p)) {}
    Place p_;
};

struct FiberData {
    std::vector<Place> places;
    unsigned e = 1;       // common ramification index
    unsigned f_deg = 1;   // common residue degree
    long long b = 1;      // r / gcd(e * v_P(x), r)
};

/// Decomposition of a K-place in L: factor the pullback of its polynomial
/// through s = u^r (infinity stays totally ramified).
FiberData decompose_kplace(const KummerSetup& setup, const KPlace& P);

/// e_P * (sum of places above P), scaled by coeff.
DDivisor conorm(const KummerSetup& setup, const KPlace& P, const Rat& coeff = Rat(1));

/// CoNr(D) for the evaluation divisor D = sum of the s = a_i places.
DDivisor conorm_of_eval_divisor(const KummerSetup& setup);

/// Equal coefficients across every theta-orbit.
bool is_galois(const KummerSetup& setup, const DDivisor& a);

/// Sum over places of (b_P - 1)/b_P; here ((r-1)/r) * (inert place).
DDivisor different_delta(const KummerSetup& setup);

/// 2g - 2 = deg(K_L) + deg(Delta) with deg(K_L) = -2.
Rat genus(const KummerSetup& setup);

/// Zeros minus poles; the infinity coefficient is deg(den) - deg(num).
DDivisor divisor_of(const RatFunc& f);

/// Divisor of h*du on the rational field: divisor_of(h) - 2*infinity.
DDivisor differential_divisor(const RatFunc& h);

/// t_D = prod_i (s - a_i), expressed in u.
Poly t_d_poly(const KummerSetup& setup);

/// Divisor of (dt_D / t_D) plus Delta; degree is checked to equal 2g - 2.
DDivisor canonical_divisor(const KummerSetup& setup);

/// Coefficientwise floor(A_Q + i * w_Q(x)/r) for orientation +1,
/// floor(A_Q - i * w_Q(x)/r) for orientation -1. Output has integer coefficients.
DDivisor pi_map(const KummerSetup& setup, const DDivisor& a, unsigned i, int orientation);

/// Every coefficient denominator must divide b_P of the place; throws otherwise.
void check_denominators(const KummerSetup& setup, const DDivisor& a);

}  // namespace lagc

#endif
