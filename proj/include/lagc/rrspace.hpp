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

#ifndef LAGC_RRSPACE_HPP
#define LAGC_RRSPACE_HPP

#include <optional>
#include <span>

#include "lagc/eval.hpp"
#include "lagc/matrix.hpp"
#include "lagc/skew.hpp"

namespace lagc {

/// Monomial-shaped basis of the classical Riemann-Roch space L(B) on the rational
/// function field: elements u^k * req / den for 0 <= k <= kmax, with den collecting
/// the positive part of B and req the forced zeros. dim = kmax + 1 (or 0).
struct LBasisPart {
    Poly den;
    Poly req;
    long long kmax = -1;

    explicit LBasisPart(const Field& f) : den(Poly::constant(f, 1)), req(den) {}
    std::size_t dim() const { return kmax < 0 ? 0 : static_cast<std::size_t>(kmax) + 1; }
    RatFunc element(std::size_t k) const;
    /// Coordinates of f in this basis; nullopt when f is outside the space.
    std::optional<std::vector<Fe>> coords(const RatFunc& f) const;
};

/// Basis data of L(B) for an integer divisor B; dim = max(0, deg B + 1).
LBasisPart rr_basis_part(const Field& f, const DDivisor& b);
std::vector<RatFunc> rr_basis_p1(const Field& f, const DDivisor& b);

/// Riemann-Roch space of the twisted algebra for a divisor A, realized through the
/// layer decomposition: the T^i layer is L(pi_i(A)). Carries enough structure to
/// map elements to coordinate vectors over GF(q) and back.
class RRSpace {
   public:
    RRSpace(const KummerSetup& s, DDivisor a, Orientation o);

    const KummerSetup& setup() const { return setup_; }
    const DDivisor& divisor() const { return a_; }
    Orientation orientation() const { return o_; }
    std::size_t dim() const { return dim_; }
    const std::vector<SkewElement>& basis() const { return basis_; }

    SkewElement combine(std::span<const Fe> coords) const;
    std::optional<std::vector<Fe>> coords(const SkewElement& f) const;
    bool contains(const SkewElement& f) const { return coords(f).has_value(); }

   private:
    KummerSetup setup_;
    DDivisor a_;
    Orientation o_;
    std::vector<LBasisPart> parts_;
    std::vector<SkewElement> basis_;
    std::size_t dim_ = 0;
};

/// Divisor away from the evaluation fibers plus per-place vanishing subspaces,
/// each W_i stored as a reduced-echelon basis matrix (possibly 0 x r).
struct ExtendedDivisor {
    DDivisor a;
    std::vector<FqMatrix> w;

    Rat degree() const;
    std::size_t dim_w() const;
};

/// Normalizes the W_i to reduced echelon bases and validates the support of A.
ExtendedDivisor make_extended(const KummerSetup& s, DDivisor a, std::vector<FqMatrix> w);

/// (K + CoNr(D) - A, W-perp) with the coordinate dot product on each fiber.
ExtendedDivisor dual_extended(const KummerSetup& s, const ExtendedDivisor& e);

/// Rows constrain the coordinates of Lambda(A): one row per (place, W-basis vector,
/// output coordinate), entries epsilon'_i(f_j) w. Rank r * dim W once
/// deg(A,W) > 2g-2.
FqMatrix restriction_matrix(const KummerSetup& s, const RRSpace& ambient,
                            const ExtendedDivisor& e);

struct ExtendedBasis {
    RRSpace ambient;
    FqMatrix kernel_coords;           // rows: coordinates of the basis in ambient
    std::vector<SkewElement> basis;

    std::size_t dim() const { return kernel_coords.rows(); }
};

ExtendedBasis extended_basis(const KummerSetup& s, const ExtendedDivisor& e, Orientation o);

struct RRIdentityReport {
    long long lambda_a = 0;       // dimension on the stated side
    long long lambda_dual = 0;    // dimension of the complementary space
    Rat deg_term;                 // r deg(...) + r (1 - g)
    bool ok = false;
};

/// lambda_o(A) = r deg A + r(1-g) + lambda_{-o}(K - A), exact.
RRIdentityReport check_rr(const KummerSetup& s, const DDivisor& a, Orientation o);

/// lambda_o(A,W) = r deg(A,W) + r(1-g) + lambda_{-o}((K + CoNr(D) - A, W-perp)).
RRIdentityReport check_rr_extended(const KummerSetup& s, const ExtendedDivisor& e, Orientation o);

}  // namespace lagc

#endif
