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

#include "lagc/rrspace.hpp"

#include <stdexcept>

namespace lagc {

RatFunc LBasisPart::element(std::size_t k) const {
    if (kmax < 0 || k > static_cast<std::size_t>(kmax))
        throw std::out_of_range("basis index out of range");
    return RatFunc(Poly::monomial(den.field(), 1, k) * req, den);
}

std::optional<std::vector<Fe>> LBasisPart::coords(const RatFunc& f) const {
    if (f.is_zero()) return std::vector<Fe>(dim(), 0);
    if (dim() == 0) return std::nullopt;
    // f = p(u) * req / den with deg p <= kmax  <=>  f * den = p * req exactly
    const RatFunc scaled = f * RatFunc(den);
    if (!scaled.is_polynomial()) return std::nullopt;
    auto [p, rem] = divmod(scaled.num(), req);
    if (!rem.is_zero()) return std::nullopt;
    if (p.degree() > Degree(kmax)) return std::nullopt;
    std::vector<Fe> out(dim(), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k);
    return out;
}

LBasisPart rr_basis_part(const Field& f, const DDivisor& b) {
    if (!b.is_integral()) throw std::invalid_argument("classical space needs integer divisor");
    LBasisPart part{f};
    long long inf_coeff = 0;
    for (const auto& [q, c] : b.support()) {
        const long long n = c.numerator();
        if (q.is_infinity()) {
            inf_coeff = n;
            continue;
        }
        for (long long k = 0; k < (n > 0 ? n : -n); ++k) {
            if (n > 0)
                part.den = part.den * q.poly();
            else
                part.req = part.req * q.poly();
        }
    }
    part.kmax = static_cast<long long>(part.den.deg()) + inf_coeff -
                static_cast<long long>(part.req.deg());
    return part;
}

std::vector<RatFunc> rr_basis_p1(const Field& f, const DDivisor& b) {
    const LBasisPart part = rr_basis_part(f, b);
    std::vector<RatFunc> out;
    for (std::size_t k = 0; k < part.dim(); ++k) out.push_back(part.element(k));
    return out;
}

namespace {

// Every basis element must satisfy omega_Q(f) + A_Q >= 0 on the interesting places.
void assert_membership(const KummerSetup& s, const DDivisor& a, const SkewElement& f) {
    std::vector<Place> places = {s.infinity_place(), s.inert_place()};
    for (const auto& [q, c] : a.support()) places.push_back(q);
    for (const Place& q : places) {
        const Gauge g = gauge_at(s, f, q);
        if (!g.finite) continue;
        if (g.v + a.coeff(q) < Rat(0))
            throw std::logic_error("basis element violates its divisor bound at " + q.to_string());
    }
}

}  // namespace

RRSpace::RRSpace(const KummerSetup& s, DDivisor a, Orientation o)
    : setup_(s), a_(std::move(a)), o_(o) {
    check_denominators(s, a_);
    for (unsigned i = 0; i < s.r; ++i) {
        DDivisor layer = pi_map(s, a_, i, sign_of(o));
        parts_.push_back(rr_basis_part(s.F, layer));
        for (std::size_t k = 0; k < parts_.back().dim(); ++k) {
            basis_.push_back(SkewElement::monomial(s, o_, parts_.back().element(k), i));
            assert_membership(s, a_, basis_.back());
        }
    }
    dim_ = basis_.size();
}

SkewElement RRSpace::combine(std::span<const Fe> coords) const {
    if (coords.size() != dim_) throw std::invalid_argument("coordinate length mismatch");
    SkewElement acc = SkewElement::zero(setup_, o_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (coords[j] == 0) continue;
        acc = acc + basis_[j] * coords[j];
    }
    return acc;
}

std::optional<std::vector<Fe>> RRSpace::coords(const SkewElement& f) const {
    if (f.orientation() != o_) return std::nullopt;
    std::vector<Fe> out;
    out.reserve(dim_);
    for (unsigned i = 0; i < setup_.r; ++i) {
        auto layer = parts_[i].coords(f.coeff(i));
        if (!layer) return std::nullopt;
        out.insert(out.end(), layer->begin(), layer->end());
    }
    return out;
}

Rat ExtendedDivisor::degree() const { return a.degree() - Rat(static_cast<long long>(dim_w())); }

std::size_t ExtendedDivisor::dim_w() const {
    std::size_t d = 0;
    for (const auto& wi : w) d += wi.rows();
    return d;
}

ExtendedDivisor make_extended(const KummerSetup& s, DDivisor a, std::vector<FqMatrix> w) {
    if (w.size() != s.eval_points.size())
        throw std::invalid_argument("one subspace per evaluation place required");
    for (std::size_t i = 0; i < s.eval_points.size(); ++i) {
        for (unsigned j = 0; j < s.r; ++j) {
            if (a.coeff(s.fiber_place(i, j)) != Rat(0))
                throw std::invalid_argument("divisor must avoid the evaluation fibers");
        }
        if (w[i].cols() != s.r) throw std::invalid_argument("subspace ambient dimension mismatch");
        w[i] = w[i].row_basis();
    }
    check_denominators(s, a);
    return ExtendedDivisor{std::move(a), std::move(w)};
}

ExtendedDivisor dual_extended(const KummerSetup& s, const ExtendedDivisor& e) {
    DDivisor dual_a = canonical_divisor(s) + conorm_of_eval_divisor(s) - e.a;
    std::vector<FqMatrix> wperp;
    wperp.reserve(e.w.size());
    for (const auto& wi : e.w) wperp.push_back(wi.kernel());
    return make_extended(s, std::move(dual_a), std::move(wperp));
}

FqMatrix restriction_matrix(const KummerSetup& s, const RRSpace& ambient,
                            const ExtendedDivisor& e) {
    const unsigned r = s.r;
    std::size_t nrows = 0;
    for (const auto& wi : e.w) nrows += wi.rows() * r;
    FqMatrix m(s.F, nrows, ambient.dim());

    std::size_t row0 = 0;
    for (std::size_t i = 0; i < e.w.size(); ++i) {
        const FqMatrix& wi = e.w[i];
        if (wi.rows() == 0) continue;
        for (std::size_t j = 0; j < ambient.dim(); ++j) {
            const FqMatrix ev = eval_place(s, ambient.basis()[j], i);
            for (std::size_t t = 0; t < wi.rows(); ++t) {
                const std::vector<Fe> image = ev.mul_vec(wi.row(t));
                for (unsigned ell = 0; ell < r; ++ell)
                    m(row0 + t * r + ell, j) = image[ell];
            }
        }
        row0 += wi.rows() * r;
    }
    return m;
}

ExtendedBasis extended_basis(const KummerSetup& s, const ExtendedDivisor& e, Orientation o) {
    RRSpace ambient(s, e.a, o);
    FqMatrix constraints = restriction_matrix(s, ambient, e);
    FqMatrix ker = constraints.kernel();
    std::vector<SkewElement> basis;
    basis.reserve(ker.rows());
    for (std::size_t t = 0; t < ker.rows(); ++t) basis.push_back(ambient.combine(ker.row(t)));
    return ExtendedBasis{std::move(ambient), std::move(ker), std::move(basis)};
}

RRIdentityReport check_rr(const KummerSetup& s, const DDivisor& a, Orientation o) {
    RRIdentityReport rep;
    rep.lambda_a = static_cast<long long>(RRSpace(s, a, o).dim());
    const DDivisor dual = canonical_divisor(s) - a;
    rep.lambda_dual = static_cast<long long>(RRSpace(s, dual, opposite(o)).dim());
    rep.deg_term = Rat(s.r) * a.degree() + Rat(s.r) * (Rat(1) - genus(s));
    rep.ok = rat_is_integer(rep.deg_term) &&
             rep.lambda_a == rep.deg_term.numerator() + rep.lambda_dual;
    return rep;
}

RRIdentityReport check_rr_extended(const KummerSetup& s, const ExtendedDivisor& e,
                                   Orientation o) {
    RRIdentityReport rep;
    rep.lambda_a = static_cast<long long>(extended_basis(s, e, o).dim());
    rep.lambda_dual = static_cast<long long>(extended_basis(s, dual_extended(s, e), opposite(o)).dim());
    rep.deg_term = Rat(s.r) * e.degree() + Rat(s.r) * (Rat(1) - genus(s));
    rep.ok = rat_is_integer(rep.deg_term) &&
             rep.lambda_a == rep.deg_term.numerator() + rep.lambda_dual;
    return rep;
}

}  // namespace lagc
