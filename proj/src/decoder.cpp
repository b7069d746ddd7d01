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

#include "lagc/decoder.hpp"

#include <stdexcept>

namespace lagc {

namespace {

Rat sr_of(const CodeInstance& code) {
    const KummerSetup& s = code.setup();
    return Rat(static_cast<long long>(s.eval_points.size()) * s.r);
}

DDivisor decoder_dual_divisor(const CodeInstance& code) {
    const KummerSetup& s = code.setup();
    return canonical_divisor(s) + conorm_of_eval_divisor(s) - code.divisor();
}

}  // namespace

long long rho_algo(const CodeInstance& code) {
    if (code.mode() != CodeMode::strict)
        throw std::invalid_argument("decoding radius needs a strict-mode code");
    const Rat num = sr_of(code) - code.divisor().degree() - genus(code.setup()) - Rat(1);
    return rat_floor(num / Rat(2));
}

DDivisor choose_a1(const CodeInstance& code) {
    const KummerSetup& s = code.setup();
    // Hypothesis check: the auxiliary support must sit at a non-split, non-evaluation
    // rational place; s = infinity is totally ramified of degree one in this tower.
    if (decompose_kplace(s, KPlace::infinity(s.F)).e != s.r)
        throw std::logic_error("no totally ramified rational place available");
    const long long g_deg = sr_of(code).numerator() - rho_algo(code) - 1;
    DDivisor galois_part;
    galois_part.set(s.infinity_place(), Rat(g_deg));
    return galois_part - code.divisor();
}

DecoderContext::DecoderContext(CodeInstance code)
    : code_(std::move(code)),
      rho_(rho_algo(code_)),
      a1_(choose_a1(code_)),
      loc_(code_.setup(), a1_, opposite(code_.orientation())),
      h2_(code_.setup(), decoder_dual_divisor(code_) - a1_, opposite(code_.orientation())),
      dual_(code_.setup(), decoder_dual_divisor(code_), opposite(code_.orientation())) {
    const KummerSetup& s = code_.setup();

    // auxiliary divisor conditions: A + A_1 Galois, deg(A + A_1) < sr - rho,
    // lambda(A_1) > r * rho
    if (!is_galois(s, code_.divisor() + a1_))
        throw std::logic_error("auxiliary divisor is not Galois-compatible");
    if (!((code_.divisor() + a1_).degree() < sr_of(code_) - Rat(rho_)))
        throw std::logic_error("auxiliary divisor degree out of range");
    if (!(static_cast<long long>(loc_.dim()) > static_cast<long long>(s.r) * rho_))
        throw std::logic_error("locator space too small for the decoding radius");

    products_.reserve(loc_.dim());
    for (const SkewElement& f : loc_.basis()) {
        std::vector<BlockWord> row;
        row.reserve(h2_.dim());
        for (const SkewElement& h : h2_.basis())
            row.push_back(code_.eval_word(skew_mul(s, f, h)));
        products_.push_back(std::move(row));
    }
    dual_evals_.reserve(dual_.dim());
    for (const SkewElement& h : dual_.basis()) dual_evals_.push_back(code_.eval_word(h));
}

FqMatrix DecoderContext::locator_system(const BlockWord& m) const {
    FqMatrix sys(code_.setup().F, h2_.dim(), loc_.dim());
    for (std::size_t l = 0; l < h2_.dim(); ++l)
        for (std::size_t j = 0; j < loc_.dim(); ++j) sys(l, j) = pairing(products_[j][l], m);
    return sys;
}

std::optional<SkewElement> DecoderContext::find_locator(const BlockWord& m) const {
    FqMatrix ker = locator_system(m).kernel();
    if (ker.rows() == 0) return std::nullopt;
    return loc_.combine(ker.row(0));
}

std::optional<BlockWord> DecoderContext::solve_syndrome(const BlockWord& m,
                                                        const SkewElement& locator) const {
    const KummerSetup& s = code_.setup();
    const Field& f = s.F;
    const unsigned r = s.r;
    const std::size_t nblocks = code_.num_blocks();

    const SkewElement lstar = adjoint(s, locator);
    std::vector<FqMatrix> nullspaces;  // rows span ker eval(lstar) at each place
    std::vector<std::size_t> offsets(nblocks + 1, 0);
    for (std::size_t i = 0; i < nblocks; ++i) {
        nullspaces.push_back(eval_place(s, lstar, i).kernel());
        offsets[i + 1] = offsets[i] + nullspaces[i].rows() * r;
    }
    const std::size_t nunknowns = offsets[nblocks];

    // e_i = N_i^T C_i with C_i unknown (d_i x r); constraint row per dual basis
    // element: sum_i Tr(H_i (N_i^T C_i)^T) = <eval(h), m>, and
    // Tr(H (N^T C)^T) = sum_{a,b} (N H)_{a,b} C_{a,b}.
    FqMatrix sys(f, dual_.dim(), nunknowns);
    std::vector<Fe> rhs(dual_.dim(), 0);
    for (std::size_t t = 0; t < dual_.dim(); ++t) {
        rhs[t] = pairing(dual_evals_[t], m);
        for (std::size_t i = 0; i < nblocks; ++i) {
            if (nullspaces[i].rows() == 0) continue;
            const FqMatrix nh = nullspaces[i] * dual_evals_[t].block(i);
            for (std::size_t a = 0; a < nh.rows(); ++a)
                for (unsigned b = 0; b < r; ++b)
                    sys(t, offsets[i] + a * r + b) = nh(a, b);
        }
    }

    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;

    BlockWord err(f, nblocks, r);
    for (std::size_t i = 0; i < nblocks; ++i) {
        if (nullspaces[i].rows() == 0) continue;
        FqMatrix c(f, nullspaces[i].rows(), r);
        for (std::size_t a = 0; a < c.rows(); ++a)
            for (unsigned b = 0; b < r; ++b) c(a, b) = (*sol)[offsets[i] + a * r + b];
        err.block(i) = nullspaces[i].transpose() * c;
    }
    return err;
}

DecodeResult DecoderContext::decode(const BlockWord& m) const {
    DecodeResult res;
    auto locator = find_locator(m);
    if (!locator) {
        res.reason = "no nonzero locator (weight promise violated)";
        return res;
    }
    auto err = solve_syndrome(m, *locator);
    if (!err) {
        res.reason = "syndrome system inconsistent";
        return res;
    }
    if (sumrank_weight(*err) > rho_) {
        res.reason = "recovered error exceeds the decoding radius";
        return res;
    }
    BlockWord cw = m - *err;
    auto msg = code_.message_of(cw);
    if (!msg) {
        res.reason = "corrected word is not a codeword";
        return res;
    }
    res.status = DecodeResult::Status::success;
    res.error = std::move(*err);
    res.codeword = std::move(cw);
    res.message = std::move(*msg);
    return res;
}

}  // namespace lagc
