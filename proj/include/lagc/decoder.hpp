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

#ifndef LAGC_DECODER_HPP
#define LAGC_DECODER_HPP

#include "lagc/code.hpp"

namespace lagc {

/// Decoding is a total function: failures are values, not exceptions, so harnesses
/// can count them.
struct DecodeResult {
    enum class Status { success, failure };

    Status status = Status::failure;
    std::string reason;                    // set on failure
    std::optional<BlockWord> error;
    std::optional<BlockWord> codeword;
    std::optional<std::vector<Fe>> message;

    bool ok() const { return status == Status::success; }
};

/// floor((sr - deg A - g - 1) / 2), computed in exact rational arithmetic.
long long rho_algo(const CodeInstance& code);

/// A_1 = G - A with G = (sr - rho - 1) * infinity. The support sits at the totally
/// ramified degree-one place, so A + A_1 is automatically Galois; the dimension
/// condition lambda(A_1) > r * rho is verified on construction.
DDivisor choose_a1(const CodeInstance& code);

/// Syndrome decoder: locates the error image with a function from the auxiliary
/// space, then solves the kernel-constrained syndrome system. All message-independent
/// evaluations are precomputed, so decode() is a handful of dense solves.
class DecoderContext {
   public:
    explicit DecoderContext(CodeInstance code);

    const CodeInstance& code() const { return code_; }
    long long rho() const { return rho_; }
    const DDivisor& a1() const { return a1_; }
    const RRSpace& locator_space() const { return loc_; }
    const RRSpace& product_space() const { return h2_; }
    const RRSpace& dual_space() const { return dual_; }

    /// Constraint matrix of the locator system for m: one row per product-space
    /// basis element, one column per locator-space coordinate.
    FqMatrix locator_system(const BlockWord& m) const;

    /// Nonzero f in the locator space pairing to zero against m over the product
    /// space; nullopt when only the zero solution exists. Deterministic: first
    /// reduced kernel vector.
    std::optional<SkewElement> find_locator(const BlockWord& m) const;

    /// Error word with per-block image inside ker eval(adjoint(locator)) matching
    /// the syndromes of m; nullopt if the system is inconsistent.
    std::optional<BlockWord> solve_syndrome(const BlockWord& m, const SkewElement& locator) const;

    /// Full pipeline: locator, syndrome, weight check, message recovery. Inputs
    /// within sum-rank weight rho() of the code decode exactly; beyond-radius
    /// inputs yield failure or an unguaranteed candidate, never a crash.
    DecodeResult decode(const BlockWord& m) const;

   private:
    CodeInstance code_;
    long long rho_;
    DDivisor a1_;
    RRSpace loc_;   // Lambda_{-o}(A_1)
    RRSpace h2_;    // Lambda_{-o}(K + CoNr(D) - A - A_1)
    RRSpace dual_;  // Lambda_{-o}(K + CoNr(D) - A)
    std::vector<std::vector<BlockWord>> products_;  // eval(f_j * h_l)
    std::vector<BlockWord> dual_evals_;             // eval(h_t)
};

}  // namespace lagc

#endif
