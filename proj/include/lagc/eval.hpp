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

#ifndef LAGC_EVAL_HPP
#define LAGC_EVAL_HPP

#include <stdexcept>

#include "lagc/matrix.hpp"
#include "lagc/skew.hpp"

namespace lagc {

/// A coefficient of the evaluated element has a pole on the evaluation fiber.
class PoleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Companion matrix of T at evaluation place i: sub-diagonal ones, top-right entry
/// x(a_i) (primal) or x(a_i)^{-1} (adjoint). Its r-th power is that entry times I.
/// This is T acting as "twist by the Galois generator, scaled by the norm witness
/// whose fiber values are (1, ..., 1, x(a_i))"; the witness never appears
/// explicitly because this matrix already encodes it.
FqMatrix companion_matrix(const KummerSetup& s, std::size_t i, Orientation o);

/// Evaluation of f at place i in the split fiber basis (beta, zeta beta, ...):
/// sum_j diag(f_j at the fiber) * companion^j. Multiplicative in f; throws
/// PoleError when a coefficient denominator vanishes on the fiber.
FqMatrix eval_place(const KummerSetup& s, const SkewElement& f, std::size_t i);

}  // namespace lagc

#endif
