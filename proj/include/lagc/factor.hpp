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

#ifndef LAGC_FACTOR_HPP
#define LAGC_FACTOR_HPP

#include <random>
#include <vector>

#include "lagc/poly.hpp"

namespace lagc {

/// Complete factorization over GF(q): squarefree decomposition, then distinct-degree
/// splitting, then randomized equal-degree splitting. The leading coefficient times
/// the product of factor^multiplicity reconstructs the input exactly. Factors are
/// monic irreducible, sorted, each with its multiplicity.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, std::mt19937_64& rng);

/// Same with a fixed internal seed, so repeated runs agree.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f);

/// Deterministic test via iterated q-power maps; agrees with factor().
bool is_irreducible(const Poly& f);

/// Roots in GF(q), each repeated per multiplicity; sorted.
std::vector<Fe> roots(const Poly& f);

/// The subgroup of r-th powers in GF(q)^x, sorted; requires r | q-1.
std::vector<Fe> rth_power_classes(const Field& f, unsigned r);

}  // namespace lagc

#endif
