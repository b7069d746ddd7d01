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

#include "lagc/eval.hpp"

namespace lagc {

FqMatrix companion_matrix(const KummerSetup& s, std::size_t i, Orientation o) {
    const Field& F = s.F;
    const unsigned r = s.r;
    Fe corner = s.x_at(i);
    if (o == Orientation::adjoint) corner = F.inv(corner);
    FqMatrix m(F, r, r);
    for (unsigned j = 1; j < r; ++j) m(j, j - 1) = 1;
    m(0, r - 1) = corner;
    return m;
}

FqMatrix eval_place(const KummerSetup& s, const SkewElement& f, std::size_t i) {
    const Field& F = s.F;
    const unsigned r = s.r;
    const FqMatrix comp = companion_matrix(s, i, f.orientation());

    FqMatrix out(F, r, r);
    FqMatrix mpow = FqMatrix::identity(F, r);
    for (unsigned j = 0; j < r; ++j) {
        if (!f.coeff(j).is_zero()) {
            // diag(f_j(beta), f_j(zeta beta), ...) * comp^j
            for (unsigned k = 0; k < r; ++k) {
                const auto v = f.coeff(j).eval(s.fiber_point(i, k));
                if (!v) throw PoleError("pole at evaluation fiber of place " + std::to_string(i));
                if (*v == 0) continue;
                for (unsigned col = 0; col < r; ++col)
                    out(k, col) = F.add(out(k, col), F.mul(*v, mpow(k, col)));
            }
        }
        if (j + 1 < r) mpow = mpow * comp;
    }
    return out;
}

}  // namespace lagc
