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

#ifndef LAGC_FIELD_HPP
#define LAGC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lagc {

/// Element of GF(p^m), encoded as the integer sum d_0 + d_1*p + ... + d_{m-1}*p^{m-1}
/// of its base-p digit sequence (d_0 = constant term). For prime fields this is the
/// residue in [0, p). Elements only make sense relative to a Field.
using Fe = std::uint32_t;

/// Finite field GF(q), q = p^m. Prime fields need only p; extension fields take an
/// explicit monic irreducible modulus of degree m over GF(p). Cheap to copy (shared
/// immutable state); multiplication runs on exp/log tables built at construction.
class Field {
   public:
    static Field prime(std::uint64_t p);
    /// modulus_digits = c_0, ..., c_m over GF(p), c_m = 1.
    static Field extension(std::uint64_t p, unsigned m, const std::vector<Fe>& modulus_digits);

    std::uint64_t p() const { return impl_->p; }
    unsigned m() const { return impl_->m; }
    std::uint32_t q() const { return impl_->q; }
    /// Empty for prime fields.
    const std::vector<Fe>& modulus() const { return impl_->modulus; }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }
    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws on zero
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::int64_t e) const;

    /// Generator of the multiplicative group.
    Fe generator() const { return impl_->gen; }
    /// Multiplicative order of a nonzero element.
    std::uint32_t order(Fe a) const;
    std::uint32_t log(Fe a) const;  // discrete log base generator(); throws on zero
    Fe exp(std::uint64_t k) const { return impl_->exp[k % (impl_->q - 1)]; }

    /// Integer reduced into the prime subfield.
    Fe from_int(std::uint64_t n) const { return static_cast<Fe>(n % impl_->p); }
    std::vector<Fe> digits(Fe a) const;          // base-p, least significant first, length m
    Fe from_digits(const std::vector<Fe>& d) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string to_string(Fe a) const;  // base-p digits, most significant first, '.'-separated

   private:
    struct Impl {
        std::uint64_t p;
        unsigned m;
        std::uint32_t q;
        std::vector<Fe> modulus;  // degree-m monic irreducible over GF(p); empty if m == 1
        Fe gen;
        std::vector<Fe> exp;  // exp[k] = gen^k, k in [0, q-1)
        std::vector<std::uint32_t> log;  // log[a] for a in [1, q); log[0] unused
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

/// Prime factors of n, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace lagc

#endif
