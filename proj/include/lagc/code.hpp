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

#ifndef LAGC_CODE_HPP
#define LAGC_CODE_HPP

#include <limits>

#include "lagc/rrspace.hpp"

namespace lagc {

/// Element of the ambient sum-rank space: one r x r matrix over GF(q) per
/// evaluation place.
class BlockWord {
   public:
    BlockWord(const Field& f, std::size_t s, unsigned r);
    explicit BlockWord(std::vector<FqMatrix> blocks);

    std::size_t num_blocks() const { return blocks_.size(); }
    unsigned r() const { return static_cast<unsigned>(blocks_.front().rows()); }
    const Field& field() const { return blocks_.front().field(); }
    const FqMatrix& block(std::size_t i) const { return blocks_[i]; }
    FqMatrix& block(std::size_t i) { return blocks_[i]; }

    BlockWord operator+(const BlockWord& o) const;
    BlockWord operator-(const BlockWord& o) const;
    bool operator==(const BlockWord& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const BlockWord& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Blocks in order, each row-major.
    std::vector<Fe> flatten() const;
    static BlockWord from_flat(const Field& f, std::size_t s, unsigned r,
                               std::span<const Fe> data);

   private:
    std::vector<FqMatrix> blocks_;
};

long long sumrank_weight(const BlockWord& w);
long long sumrank_distance(const BlockWord& a, const BlockWord& b);

/// <v, w> = sum_i Tr(v_i * w_i^T): the trace pairing of the split residual
/// algebras, where the adjoint of an evaluation is the plain transpose.
Fe pairing(const BlockWord& a, const BlockWord& b);

enum class CodeMode { strict, relaxed };

/// Evaluation code: the image of a Riemann-Roch space of the twisted algebra
/// under the per-place evaluations. Strict mode enforces 2g-2 < deg A < sr,
/// which makes encoding injective and decoding available.
class CodeInstance {
   public:
    CodeInstance(const KummerSetup& s, DDivisor a, Orientation o, CodeMode mode);

    const KummerSetup& setup() const { return space_.setup(); }
    const DDivisor& divisor() const { return space_.divisor(); }
    Orientation orientation() const { return space_.orientation(); }
    CodeMode mode() const { return mode_; }
    const RRSpace& space() const { return space_; }

    std::size_t dim() const { return space_.dim(); }
    std::size_t length() const;  // s * r^2
    std::size_t num_blocks() const { return setup().eval_points.size(); }
    /// d*(A) = sr - deg A, the designed distance.
    Rat designed_distance() const;

    /// Generator matrix, dim x length: row j is the flattened evaluation of the
    /// j-th basis element.
    const FqMatrix& generator() const { return gen_; }

    BlockWord eval_word(const SkewElement& f) const;
    BlockWord encode(std::span<const Fe> message) const;
    /// Inverts encode on exact codewords; nullopt if w is not in the code.
    std::optional<std::vector<Fe>> message_of(const BlockWord& w) const;

    /// The code on (K + CoNr(D) - A) in the opposite algebra; orthogonal to this
    /// one under the trace pairing, with dimensions summing to s r^2.
    CodeInstance dual() const;

   private:
    RRSpace space_;
    CodeMode mode_;
    FqMatrix gen_;
};

constexpr long long kInfiniteDistance = std::numeric_limits<long long>::max();

/// Exact minimum sum-rank weight by enumerating all q^k - 1 nonzero codewords;
/// throws when q^k exceeds cap. The zero code has infinite minimum distance.
long long min_distance_exhaustive(const CodeInstance& code, std::uint64_t cap);

}  // namespace lagc

#endif
