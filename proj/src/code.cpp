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

#include "lagc/code.hpp"

#include <stdexcept>

namespace lagc {

BlockWord::BlockWord(const Field& f, std::size_t s, unsigned r)
    : blocks_(s, FqMatrix(f, r, r)) {
    if (s == 0) throw std::invalid_argument("empty block word");
}

BlockWord::BlockWord(std::vector<FqMatrix> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("empty block word");
    for (const auto& b : blocks_)
        if (b.rows() != blocks_.front().rows() || b.cols() != b.rows())
            throw std::invalid_argument("blocks must be square of equal size");
}

BlockWord BlockWord::operator+(const BlockWord& o) const {
    if (num_blocks() != o.num_blocks()) throw std::invalid_argument("shape mismatch");
    std::vector<FqMatrix> out;
    out.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] + o.blocks_[i]);
    return BlockWord(std::move(out));
}

BlockWord BlockWord::operator-(const BlockWord& o) const {
    if (num_blocks() != o.num_blocks()) throw std::invalid_argument("shape mismatch");
    std::vector<FqMatrix> out;
    out.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] - o.blocks_[i]);
    return BlockWord(std::move(out));
}

bool BlockWord::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

std::vector<Fe> BlockWord::flatten() const {
    std::vector<Fe> out;
    const unsigned n = r();
    out.reserve(blocks_.size() * n * n);
    for (const auto& b : blocks_)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) out.push_back(b(i, j));
    return out;
}

BlockWord BlockWord::from_flat(const Field& f, std::size_t s, unsigned r,
                               std::span<const Fe> data) {
    if (data.size() != s * r * r) throw std::invalid_argument("length mismatch");
    std::vector<FqMatrix> blocks;
    blocks.reserve(s);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < s; ++b) {
        FqMatrix m(f, r, r);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) m(i, j) = data[pos++];
        blocks.push_back(std::move(m));
    }
    return BlockWord(std::move(blocks));
}

long long sumrank_weight(const BlockWord& w) {
    long long total = 0;
    for (std::size_t i = 0; i < w.num_blocks(); ++i)
        total += static_cast<long long>(w.block(i).rank());
    return total;
}

long long sumrank_distance(const BlockWord& a, const BlockWord& b) {
    return sumrank_weight(a - b);
}

Fe pairing(const BlockWord& a, const BlockWord& b) {
    if (a.num_blocks() != b.num_blocks() || a.r() != b.r())
        throw std::invalid_argument("shape mismatch");
    const Field& f = a.field();
    Fe acc = 0;
    const unsigned n = a.r();
    for (std::size_t i = 0; i < a.num_blocks(); ++i) {
        // Tr(a_i b_i^T) = entrywise dot product
        for (unsigned row = 0; row < n; ++row)
            for (unsigned col = 0; col < n; ++col)
                acc = f.add(acc, f.mul(a.block(i)(row, col), b.block(i)(row, col)));
    }
    return acc;
}

CodeInstance::CodeInstance(const KummerSetup& s, DDivisor a, Orientation o, CodeMode mode)
    : space_(s, std::move(a), o), mode_(mode), gen_(s.F, 0, 0) {
    const Rat sr = Rat(static_cast<long long>(s.eval_points.size()) * s.r);
    if (mode_ == CodeMode::strict) {
        const Rat lo = Rat(2) * genus(s) - Rat(2);
        if (!(space_.divisor().degree() > lo && space_.divisor().degree() < sr))
            throw std::invalid_argument("strict mode requires 2g-2 < deg A < sr");
    }
    for (const auto& [q, c] : space_.divisor().support()) {
        for (std::size_t i = 0; i < s.eval_points.size(); ++i)
            for (unsigned j = 0; j < s.r; ++j)
                if (q == s.fiber_place(i, j))
                    throw std::invalid_argument("divisor must avoid the evaluation fibers");
    }

    FqMatrix g(s.F, space_.dim(), length());
    for (std::size_t j = 0; j < space_.dim(); ++j)
        g.set_row(j, eval_word(space_.basis()[j]).flatten());
    gen_ = std::move(g);
    if (mode_ == CodeMode::strict && gen_.rank() != space_.dim())
        throw std::logic_error("generator matrix is not injective");
}

std::size_t CodeInstance::length() const {
    const KummerSetup& s = setup();
    return s.eval_points.size() * s.r * s.r;
}

Rat CodeInstance::designed_distance() const {
    const KummerSetup& s = setup();
    return Rat(static_cast<long long>(s.eval_points.size()) * s.r) - divisor().degree();
}

BlockWord CodeInstance::eval_word(const SkewElement& f) const {
    const KummerSetup& s = setup();
    std::vector<FqMatrix> blocks;
    blocks.reserve(s.eval_points.size());
    for (std::size_t i = 0; i < s.eval_points.size(); ++i)
        blocks.push_back(eval_place(s, f, i));
    return BlockWord(std::move(blocks));
}

BlockWord CodeInstance::encode(std::span<const Fe> message) const {
    if (message.size() != dim()) throw std::invalid_argument("message length mismatch");
    const std::vector<Fe> flat = gen_.transpose().mul_vec(message);
    return BlockWord::from_flat(setup().F, num_blocks(), setup().r, flat);
}

std::optional<std::vector<Fe>> CodeInstance::message_of(const BlockWord& w) const {
    return gen_.transpose().solve(w.flatten());
}

CodeInstance CodeInstance::dual() const {
    const KummerSetup& s = setup();
    DDivisor dual_a = canonical_divisor(s) + conorm_of_eval_divisor(s) - divisor();
    return CodeInstance(s, std::move(dual_a), opposite(orientation()), mode_);
}

long long min_distance_exhaustive(const CodeInstance& code, std::uint64_t cap) {
    const std::size_t k = code.dim();
    if (k == 0) return kInfiniteDistance;
    const std::uint32_t q = code.setup().F.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > cap / q) throw std::invalid_argument("codeword count exceeds cap");
        total *= q;
    }

    long long best = kInfiniteDistance;
    std::vector<Fe> msg(k, 0);
    for (std::uint64_t n = 1; n < total; ++n) {
        std::uint64_t v = n;
        for (std::size_t i = 0; i < k; ++i) {
            msg[i] = static_cast<Fe>(v % q);
            v /= q;
        }
        best = std::min(best, sumrank_weight(code.encode(msg)));
    }
    return best;
}

}  // namespace lagc
