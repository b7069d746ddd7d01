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

#include "lagc/channel.hpp"

#include <stdexcept>

namespace lagc {

BlockWord random_error(const Field& f, std::size_t s, unsigned r, long long weight,
                       std::mt19937_64& rng) {
    if (weight < 0 || weight > static_cast<long long>(s) * r)
        throw std::invalid_argument("weight out of range");

    std::vector<unsigned> ranks(s, 0);
    for (long long unit = 0; unit < weight; ++unit) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < s; ++i)
            if (ranks[i] < r) open.push_back(i);
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        ++ranks[open[pick(rng)]];
    }

    BlockWord e(f, s, r);
    for (std::size_t i = 0; i < s; ++i) {
        if (ranks[i] == 0) continue;
        e.block(i) = random_matrix_of_rank(f, r, r, ranks[i], rng);
    }
    if (sumrank_weight(e) != weight) throw std::logic_error("rank composition failed");
    return e;
}

std::vector<Fe> random_message(const Field& f, std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
    std::vector<Fe> m(k);
    for (auto& v : m) v = dist(rng);
    return m;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

}  // namespace lagc
