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

#ifndef LAGC_CHANNEL_HPP
#define LAGC_CHANNEL_HPP

#include <random>

#include "lagc/code.hpp"

namespace lagc {

/// Word of exact sum-rank weight w: per-block ranks drawn as a random composition
/// of w capped at r per block, each block a product of full-rank factors.
BlockWord random_error(const Field& f, std::size_t s, unsigned r, long long weight,
                       std::mt19937_64& rng);

std::vector<Fe> random_message(const Field& f, std::size_t k, std::mt19937_64& rng);

/// Independent per-trial stream: splitmix of (seed, trial), so trial order and
/// parallelism cannot change the data.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace lagc

#endif
