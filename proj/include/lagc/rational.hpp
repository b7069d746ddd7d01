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

#ifndef LAGC_RATIONAL_HPP
#define LAGC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace lagc {

/// Exact rational scalar for divisor coefficients, degrees and gauges.
using Rat = boost::rational<long long>;

inline long long rat_floor(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline long long rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string rat_to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

}  // namespace lagc

#endif
