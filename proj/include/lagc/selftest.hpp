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

#ifndef LAGC_SELFTEST_HPP
#define LAGC_SELFTEST_HPP

#include <vector>

#include "lagc/serialize.hpp"

namespace lagc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Theorem-level invariant suites, run against a bundle's setup. The duality
/// check pairs the bundle's stored generator matrix against a freshly computed
/// dual, so on-disk corruption surfaces there. Decoder checks are skipped for
/// relaxed bundles.
std::vector<CheckResult> run_selftest(const Bundle& bundle, std::uint64_t seed);

}  // namespace lagc

#endif
