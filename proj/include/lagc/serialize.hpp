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

#ifndef LAGC_SERIALIZE_HPP
#define LAGC_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "lagc/decoder.hpp"

namespace lagc {

class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One config = one code. Flat key-value text; '#' starts a comment.
/// Keys: p, m, modulus (m+1 integers, constant term first; required iff m > 1),
/// r, c, zeta (optional), eval_points, degA, seed, mode (strict|relaxed).
/// Field elements are written as base-p digit strings, most significant digit
/// first, '.'-separated for m > 1 (plain residues for prime fields).
struct CodeConfig {
    SetupConfig setup;
    long long deg_a = 0;
    std::uint64_t seed = 0;
    CodeMode mode = CodeMode::strict;
};

CodeConfig parse_config(std::istream& in);
CodeConfig parse_config_file(const std::string& path);
std::string format_config(const CodeConfig& cfg);

std::string format_element(const Field& f, Fe v);
Fe parse_element(const Field& f, const std::string& token);

/// Everything cmd_build persists: the validated parameters plus the derived data
/// (divisor, basis, generator matrix, decoder divisor) exactly as computed, so a
/// reader can audit the stored matrices without recomputing them.
class Bundle {
   public:
    /// Build from a config: A = degA * infinity, primal orientation.
    explicit Bundle(const CodeConfig& cfg);

    const CodeConfig& config() const { return cfg_; }
    const KummerSetup& setup() const { return setup_; }
    Orientation orientation() const { return orientation_; }
    const DDivisor& divisor() const { return divisor_; }
    const std::vector<SkewElement>& basis() const { return basis_; }
    /// The stored generator matrix (what was written to disk, not a recomputation).
    const FqMatrix& generator() const { return generator_; }
    bool strict() const { return cfg_.mode == CodeMode::strict; }
    long long rho() const;                  // strict bundles only
    const DDivisor& a1() const;             // strict bundles only

    /// Fresh CodeInstance recomputed from the stored parameters.
    CodeInstance instantiate() const;

    friend void write_bundle(std::ostream& out, const Bundle& b);
    friend Bundle read_bundle(std::istream& in);

   private:
    Bundle(CodeConfig cfg, KummerSetup setup);

    CodeConfig cfg_;
    KummerSetup setup_;
    Orientation orientation_ = Orientation::primal;
    DDivisor divisor_;
    std::vector<SkewElement> basis_;
    FqMatrix generator_;
    std::optional<DDivisor> a1_;
    std::optional<long long> rho_;
};

void write_bundle(std::ostream& out, const Bundle& b);
Bundle read_bundle(std::istream& in);
void write_bundle_file(const std::string& path, const Bundle& b);
Bundle read_bundle_file(const std::string& path);

/// Words: one-line header "q r s", then blocks in order, each matrix row-major,
/// whitespace-separated element tokens.
void write_word(std::ostream& out, const BlockWord& w);
BlockWord read_word(std::istream& in, const Field& f);

}  // namespace lagc

#endif
