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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lagc/channel.hpp"
#include "lagc/selftest.hpp"

using namespace lagc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LAGC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("LAGC_SEED is not a valid integer");
        }
    }
    return 1;
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const double pos = q * (static_cast<double>(xs.size()) - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return xs[lo] * (1 - frac) + xs[hi] * frac;
}

int cmd_build(const std::string& config_path, const std::string& bundle_path) {
    CodeConfig cfg = parse_config_file(config_path);
    Bundle bundle(cfg);
    write_bundle_file(bundle_path, bundle);

    const KummerSetup& s = bundle.setup();
    CodeInstance code = bundle.instantiate();
    std::cout << "q " << s.F.q() << "\n";
    std::cout << "r " << s.r << "\n";
    std::cout << "s " << s.eval_points.size() << "\n";
    std::cout << "k " << code.dim() << "\n";
    std::cout << "n " << code.length() << "\n";
    std::cout << "d* " << rat_to_string(code.designed_distance()) << "\n";
    std::cout << "g " << rat_to_string(genus(s)) << "\n";
    if (bundle.strict())
        std::cout << "rho " << bundle.rho() << "\n";
    else
        std::cout << "rho n/a (relaxed mode)\n";
    std::cout << "bundle written to " << bundle_path << "\n";
    return 0;
}

struct TrialRecord {
    std::uint64_t trial;
    long long weight;
    std::string outcome;  // success | failure | miscorrection
    double seconds;
};

int cmd_roundtrip(const std::string& bundle_path, std::uint64_t trials, long long weight,
                  std::uint64_t seed, bool force, const std::string& out_csv) {
    Bundle bundle = read_bundle_file(bundle_path);
    if (!bundle.strict()) {
        std::cerr << "roundtrip needs a strict-mode bundle\n";
        return 1;
    }
    CodeInstance code = bundle.instantiate();
    DecoderContext ctx(code);
    if (weight > ctx.rho() && !force) {
        std::cerr << "weight " << weight << " exceeds the decoding radius " << ctx.rho()
                  << " (use --force to run anyway)\n";
        return 1;
    }
    const bool forced = weight > ctx.rho();

    const KummerSetup& s = bundle.setup();
    std::vector<TrialRecord> records;
    std::vector<double> times;
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, t);
        auto msg = random_message(s.F, code.dim(), rng);
        BlockWord e = random_error(s.F, s.eval_points.size(), s.r, weight, rng);
        BlockWord m = code.encode(msg) + e;

        const auto t0 = Clock::now();
        DecodeResult res = ctx.decode(m);
        const double dt = seconds_since(t0);

        std::string outcome;
        if (!res.ok())
            outcome = "failure";
        else if (*res.error == e && *res.message == msg)
            outcome = "success";
        else
            outcome = "miscorrection";
        if (outcome == "success") ++successes;
        records.push_back({t, weight, outcome, dt});
        times.push_back(dt);
    }

    if (!out_csv.empty()) {
        std::ofstream csv(out_csv);
        if (!csv) {
            std::cerr << "cannot open " << out_csv << "\n";
            return 1;
        }
        csv << "trial,weight,forced,outcome,seconds\n";
        for (const auto& r : records)
            csv << r.trial << "," << r.weight << "," << (forced ? 1 : 0) << "," << r.outcome
                << "," << r.seconds << "\n";
    }

    const double rate = trials == 0 ? 1.0 : static_cast<double>(successes) / trials;
    std::cout << "trials " << trials << "\n";
    std::cout << "weight " << weight << (forced ? " (forced beyond radius)" : "") << "\n";
    std::cout << "success_rate " << rate << "\n";
    std::cout << "decode_seconds_median " << quantile(times, 0.5) << "\n";
    std::cout << "decode_seconds_p90 " << quantile(times, 0.9) << "\n";
    std::cout << "decode_seconds_max " << quantile(times, 1.0) << "\n";
    return (forced || rate == 1.0) ? 0 : 1;
}

int cmd_selftest(const std::string& bundle_path, std::uint64_t seed) {
    Bundle bundle = read_bundle_file(bundle_path);
    auto results = run_selftest(bundle, seed);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "selftest OK" : "selftest FAILED") << "\n";
    return all ? 0 : 1;
}

int cmd_bench(const std::vector<std::string>& config_paths, std::uint64_t trials,
              std::uint64_t seed, const std::string& out_csv) {
    std::ostringstream csv;
    csv << "label,q,r,s,degA,rho,build_seconds,decode_seconds_median\n";
    for (const std::string& path : config_paths) {
        CodeConfig cfg = parse_config_file(path);

        const auto t0 = Clock::now();
        Bundle bundle(cfg);
        CodeInstance code = bundle.instantiate();
        DecoderContext ctx(code);
        const double build_seconds = seconds_since(t0);

        const KummerSetup& s = bundle.setup();
        std::vector<double> times;
        const long long weight = ctx.rho();
        for (std::uint64_t t = 0; t < trials; ++t) {
            auto rng = trial_rng(seed, t);
            auto msg = random_message(s.F, code.dim(), rng);
            BlockWord e = random_error(s.F, s.eval_points.size(), s.r, weight, rng);
            BlockWord m = code.encode(msg) + e;
            const auto d0 = Clock::now();
            DecodeResult res = ctx.decode(m);
            times.push_back(seconds_since(d0));
            if (!res.ok() || *res.error != e) {
                std::cerr << path << ": decode failed during bench\n";
                return 1;
            }
        }
        csv << std::filesystem::path(path).stem().string() << "," << s.F.q() << "," << s.r << ","
            << s.eval_points.size() << "," << cfg.deg_a << "," << ctx.rho() << ","
            << build_seconds << "," << quantile(times, 0.5) << "\n";
    }

    if (!out_csv.empty()) {
        std::ofstream out(out_csv);
        if (!out) {
            std::cerr << "cannot open " << out_csv << "\n";
            return 1;
        }
        out << csv.str();
    } else {
        std::cout << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-rank evaluation codes on twisted rational function algebras"};
    app.require_subcommand(1);

    std::string config_path, bundle_path, out_csv;
    std::vector<std::string> config_paths;
    std::uint64_t trials = 100, seed = 0;
    long long weight = 0;
    bool force = false;
    bool seed_given = false;

    auto* build = app.add_subcommand("build", "construct a code bundle from a config");
    build->add_option("--config", config_path, "config file")->required();
    build->add_option("--bundle", bundle_path, "output bundle path")->required();

    auto* roundtrip =
        app.add_subcommand("roundtrip", "encode/corrupt/decode trials against a bundle");
    roundtrip->add_option("--bundle", bundle_path, "bundle path")->required();
    roundtrip->add_option("--trials", trials, "number of trials");
    roundtrip->add_option("--weight", weight, "sum-rank weight of injected errors")->required();
    roundtrip->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_given = true;
    });
    roundtrip->add_flag("--force", force, "allow weights beyond the decoding radius");
    roundtrip->add_option("--out", out_csv, "write per-trial records as CSV");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites against a bundle");
    selftest->add_option("--bundle", bundle_path, "bundle path")->required();
    selftest->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_given = true;
    });

    auto* bench = app.add_subcommand("bench", "build/decode timing table");
    bench->add_option("--config", config_paths, "config file (repeatable)");
    bench->add_option("--trials", trials, "decode trials per config");
    bench->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_given = true;
    });
    bench->add_option("--out", out_csv, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!seed_given) seed = default_seed();
        if (build->parsed()) return cmd_build(config_path, bundle_path);
        if (roundtrip->parsed())
            return cmd_roundtrip(bundle_path, trials, weight, seed, force, out_csv);
        if (selftest->parsed()) return cmd_selftest(bundle_path, seed);
        if (bench->parsed()) return cmd_bench(config_paths, trials, seed, out_csv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
