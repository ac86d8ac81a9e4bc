// Copyright 2026 The dmpst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dmpst/shadows.hpp"
#include "dmpst/svg.hpp"

namespace dmpst::bench {

/// Declarative description of one experiment run. Parsed from JSON; every
/// random decision derives from master_seed, so tables regenerate bit-exactly.
struct ExperimentSpec {
    std::string name;
    std::string kind; // scaling_k | scheme_comparison | tomography_scaling | dmp_baseline
    std::vector<Scheme> schemes = {Scheme::BiasedMub};
    int n = 3;
    std::vector<int> n_grid;            // tomography_scaling, dmp_baseline
    std::vector<std::uint64_t> k_grid;  // scaling_k, dmp_baseline
    double eps = 0.1;
    double delta = 0.05;
    int trials = 100;
    int observables = 20;   // scheme_comparison
    std::uint64_t shots = 100000; // scheme_comparison
    int dmp_m = 1;          // configurations per element in the baseline model
    std::uint64_t master_seed = 1;

    static ExperimentSpec from_json(std::string_view text);
    std::string to_json() const;
    void validate() const; // throws UsageError with the offending field
};

/// Cost model for configuration-per-element protocols: m K distinct device
/// settings, each repeated ceil(ln(1/delta') / (2 eps^2)) times with the
/// per-setting budget delta' = delta / (m K).
struct DmpCostModel {
    int m = 1;

    std::uint64_t settings(std::uint64_t k) const;
    std::uint64_t repetitions(std::uint64_t k, double eps, double delta) const;
    std::uint64_t total_samples(std::uint64_t k, double eps, double delta) const;
};

/// Distinct measurement settings the shadow protocols need for a dataset of
/// N shots: every Clifford shot is its own setting; biased-MUB runs never
/// need more than the 2^n + 1 bases.
std::uint64_t shadow_settings(Scheme scheme, int n, std::uint64_t shots);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
};

struct ClaimResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string band;
};

struct Chart {
    std::string file_stem;
    std::string svg;
};

struct ExperimentResult {
    ExperimentSpec spec;
    Table table;
    std::vector<ClaimResult> claims;
    std::vector<Chart> charts;

    bool all_pass() const;
    /// Summary JSON with the spec echo, per-claim pass flags and provenance.
    std::string summary_json(const std::string &invocation = {}) const;
};

/// Shared-dataset scaling in the number of targets: for each K, one dataset
/// sized by the entry planner estimates K uniformly chosen off-diagonal
/// entries; rows record shot count, max error and coverage over trials.
ExperimentResult run_scaling_k(const ExperimentSpec &spec, int threads = 1);

/// Per-scheme empirical single-shot variances for random off-diagonal
/// projectors, measured on each observable's own eigenstate (the regime the
/// worst-case variance bounds address), plus the model shot counts to reach
/// the spec accuracy and the Clifford / biased-MUB ratio.
ExperimentResult run_scheme_comparison(const ExperimentSpec &spec, int threads = 1);

/// Full reconstruction at fixed trace-distance target across dimensions;
/// records planned shots, achieved raw and projected trace distance, and
/// checks the coverage and the shot-count growth exponent.
ExperimentResult run_tomography_scaling(const ExperimentSpec &spec, int threads = 1);

/// Analytic configuration-count and sample-count comparison between the
/// per-element cost model and the shadow protocols over a K grid.
ExperimentResult run_dmp_baseline(const ExperimentSpec &spec, int threads = 1);

/// Dispatch on spec.kind.
ExperimentResult run_experiment(const ExperimentSpec &spec, int threads = 1);

/// Writes <name>.csv, <name>_<chart>.svg and <name>_summary.json.
void write_outputs(const ExperimentResult &result,
                   const std::filesystem::path &out_dir,
                   const std::string &invocation = {});

/// Least-squares fit y = a + b x; returns {a, b, r_squared}.
struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
};
LinearFit fit_line(const std::vector<double> &xs, const std::vector<double> &ys);

} // namespace dmpst::bench
