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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmpst/clifford.hpp"
#include "dmpst/density_matrix.hpp"
#include "dmpst/mub.hpp"
#include "dmpst/observables.hpp"

namespace dmpst {

enum class Scheme {
    Clifford,
    BiasedMub,
};

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string &name);

/// One measurement record. For Clifford datasets unitary_id is the 64-bit
/// stream seed that regenerates the sampled element; for biased-MUB datasets
/// it is the basis index (0 = computational).
struct Snapshot {
    std::uint64_t unitary_id;
    std::uint32_t outcome;

    bool operator==(const Snapshot &) const = default;
};

/// An immutable ordered collection of snapshots plus the metadata needed to
/// replay or extend it. Unitaries are re-derived from ids at estimation time,
/// so storage is O(N) independent of the dimension.
class ShadowDataset {
  public:
    ShadowDataset(Scheme scheme, int n, std::uint64_t master_seed,
                  std::vector<Snapshot> shots);

    Scheme scheme() const { return scheme_; }
    int qubit_count() const { return n_; }
    Eigen::Index dim() const { return Eigen::Index(1) << n_; }
    std::uint64_t master_seed() const { return master_seed_; }
    std::size_t size() const { return shots_.size(); }
    const std::vector<Snapshot> &shots() const { return shots_; }

  private:
    Scheme scheme_;
    int n_;
    std::uint64_t master_seed_;
    std::vector<Snapshot> shots_;
};

/// Median-of-means settings for estimate(); batches = 1 degenerates to the
/// plain mean. The remainder shots when N mod batches != 0 are excluded from
/// estimation (they stay in the dataset).
struct EstimatorConfig {
    std::size_t batches = 1;
    double confidence = 0.05; // delta
    double accuracy = 0.1;    // epsilon

    /// Default batch count for K simultaneous targets at confidence delta:
    /// ceil(2 ln(2K / delta)), capped at N / 2 and floored at 1.
    static EstimatorConfig for_targets(std::size_t targets, double delta,
                                       std::size_t shots);
};

/// Simulates N randomized measurements of rho under the given scheme.
///
/// Shot i derives its own streams from (master_seed, i): one for the unitary
/// choice, one for the Born-rule outcome (inverse CDF over outcome index, with
/// probabilities clipped at -1e-14 and renormalized). The result is therefore
/// identical for any thread count.
ShadowDataset collect(const DensityMatrix &rho, Scheme scheme, std::size_t shots,
                      std::uint64_t master_seed, int threads = 1);

/// Evaluates single-shot inverse-channel estimates against a dataset.
///
/// Per snapshot the work is constant for biased-MUB datasets (two amplitude
/// lookups in the prebuilt ensemble) and O(d^2 poly n) for Clifford datasets
/// (the sampled element is re-derived and materialized). One estimator can
/// serve many observables; prefer the batch calls when estimating several.
class ShadowEstimator {
  public:
    explicit ShadowEstimator(const ShadowDataset &dataset);

    const ShadowDataset &dataset() const { return dataset_; }

    /// tr(O M^-1(U^dagger |k><k| U)) for one snapshot. The snapshot must
    /// belong to this estimator's dataset scheme.
    double single_shot(const Snapshot &snapshot, const TargetObservable &obs) const;

    /// Median-of-means estimate of tr(O rho).
    double estimate(const TargetObservable &obs, const EstimatorConfig &cfg,
                    int threads = 1) const;
    std::vector<double> estimate_batch(std::span<const TargetObservable> obs,
                                       const EstimatorConfig &cfg,
                                       int threads = 1) const;

    /// Empirical second moment of the single-shot estimates of tr(O_0 rho),
    /// O_0 = O - tr(O) I / d. This is the uncentered moment the scheme
    /// variance bounds control; it upper-bounds the centered variance.
    double empirical_variance(const TargetObservable &obs, int threads = 1) const;
    std::vector<double>
    empirical_variance_batch(std::span<const TargetObservable> obs,
                             int threads = 1) const;

  private:
    const ShadowDataset &dataset_;
    std::optional<MubEnsemble> ensemble_;

    void accumulate_range(std::size_t lo, std::size_t hi,
                          std::span<const TargetObservable> obs, double *sums,
                          double *sq_sums) const;
};

double snapshot_estimate(const Snapshot &snapshot, const TargetObservable &obs,
                         const ShadowEstimator &context);
double estimate(const ShadowDataset &dataset, const TargetObservable &obs,
                const EstimatorConfig &cfg, int threads = 1);

/// Closed-form Clifford inverse-channel estimate for an explicit element:
/// (d + 1) |<outcome| U |phi>|^2 - tr(O). Datasets identify elements by seed,
/// this overload serves exhaustive oracles that enumerate the group.
double clifford_single_shot(const CliffordUnitary &unitary, std::uint32_t outcome,
                            const TargetObservable &obs);
double empirical_variance(const ShadowDataset &dataset,
                          const TargetObservable &obs, int threads = 1);

enum class PlanTarget {
    Diagonal,      // computational-basis frequency estimation
    CliffordShadow,
    BiasedMubShadow,
};

/// Calibrated per-scheme planning constants (see plan_samples); the
/// conservative values fold the worst-case scheme variance bound (3 and 3/2)
/// into the 68 ln(2K/delta) median-of-means guarantee.
inline constexpr double kCliffordPlanConstant = 4.0;
inline constexpr double kBiasedMubPlanConstant = 2.0;
inline constexpr double kCliffordPlanConstantConservative = 204.0;
inline constexpr double kBiasedMubPlanConstantConservative = 102.0;

/// Shots sufficient for K simultaneous targets at additive accuracy eps and
/// confidence 1 - delta.
///
/// Diagonal planning returns exactly ceil(ln(2K/delta) / (2 eps^2)) (the
/// Hoeffding + union bound count). Shadow planning returns
/// ceil(c ln(2K/delta) / eps^2) with the constant above; pass
/// conservative = true for the fully rigorous count.
std::uint64_t plan_samples(std::uint64_t targets, double eps, double delta,
                           PlanTarget target, bool conservative = false);

/// N computational-basis outcomes of rho, shot i drawn from the stream
/// derive_seed(seed, i). Equivalent to the basis-0 slice of a biased-MUB
/// collection, provided for diagonal-only experiments.
std::vector<std::uint32_t> sample_computational_outcomes(const DensityMatrix &rho,
                                                         std::size_t shots,
                                                         std::uint64_t seed);

} // namespace dmpst
