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

#include "dmpst/shadows.hpp"

#include <algorithm>
#include <cmath>

#include "dmpst/clifford.hpp"
#include "dmpst/errors.hpp"
#include "dmpst/parallel.hpp"

namespace dmpst {

namespace {

constexpr double kProbClip = -1e-14;
constexpr std::size_t kAccumBlock = 4096;

// Stream roles hung off each shot's seed chain.
constexpr std::uint64_t kUnitaryStream = 0;
constexpr std::uint64_t kOutcomeStream = 1;

// Clipped, renormalized cumulative distribution over outcome indices.
std::vector<double> born_cdf(const RealVector &probs) {
    std::vector<double> cdf(static_cast<std::size_t>(probs.size()));
    double total = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        double p = probs(i);
        if (p < kProbClip) {
            throw Error("collect: outcome probability below clip threshold");
        }
        total += std::max(p, 0.0);
        cdf[static_cast<std::size_t>(i)] = total;
    }
    for (double &c : cdf) {
        c /= total;
    }
    return cdf;
}

// Smallest index whose cumulative mass exceeds u.
std::uint32_t pick_outcome(const std::vector<double> &cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::size_t>(it - cdf.begin());
    return static_cast<std::uint32_t>(std::min(idx, cdf.size() - 1));
}

struct ObsView {
    ObservableKind kind;
    Eigen::Index l1;
    Eigen::Index l2;
    Complex a1; // amplitude at l1
    Complex a2; // amplitude at l2
};

ObsView make_view(const TargetObservable &obs, Eigen::Index d) {
    if (obs.k >= d) {
        throw ParameterError("estimate: observable index exceeds dataset dimension");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ObsView v{obs.kind, obs.j, obs.k, Complex(inv_sqrt2, 0.0),
              Complex(inv_sqrt2, 0.0)};
    if (obs.kind == ObservableKind::Psi) {
        v.a2 = Complex(0.0, inv_sqrt2);
    }
    return v;
}

} // namespace

std::string scheme_name(Scheme scheme) {
    return scheme == Scheme::Clifford ? "clifford" : "biased_mub";
}

Scheme scheme_from_name(const std::string &name) {
    if (name == "clifford") {
        return Scheme::Clifford;
    }
    if (name == "biased_mub" || name == "mub") {
        return Scheme::BiasedMub;
    }
    throw UsageError("unknown measurement scheme: " + name);
}

ShadowDataset::ShadowDataset(Scheme scheme, int n, std::uint64_t master_seed,
                             std::vector<Snapshot> shots)
    : scheme_(scheme), n_(n), master_seed_(master_seed), shots_(std::move(shots)) {
    if (n_ < 1 || n_ > 5) {
        throw ParameterError("dataset: qubit count must lie in 1..5");
    }
    const std::uint64_t d = std::uint64_t(1) << n_;
    for (const Snapshot &s : shots_) {
        if (s.outcome >= d) {
            throw ParameterError("dataset: outcome index exceeds dimension");
        }
        if (scheme_ == Scheme::BiasedMub && s.unitary_id > d) {
            throw ParameterError("dataset: basis index exceeds 2^n");
        }
    }
}

EstimatorConfig EstimatorConfig::for_targets(std::size_t targets, double delta,
                                             std::size_t shots) {
    EstimatorConfig cfg;
    cfg.confidence = delta;
    const double raw =
        std::ceil(2.0 * std::log(2.0 * static_cast<double>(targets) / delta));
    auto batches = static_cast<std::size_t>(std::max(1.0, raw));
    batches = std::min(batches, std::max<std::size_t>(1, shots / 2));
    cfg.batches = batches;
    return cfg;
}

ShadowDataset collect(const DensityMatrix &rho, Scheme scheme, std::size_t shots,
                      std::uint64_t master_seed, int threads) {
    int n = 0;
    if (!qubit_count_for_dim(rho.dim(), n) || n > 5) {
        throw ParameterError("collect: state dimension must be 2^n with n in 1..5");
    }
    if (shots == 0) {
        throw ParameterError("collect: shot count must be positive");
    }

    std::vector<Snapshot> records(shots);

    if (scheme == Scheme::BiasedMub) {
        const MubEnsemble ensemble = MubEnsemble::build(n);
        const BiasedDistribution dist{n};
        // One outcome distribution per basis; shots then cost O(log d) each.
        std::vector<std::vector<double>> cdfs;
        cdfs.reserve(ensemble.basis_count());
        for (std::size_t j = 0; j < ensemble.basis_count(); ++j) {
            const ComplexMatrix &v = ensemble.basis(j);
            cdfs.push_back(born_cdf((v.adjoint() * rho.matrix() * v)
                                        .diagonal()
                                        .real()));
        }
        parallel_for(shots, threads, [&](std::size_t i) {
            const std::uint64_t shot_seed = derive_seed(master_seed, i);
            RngStream unitary_rng(derive_seed(shot_seed, kUnitaryStream));
            const std::size_t j = sample_basis(dist, unitary_rng);
            RngStream outcome_rng(derive_seed(shot_seed, kOutcomeStream));
            records[i] = Snapshot{static_cast<std::uint64_t>(j),
                                  pick_outcome(cdfs[j], outcome_rng.next_double())};
        });
    } else {
        parallel_for(shots, threads, [&](std::size_t i) {
            const std::uint64_t shot_seed = derive_seed(master_seed, i);
            const std::uint64_t uid = derive_seed(shot_seed, kUnitaryStream);
            RngStream unitary_rng(uid);
            const CliffordUnitary u = sample_clifford(n, unitary_rng);
            const std::vector<double> cdf = born_cdf(
                (u.dense() * rho.matrix() * u.dense().adjoint()).diagonal().real());
            RngStream outcome_rng(derive_seed(shot_seed, kOutcomeStream));
            records[i] = Snapshot{uid, pick_outcome(cdf, outcome_rng.next_double())};
        });
    }
    return ShadowDataset(scheme, n, master_seed, std::move(records));
}

ShadowEstimator::ShadowEstimator(const ShadowDataset &dataset)
    : dataset_(dataset) {
    if (dataset.scheme() == Scheme::BiasedMub) {
        ensemble_.emplace(MubEnsemble::build(dataset.qubit_count()));
    }
}

double ShadowEstimator::single_shot(const Snapshot &snapshot,
                                    const TargetObservable &obs) const {
    const Eigen::Index d = dataset_.dim();
    const ObsView view = make_view(obs, d);
    const double inv_d = 1.0 / static_cast<double>(d);

    if (dataset_.scheme() == Scheme::BiasedMub) {
        const auto j = static_cast<std::size_t>(snapshot.unitary_id);
        if (j >= ensemble_->basis_count()) {
            throw UsageError("snapshot_estimate: basis index does not match context");
        }
        const auto k = static_cast<Eigen::Index>(snapshot.outcome);
        if (j == 0) {
            // Computational snapshot: 2 tr(O P_0k) - tr(O) / d.
            double t;
            if (view.kind == ObservableKind::Diag) {
                t = (k == view.l1) ? 1.0 : 0.0;
            } else {
                t = (k == view.l1 || k == view.l2) ? 0.5 : 0.0;
            }
            return 2.0 * t - inv_d;
        }
        // Nontrivial basis: the projected-state overlap plus the constant
        // rank-1 correction; two amplitude reads per snapshot.
        double t;
        if (view.kind == ObservableKind::Diag) {
            t = std::norm(ensemble_->amplitude(j, view.l1, k));
        } else {
            const Complex w = std::conj(view.a1) * ensemble_->amplitude(j, view.l1, k) +
                              std::conj(view.a2) * ensemble_->amplitude(j, view.l2, k);
            t = std::norm(w);
        }
        const double correction =
            (static_cast<double>(d) - 1.0) * inv_d * inv_d;
        return 2.0 * static_cast<double>(d) * (t - correction) - inv_d;
    }

    // Clifford snapshot: (d + 1) |<k|U|phi>|^2 - tr(O).
    RngStream rng(snapshot.unitary_id);
    const CliffordUnitary u = sample_clifford(dataset_.qubit_count(), rng);
    const auto row = u.dense().row(static_cast<Eigen::Index>(snapshot.outcome));
    double overlap;
    if (view.kind == ObservableKind::Diag) {
        overlap = std::norm(row(view.l1));
    } else {
        overlap = std::norm(row(view.l1) * view.a1 + row(view.l2) * view.a2);
    }
    return (static_cast<double>(d) + 1.0) * overlap - 1.0;
}

void ShadowEstimator::accumulate_range(std::size_t lo, std::size_t hi,
                                       std::span<const TargetObservable> obs,
                                       double *sums, double *sq_sums) const {
    const Eigen::Index d = dataset_.dim();
    const double inv_d = 1.0 / static_cast<double>(d);
    const double dd = static_cast<double>(d);
    const std::vector<Snapshot> &shots = dataset_.shots();

    std::vector<ObsView> views;
    views.reserve(obs.size());
    for (const TargetObservable &o : obs) {
        views.push_back(make_view(o, d));
    }

    if (dataset_.scheme() == Scheme::BiasedMub) {
        const MubEnsemble &ens = *ensemble_;
        const double correction = (dd - 1.0) * inv_d * inv_d;
        for (std::size_t i = lo; i < hi; ++i) {
            const Snapshot &s = shots[i];
            const auto j = static_cast<std::size_t>(s.unitary_id);
            const auto k = static_cast<Eigen::Index>(s.outcome);
            for (std::size_t v = 0; v < views.size(); ++v) {
                const ObsView &view = views[v];
                double est;
                if (j == 0) {
                    double t;
                    if (view.kind == ObservableKind::Diag) {
                        t = (k == view.l1) ? 1.0 : 0.0;
                    } else {
                        t = (k == view.l1 || k == view.l2) ? 0.5 : 0.0;
                    }
                    est = 2.0 * t - inv_d;
                } else {
                    double t;
                    if (view.kind == ObservableKind::Diag) {
                        t = std::norm(ens.amplitude(j, view.l1, k));
                    } else {
                        const Complex w =
                            std::conj(view.a1) * ens.amplitude(j, view.l1, k) +
                            std::conj(view.a2) * ens.amplitude(j, view.l2, k);
                        t = std::norm(w);
                    }
                    est = 2.0 * dd * (t - correction) - inv_d;
                }
                sums[v] += est;
                if (sq_sums != nullptr) {
                    const double centered = est - inv_d;
                    sq_sums[v] += centered * centered;
                }
            }
        }
        return;
    }

    const int n = dataset_.qubit_count();
    for (std::size_t i = lo; i < hi; ++i) {
        const Snapshot &s = shots[i];
        RngStream rng(s.unitary_id);
        const CliffordUnitary u = sample_clifford(n, rng);
        const auto row = u.dense().row(static_cast<Eigen::Index>(s.outcome));
        for (std::size_t v = 0; v < views.size(); ++v) {
            const ObsView &view = views[v];
            double overlap;
            if (view.kind == ObservableKind::Diag) {
                overlap = std::norm(row(view.l1));
            } else {
                overlap =
                    std::norm(row(view.l1) * view.a1 + row(view.l2) * view.a2);
            }
            const double est = (dd + 1.0) * overlap - 1.0;
            sums[v] += est;
            if (sq_sums != nullptr) {
                const double centered = est - inv_d;
                sq_sums[v] += centered * centered;
            }
        }
    }
}

std::vector<double>
ShadowEstimator::estimate_batch(std::span<const TargetObservable> obs,
                                const EstimatorConfig &cfg, int threads) const {
    const std::size_t total = dataset_.size();
    if (total == 0) {
        throw UsageError("estimate: dataset is empty");
    }
    if (cfg.batches < 1 || cfg.batches > total) {
        throw ParameterError("estimate: batch count must lie in 1..N");
    }
    const std::size_t batches = cfg.batches;
    const std::size_t chunk = total / batches;
    const std::size_t obs_count = obs.size();

    // Fixed blocks inside each chunk keep the floating-point reduction order
    // independent of the thread count.
    struct Block {
        std::size_t batch;
        std::size_t lo;
        std::size_t hi;
    };
    std::vector<Block> blocks;
    for (std::size_t b = 0; b < batches; ++b) {
        const std::size_t lo = b * chunk;
        const std::size_t hi = lo + chunk;
        for (std::size_t s = lo; s < hi; s += kAccumBlock) {
            blocks.push_back({b, s, std::min(hi, s + kAccumBlock)});
        }
    }

    std::vector<std::vector<double>> block_sums(
        blocks.size(), std::vector<double>(obs_count, 0.0));
    parallel_for(blocks.size(), threads, [&](std::size_t i) {
        accumulate_range(blocks[i].lo, blocks[i].hi, obs,
                         block_sums[i].data(), nullptr);
    });

    std::vector<std::vector<double>> batch_means(
        batches, std::vector<double>(obs_count, 0.0));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto &acc = batch_means[blocks[i].batch];
        for (std::size_t v = 0; v < obs_count; ++v) {
            acc[v] += block_sums[i][v];
        }
    }
    for (auto &acc : batch_means) {
        for (double &x : acc) {
            x /= static_cast<double>(chunk);
        }
    }

    std::vector<double> medians(obs_count, 0.0);
    std::vector<double> scratch(batches);
    for (std::size_t v = 0; v < obs_count; ++v) {
        for (std::size_t b = 0; b < batches; ++b) {
            scratch[b] = batch_means[b][v];
        }
        std::sort(scratch.begin(), scratch.end());
        medians[v] = (batches % 2 == 1)
                         ? scratch[batches / 2]
                         : 0.5 * (scratch[batches / 2 - 1] + scratch[batches / 2]);
    }
    return medians;
}

double ShadowEstimator::estimate(const TargetObservable &obs,
                                 const EstimatorConfig &cfg, int threads) const {
    const TargetObservable one[] = {obs};
    return estimate_batch(one, cfg, threads)[0];
}

std::vector<double> ShadowEstimator::empirical_variance_batch(
    std::span<const TargetObservable> obs, int threads) const {
    const std::size_t total = dataset_.size();
    if (total < 2) {
        throw UsageError("empirical_variance: need at least two snapshots");
    }
    const std::size_t obs_count = obs.size();

    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t s = 0; s < total; s += kAccumBlock) {
        blocks.emplace_back(s, std::min(total, s + kAccumBlock));
    }
    std::vector<std::vector<double>> sums(blocks.size(),
                                          std::vector<double>(obs_count, 0.0));
    std::vector<std::vector<double>> sq(blocks.size(),
                                        std::vector<double>(obs_count, 0.0));
    parallel_for(blocks.size(), threads, [&](std::size_t i) {
        accumulate_range(blocks[i].first, blocks[i].second, obs, sums[i].data(),
                         sq[i].data());
    });
    std::vector<double> result(obs_count, 0.0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t v = 0; v < obs_count; ++v) {
            result[v] += sq[i][v];
        }
    }
    for (double &x : result) {
        x /= static_cast<double>(total);
    }
    return result;
}

double ShadowEstimator::empirical_variance(const TargetObservable &obs,
                                           int threads) const {
    const TargetObservable one[] = {obs};
    return empirical_variance_batch(one, threads)[0];
}

double snapshot_estimate(const Snapshot &snapshot, const TargetObservable &obs,
                         const ShadowEstimator &context) {
    return context.single_shot(snapshot, obs);
}

double estimate(const ShadowDataset &dataset, const TargetObservable &obs,
                const EstimatorConfig &cfg, int threads) {
    return ShadowEstimator(dataset).estimate(obs, cfg, threads);
}

double clifford_single_shot(const CliffordUnitary &unitary, std::uint32_t outcome,
                            const TargetObservable &obs) {
    const Eigen::Index d = unitary.dim();
    if (outcome >= static_cast<std::uint64_t>(d)) {
        throw ParameterError("clifford_single_shot: outcome exceeds dimension");
    }
    const ObsView view = make_view(obs, d);
    const auto row = unitary.dense().row(static_cast<Eigen::Index>(outcome));
    double overlap;
    if (view.kind == ObservableKind::Diag) {
        overlap = std::norm(row(view.l1));
    } else {
        overlap = std::norm(row(view.l1) * view.a1 + row(view.l2) * view.a2);
    }
    return (static_cast<double>(d) + 1.0) * overlap - 1.0;
}

double empirical_variance(const ShadowDataset &dataset,
                          const TargetObservable &obs, int threads) {
    return ShadowEstimator(dataset).empirical_variance(obs, threads);
}

std::uint64_t plan_samples(std::uint64_t targets, double eps, double delta,
                           PlanTarget target, bool conservative) {
    if (targets < 1) {
        throw ParameterError("plan_samples: target count must be positive");
    }
    if (!(eps > 0.0) || !(eps < 1.0) || !(delta > 0.0) || !(delta < 1.0)) {
        throw ParameterError("plan_samples: eps and delta must lie in (0, 1)");
    }
    const double log_term =
        std::log(2.0 * static_cast<double>(targets) / delta);
    double shots;
    switch (target) {
    case PlanTarget::Diagonal:
        shots = log_term / (2.0 * eps * eps);
        break;
    case PlanTarget::CliffordShadow:
        shots = (conservative ? kCliffordPlanConstantConservative
                              : kCliffordPlanConstant) *
                log_term / (eps * eps);
        break;
    case PlanTarget::BiasedMubShadow:
        shots = (conservative ? kBiasedMubPlanConstantConservative
                              : kBiasedMubPlanConstant) *
                log_term / (eps * eps);
        break;
    default:
        throw ParameterError("plan_samples: unknown target");
    }
    return static_cast<std::uint64_t>(std::ceil(shots));
}

std::vector<std::uint32_t> sample_computational_outcomes(const DensityMatrix &rho,
                                                         std::size_t shots,
                                                         std::uint64_t seed) {
    if (shots == 0) {
        throw ParameterError("sample_computational_outcomes: shot count must be positive");
    }
    const std::vector<double> cdf = born_cdf(rho.matrix().diagonal().real());
    std::vector<std::uint32_t> outcomes(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        RngStream rng(derive_seed(seed, i));
        outcomes[i] = pick_outcome(cdf, rng.next_double());
    }
    return outcomes;
}

} // namespace dmpst
