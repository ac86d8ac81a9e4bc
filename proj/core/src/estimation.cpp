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

#include "dmpst/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dmpst/errors.hpp"

namespace dmpst {

namespace {

// Diagonal estimates for a biased-MUB dataset: outcome frequencies over the
// computational-basis slice.
std::vector<double> mub_diag_frequencies(const ShadowDataset &dataset,
                                         std::span<const Eigen::Index> indices) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(dataset.dim()), 0);
    std::uint64_t basis0 = 0;
    for (const Snapshot &s : dataset.shots()) {
        if (s.unitary_id == 0) {
            ++counts[s.outcome];
            ++basis0;
        }
    }
    if (basis0 == 0) {
        throw InsufficientDataError(
            "estimate_diagonal: dataset has no computational-basis snapshots",
            2);
    }
    std::vector<double> result;
    result.reserve(indices.size());
    for (Eigen::Index j : indices) {
        result.push_back(static_cast<double>(counts[static_cast<std::size_t>(j)]) /
                         static_cast<double>(basis0));
    }
    return result;
}

void require_indices(std::span<const Eigen::Index> indices, Eigen::Index d) {
    for (Eigen::Index j : indices) {
        if (j < 0 || j >= d) {
            throw ParameterError("estimate_diagonal: index out of range");
        }
    }
}

} // namespace

std::vector<double> estimate_diagonal(const ShadowDataset &dataset,
                                      std::span<const Eigen::Index> indices,
                                      const EstimatorConfig &cfg, int threads) {
    require_indices(indices, dataset.dim());
    if (dataset.scheme() == Scheme::BiasedMub) {
        return mub_diag_frequencies(dataset, indices);
    }
    std::vector<TargetObservable> obs;
    obs.reserve(indices.size());
    for (Eigen::Index j : indices) {
        obs.push_back(TargetObservable::diag(j));
    }
    return ShadowEstimator(dataset).estimate_batch(obs, cfg, threads);
}

std::vector<OffdiagonalComponents>
estimate_offdiagonal_components(const ShadowDataset &dataset,
                                std::span<const IndexPair> pairs, double eps,
                                double delta, int threads) {
    const Eigen::Index d = dataset.dim();
    std::vector<TargetObservable> obs;
    obs.reserve(2 * pairs.size());
    std::vector<Eigen::Index> diag_indices;
    for (const auto &[j, k] : pairs) {
        if (j < 0 || k >= d || j >= k) {
            throw ParameterError(
                "estimate_offdiagonal: pairs must satisfy 0 <= j < k < d");
        }
        obs.push_back(TargetObservable::phi(j, k));
        obs.push_back(TargetObservable::psi(j, k));
        diag_indices.push_back(j);
        diag_indices.push_back(k);
    }
    std::sort(diag_indices.begin(), diag_indices.end());
    diag_indices.erase(std::unique(diag_indices.begin(), diag_indices.end()),
                       diag_indices.end());

    const EstimatorConfig cfg =
        EstimatorConfig::for_targets(2 * pairs.size(), delta, dataset.size());
    (void)eps; // the accuracy target drives planning, not evaluation

    const std::vector<double> shadow =
        ShadowEstimator(dataset).estimate_batch(obs, cfg, threads);
    const std::vector<double> diags =
        estimate_diagonal(dataset, diag_indices, cfg, threads);
    std::map<Eigen::Index, double> diag_of;
    for (std::size_t i = 0; i < diag_indices.size(); ++i) {
        diag_of[diag_indices[i]] = diags[i];
    }

    std::vector<OffdiagonalComponents> result(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        result[i].phi = shadow[2 * i];
        result[i].psi = shadow[2 * i + 1];
        result[i].diag_j = diag_of[pairs[i].first];
        result[i].diag_k = diag_of[pairs[i].second];
    }
    return result;
}

std::vector<Complex> estimate_offdiagonal(const ShadowDataset &dataset,
                                          std::span<const IndexPair> pairs,
                                          double eps, double delta, int threads) {
    const auto components =
        estimate_offdiagonal_components(dataset, pairs, eps, delta, threads);
    std::vector<Complex> values;
    values.reserve(components.size());
    for (const auto &c : components) {
        values.push_back(c.value());
    }
    return values;
}

std::uint64_t required_shots_for_entries(std::uint64_t pairs, Eigen::Index d,
                                         double eps, double delta, Scheme scheme,
                                         bool conservative) {
    if (pairs < 1) {
        throw ParameterError("required_shots_for_entries: pair count must be positive");
    }
    // Four components per entry, each within eps / 4, sized per the union
    // bound across all simultaneous targets.
    const double component_eps = eps / 4.0;
    const std::uint64_t diag_targets =
        std::min<std::uint64_t>(2 * pairs, static_cast<std::uint64_t>(d));
    if (scheme == Scheme::Clifford) {
        return plan_samples(2 * pairs + diag_targets, component_eps, delta,
                            PlanTarget::CliffordShadow, conservative);
    }
    const std::uint64_t shadow_n = plan_samples(
        2 * pairs, component_eps, delta, PlanTarget::BiasedMubShadow, conservative);
    // Diagonals come from the basis-0 slice, which holds half the shots in
    // expectation.
    const std::uint64_t diag_n =
        2 * plan_samples(diag_targets, component_eps, delta, PlanTarget::Diagonal);
    return std::max(shadow_n, diag_n);
}

std::uint64_t required_shots_for_tomography(Eigen::Index d, double eps_trace,
                                            double delta, Scheme scheme,
                                            bool conservative) {
    const double eps1 =
        2.0 * eps_trace / std::pow(static_cast<double>(d), 1.5);
    const auto pairs = static_cast<std::uint64_t>(d * (d - 1) / 2);
    return required_shots_for_entries(pairs, d, eps1, delta, scheme, conservative);
}

MatrixEstimate reconstruct_full(const ShadowDataset &dataset, double eps_trace,
                                double delta, int threads) {
    const Eigen::Index d = dataset.dim();
    const double eps1 =
        2.0 * eps_trace / std::pow(static_cast<double>(d), 1.5);
    const std::uint64_t required =
        required_shots_for_tomography(d, eps_trace, delta, dataset.scheme());
    if (dataset.size() < required) {
        throw InsufficientDataError(
            "reconstruct_full: dataset holds " + std::to_string(dataset.size()) +
                " shots but the requested trace-distance target needs at least " +
                std::to_string(required),
            required);
    }

    std::vector<IndexPair> pairs;
    pairs.reserve(static_cast<std::size_t>(d * (d - 1) / 2));
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            pairs.emplace_back(j, k);
        }
    }
    std::vector<Eigen::Index> diag_indices(static_cast<std::size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        diag_indices[static_cast<std::size_t>(j)] = j;
    }

    const EstimatorConfig cfg = EstimatorConfig::for_targets(
        static_cast<std::size_t>(d * (d - 1)), delta, dataset.size());
    const std::vector<Complex> off =
        estimate_offdiagonal(dataset, pairs, eps1, delta, threads);
    const std::vector<double> diag =
        estimate_diagonal(dataset, diag_indices, cfg, threads);

    MatrixEstimate est;
    est.values = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        est.values(j, j) = Complex(diag[static_cast<std::size_t>(j)], 0.0);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [j, k] = pairs[i];
        est.values(j, k) = off[i];
        est.values(k, j) = std::conj(off[i]);
    }
    est.per_entry_budget = eps1;
    est.delta = delta;
    est.scheme = dataset.scheme();
    est.n = dataset.qubit_count();
    est.shots = dataset.size();
    est.master_seed = dataset.master_seed();
    return est;
}

DensityMatrix project_to_physical(const ComplexMatrix &hermitian_estimate) {
    if (hermitian_estimate.rows() != hermitian_estimate.cols()) {
        throw ParameterError("project_to_physical: matrix must be square");
    }
    const ComplexMatrix sym = hermitize(hermitian_estimate);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    const RealVector lambda = solver.eigenvalues();
    const Eigen::Index d = lambda.size();

    // Euclidean projection of the spectrum onto the probability simplex.
    std::vector<double> sorted(lambda.data(), lambda.data() + d);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumulative = 0.0;
    double tau = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        cumulative += sorted[static_cast<std::size_t>(i)];
        const double candidate =
            (cumulative - 1.0) / static_cast<double>(i + 1);
        if (sorted[static_cast<std::size_t>(i)] > candidate) {
            tau = candidate; // last index with positive slack wins
        }
    }
    RealVector projected(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        projected(i) = std::max(lambda(i) - tau, 0.0);
    }
    projected /= projected.sum();

    const ComplexMatrix result = solver.eigenvectors() *
                                 projected.asDiagonal() *
                                 solver.eigenvectors().adjoint();
    return DensityMatrix::from_matrix(hermitize(result));
}

DensityMatrix project_to_physical(const MatrixEstimate &estimate) {
    return project_to_physical(estimate.values);
}

} // namespace dmpst
