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
#include <span>
#include <utility>
#include <vector>

#include "dmpst/shadows.hpp"

namespace dmpst {

using IndexPair = std::pair<Eigen::Index, Eigen::Index>;

/// Entrywise matrix estimate. Hermitian by construction (the lower triangle
/// mirrors the upper conjugate, diagonal entries are real) but not necessarily
/// positive semidefinite; per_entry_budget records the epsilon_1 the sizing
/// aimed for.
struct MatrixEstimate {
    ComplexMatrix values;
    double per_entry_budget = 0.0;
    double delta = 0.0;
    Scheme scheme = Scheme::BiasedMub;
    int n = 0;
    std::uint64_t shots = 0;
    std::uint64_t master_seed = 0;
};

/// Per-pair component breakdown of an off-diagonal estimate:
/// value = (phi - s/2) + i (s/2 - psi) with s = diag_j + diag_k.
struct OffdiagonalComponents {
    double phi = 0.0;
    double psi = 0.0;
    double diag_j = 0.0;
    double diag_k = 0.0;
    Complex value() const {
        const double s = diag_j + diag_k;
        return Complex(phi - 0.5 * s, 0.5 * s - psi);
    }
};

/// Diagonal entries rho_jj for the requested indices.
///
/// Biased-MUB datasets use the outcome frequencies of the computational-basis
/// snapshots (throws InsufficientDataError when there are none); Clifford
/// datasets use median-of-means channel estimates with O = |j><j|.
std::vector<double> estimate_diagonal(const ShadowDataset &dataset,
                                      std::span<const Eigen::Index> indices,
                                      const EstimatorConfig &cfg,
                                      int threads = 1);

/// Off-diagonal entries rho_jk (j < k per pair) recombined from the Phi and
/// Psi projector expectations and the two diagonal entries, with the
/// per-component budget eps/4 and batch count from (2 pairs, delta).
std::vector<Complex> estimate_offdiagonal(const ShadowDataset &dataset,
                                          std::span<const IndexPair> pairs,
                                          double eps, double delta,
                                          int threads = 1);

/// Same, returning the component breakdown per pair.
std::vector<OffdiagonalComponents>
estimate_offdiagonal_components(const ShadowDataset &dataset,
                                std::span<const IndexPair> pairs, double eps,
                                double delta, int threads = 1);

/// Shots sufficient to estimate `pairs` off-diagonal entries of a d-dim state
/// to per-entry accuracy eps at confidence 1 - delta, budgeting eps/4 per
/// component. For biased-MUB this covers both the shadow estimates and the
/// expected computational-basis slice that serves the diagonals.
std::uint64_t required_shots_for_entries(std::uint64_t pairs, Eigen::Index d,
                                         double eps, double delta, Scheme scheme,
                                         bool conservative = false);

/// Shots sufficient for a full reconstruction with trace-distance target
/// eps_trace, i.e. per-entry budget eps1 = 2 eps_trace / d^(3/2).
std::uint64_t required_shots_for_tomography(Eigen::Index d, double eps_trace,
                                            double delta, Scheme scheme,
                                            bool conservative = false);

/// Full entrywise reconstruction targeting trace distance eps_trace at
/// confidence 1 - delta. Diagonals come from estimate_diagonal, the upper
/// triangle from estimate_offdiagonal, the lower triangle by conjugation.
/// Throws InsufficientDataError (naming the sufficient N) when the dataset is
/// smaller than required_shots_for_tomography.
MatrixEstimate reconstruct_full(const ShadowDataset &dataset, double eps_trace,
                                double delta, int threads = 1);

/// Frobenius-closest unit-trace PSD matrix: eigenvalues projected onto the
/// probability simplex, eigenvectors kept. A valid state is returned
/// unchanged (up to roundoff).
DensityMatrix project_to_physical(const ComplexMatrix &hermitian_estimate);
DensityMatrix project_to_physical(const MatrixEstimate &estimate);

} // namespace dmpst
