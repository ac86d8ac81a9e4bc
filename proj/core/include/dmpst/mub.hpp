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
#include <vector>

#include "dmpst/linalg.hpp"
#include "dmpst/rng.hpp"

namespace dmpst {

/// The complete set of 2^n + 1 mutually unbiased bases for n qubits.
///
/// Basis 0 is the computational basis (the identity matrix); bases 1..2^n are
/// the nontrivial bases. Each basis is stored as the d x d unitary whose
/// columns are the basis states, so the projector onto outcome k of basis j is
/// column k times its adjoint, and the rotation applied before a computational
/// measurement in basis j is the stored matrix's adjoint.
///
/// Construction: for the field GF(2^n) with a fixed irreducible polynomial, a
/// self-dual basis {e_1..e_n} is located by deterministic search, and basis
/// 1 + mu gets the quadratic-phase states
///
///   <x| state_k > = i^{Q_mu(x)} (-1)^{k.x} / sqrt(d),
///   Q_mu(x) = sum_i M_ii x_i + 2 sum_{i<j} M_ij x_i x_j (mod 4),
///
/// where M is the F2 matrix of multiplication by mu in the self-dual basis
/// (symmetric, with invertible pairwise differences). Every nontrivial
/// amplitude times sqrt(d) is exactly +1, -1, +i or -i, and for a fixed row
/// the values share one of those axes and are evenly split between its two
/// signs. Column and basis ordering are part of the dataset format and are
/// frozen by fingerprint tests.
class MubEnsemble {
  public:
    /// Builds the ensemble for 1 <= n <= 5; throws ParameterError otherwise.
    static MubEnsemble build(int n);

    int qubit_count() const { return n_; }
    Eigen::Index dim() const { return Eigen::Index(1) << n_; }
    std::size_t basis_count() const { return bases_.size(); }

    /// Basis-state matrix of basis j (columns are the states; basis 0 is I).
    const ComplexMatrix &basis(std::size_t j) const { return bases_[j]; }

    /// Amplitude <row | state k of basis j>.
    Complex amplitude(std::size_t j, Eigen::Index row, Eigen::Index k) const {
        return bases_[j](row, k);
    }

  private:
    MubEnsemble(int n, std::vector<ComplexMatrix> bases)
        : n_(n), bases_(std::move(bases)) {}

    int n_;
    std::vector<ComplexMatrix> bases_;
};

/// FNV-1a hash of the exactly-rounded ensemble amplitudes; guards the frozen
/// basis and column ordering.
std::uint64_t mub_fingerprint(const MubEnsemble &ensemble);

/// The biased basis-sampling distribution: the computational basis with
/// probability 1/2, each nontrivial basis with probability 1/2^(n+1).
struct BiasedDistribution {
    int n;

    double computational_weight() const { return 0.5; }
    double nontrivial_weight() const {
        return 0.5 / static_cast<double>(std::uint64_t(1) << n);
    }
};

/// Draws a basis index in 0..2^n from one uniform double via inverse CDF.
/// The bucket boundaries are exact in binary, so the probabilities are exact.
std::size_t sample_basis(const BiasedDistribution &dist, RngStream &rng);

} // namespace dmpst
