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

/// A phase-stripped n-qubit Clifford element in tableau form.
///
/// Symplectic vectors live in F2^(2n) packed into a uint32 with bit 2q the
/// X part and bit 2q+1 the Z part of qubit q. Column c of `symplectic` is the
/// image of generator c (even c: X_{c/2}, odd c: Z_{c/2}); bit c of
/// `sign_bits` negates that image.
struct CliffordTableau {
    int n = 0;
    std::vector<std::uint32_t> symplectic;
    std::uint32_t sign_bits = 0;
};

/// A Clifford element with its dense matrix action materialized.
///
/// The dense matrix is the canonical global-phase representative: the first
/// nonzero entry (scanning column-major) is made positive real. Immutable
/// after construction.
class CliffordUnitary {
  public:
    explicit CliffordUnitary(CliffordTableau tableau, std::uint64_t seed = 0);

    int qubit_count() const { return tableau_.n; }
    Eigen::Index dim() const { return Eigen::Index(1) << tableau_.n; }
    const CliffordTableau &tableau() const { return tableau_; }
    const ComplexMatrix &dense() const { return dense_; }

    /// Seed recorded when the element came from sample_clifford; datasets
    /// identify Clifford shots by this value.
    std::uint64_t sample_seed() const { return seed_; }

  private:
    CliffordTableau tableau_;
    ComplexMatrix dense_;
    std::uint64_t seed_;
};

/// Order of the symplectic group Sp(2n, F2).
std::uint64_t symplectic_group_order(int n);

/// Order of the n-qubit Clifford group modulo global phase.
std::uint64_t clifford_group_order(int n);

/// Uniform sample from the phase-stripped n-qubit Clifford group, 1 <= n <= 5.
///
/// The symplectic part is drawn by the hyperbolic-pair recursion (for each
/// generator pair, a uniform valid image pair in the remaining symplectic
/// complement), which indexes the group exactly; sign bits are uniform.
CliffordUnitary sample_clifford(int n, RngStream &rng);

/// The element at a given (symplectic index, sign bits) coordinate;
/// enumerating sp_index over [0, symplectic_group_order(n)) and sign bits
/// over [0, 4^n) visits every phase-stripped element exactly once.
CliffordUnitary clifford_from_index(int n, std::uint64_t sp_index,
                                    std::uint32_t sign_bits);

/// All phase-stripped elements for n in {1, 2} (24 and 11520 elements).
std::vector<CliffordUnitary> enumerate_cliffords(int n);

/// Group-membership check: U conjugates every X_q and Z_q generator to a
/// single signed Pauli within tol.
bool is_clifford_matrix(const ComplexMatrix &u, int n, double tol = 1e-10);

/// Dense signed Hermitian Pauli for a packed symplectic vector (qubit 0 is
/// the least significant bit of the basis index).
ComplexMatrix pauli_dense(std::uint32_t v, int n, bool negated = false);

} // namespace dmpst
