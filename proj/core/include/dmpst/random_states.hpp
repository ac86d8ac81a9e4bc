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

#include "dmpst/density_matrix.hpp"

namespace dmpst {

/// Gaussian-induced random state of the given rank: G G^dagger / tr(G G^dagger)
/// with G a d x rank matrix of independent standard complex Gaussian entries
/// (drawn row-major, real part then imaginary part). rank = d gives the
/// Hilbert-Schmidt ensemble. Deterministic in the seed.
DensityMatrix random_density_matrix(Eigen::Index d, Eigen::Index rank,
                                    std::uint64_t seed);

/// |+>^(x)n, the uniform superposition over all computational basis states.
StateVector plus_state(int n);

/// (|0...0> + |1...1>) / sqrt(2).
StateVector ghz_state(int n);

/// Computational basis state |j> in dimension d.
StateVector basis_state(Eigen::Index d, Eigen::Index j);

/// I / d.
DensityMatrix maximally_mixed(Eigen::Index d);

} // namespace dmpst
