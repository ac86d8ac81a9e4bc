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

#include <vector>

#include "dmpst/linalg.hpp"

namespace dmpst {

enum class ObservableKind {
    Phi,  // projector onto (|j> + |k>) / sqrt(2)
    Psi,  // projector onto (|j> + i|k>) / sqrt(2)
    Diag, // projector onto |j>
};

/// A rank-1 target observable addressed by index pair.
///
/// Phi and Psi targets require j < k and are supported on exactly two
/// computational basis states with amplitudes of magnitude 1/sqrt(2); a Diag
/// target is the basis projector |j><j|. All three have unit trace.
struct TargetObservable {
    ObservableKind kind;
    Eigen::Index j;
    Eigen::Index k;

    static TargetObservable phi(Eigen::Index j, Eigen::Index k);
    static TargetObservable psi(Eigen::Index j, Eigen::Index k);
    static TargetObservable diag(Eigen::Index j);

    /// The projected state as a dense vector in dimension d.
    ComplexVector state_vector(Eigen::Index d) const;

    /// The projector as a dense d x d matrix (intended for tests and oracles;
    /// estimators never materialize it).
    ComplexMatrix dense(Eigen::Index d) const;
};

/// All Phi and Psi targets for dimension d, ordered (0,1),(0,2),...,(d-2,d-1)
/// with Phi before Psi per pair. Size is exactly d * (d - 1).
std::vector<TargetObservable> offdiagonal_observable_set(Eigen::Index d);

} // namespace dmpst
