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

#include "dmpst/linalg.hpp"

namespace dmpst {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// A pure state: a unit-norm complex amplitude vector.
class StateVector {
  public:
    /// Validates the norm against kNormTol; throws ParameterError otherwise.
    static StateVector from_amplitudes(ComplexVector amps);

    Eigen::Index dim() const { return amps_.size(); }
    const ComplexVector &amplitudes() const { return amps_; }

  private:
    explicit StateVector(ComplexVector amps) : amps_(std::move(amps)) {}
    ComplexVector amps_;
};

/// A quantum state: Hermitian, positive semidefinite, unit trace.
///
/// Construction validates all three invariants (to kHermitianTol, kPsdTol and
/// kTraceTol respectively) and throws ParameterError on violation. Instances
/// are immutable and safe to share across threads.
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(ComplexMatrix m);
    static DensityMatrix pure(const StateVector &state);
    static DensityMatrix pure(const ComplexVector &amps);

    Eigen::Index dim() const { return mat_.rows(); }
    const ComplexMatrix &matrix() const { return mat_; }

  private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

} // namespace dmpst
