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

#include "dmpst/density_matrix.hpp"

#include <cmath>
#include <string>

#include "dmpst/errors.hpp"

namespace dmpst {

StateVector StateVector::from_amplitudes(ComplexVector amps) {
    if (amps.size() < 1) {
        throw ParameterError("state vector: dimension must be at least 1");
    }
    const double norm2 = amps.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw ParameterError("state vector: squared norm deviates from 1 by " +
                             std::to_string(norm2 - 1.0));
    }
    return StateVector(std::move(amps));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw ParameterError("density matrix: entries must form a square d x d array");
    }
    const double herm = hermiticity_defect(m);
    if (herm > kHermitianTol) {
        throw ParameterError("density matrix: Hermiticity defect " +
                             std::to_string(herm));
    }
    const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_err > kTraceTol) {
        throw ParameterError("density matrix: trace deviates from 1 by " +
                             std::to_string(trace_err));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTol) {
        throw ParameterError("density matrix: negative eigenvalue " +
                             std::to_string(solver.eigenvalues().minCoeff()));
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const StateVector &state) {
    const ComplexVector &v = state.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::pure(const ComplexVector &amps) {
    return pure(StateVector::from_amplitudes(amps));
}

} // namespace dmpst
