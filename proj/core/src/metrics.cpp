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

#include "dmpst/metrics.hpp"

#include "dmpst/errors.hpp"

namespace dmpst {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char *op) {
    if (a != b) {
        throw ParameterError(std::string(op) + ": dimension mismatch");
    }
}

} // namespace

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.rows(), b.rows(), "trace_distance");
    // The difference is Hermitian, so the singular values are the absolute
    // eigenvalues.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a - b,
                                                        Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    return trace_distance(a.matrix(), b.matrix());
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "fidelity");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(a.matrix());
    const ComplexMatrix sqrt_a =
        ea.eigenvectors() *
        ea.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
        ea.eigenvectors().adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> em(sqrt_a * b.matrix() * sqrt_a,
                                                    Eigen::EigenvaluesOnly);
    return em.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

Complex expectation(const DensityMatrix &rho, const ComplexMatrix &obs) {
    require_same_dim(rho.dim(), obs.rows(), "expectation");
    return (rho.matrix() * obs).trace();
}

} // namespace dmpst
