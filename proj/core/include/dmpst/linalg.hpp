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

#include <complex>

#include <Eigen/Dense>

namespace dmpst {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest entrywise deviation from Hermitian symmetry.
double hermiticity_defect(const ComplexMatrix &m);

/// (m + m^dagger) / 2.
ComplexMatrix hermitize(const ComplexMatrix &m);

/// True when d is 2^n for some n >= 1; on success stores n.
bool qubit_count_for_dim(Eigen::Index d, int &n);

} // namespace dmpst
