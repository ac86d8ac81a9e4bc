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

#include "dmpst/random_states.hpp"

#include <cmath>

#include "dmpst/errors.hpp"
#include "dmpst/rng.hpp"

namespace dmpst {

DensityMatrix random_density_matrix(Eigen::Index d, Eigen::Index rank,
                                    std::uint64_t seed) {
    if (d < 1) {
        throw ParameterError("random_density_matrix: dimension must be positive");
    }
    if (rank < 1 || rank > d) {
        throw ParameterError("random_density_matrix: rank must lie in 1..d");
    }
    RngStream rng = derive_stream(seed, 0);
    ComplexMatrix g(d, rank);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < rank; ++c) {
            const auto [re, im] = rng.next_gaussian_pair();
            g(r, c) = Complex(re, im);
        }
    }
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix::from_matrix(hermitize(m));
}

StateVector plus_state(int n) {
    if (n < 1) {
        throw ParameterError("plus_state: qubit count must be positive");
    }
    const Eigen::Index d = Eigen::Index(1) << n;
    ComplexVector amps =
        ComplexVector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0.0));
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector ghz_state(int n) {
    if (n < 1) {
        throw ParameterError("ghz_state: qubit count must be positive");
    }
    const Eigen::Index d = Eigen::Index(1) << n;
    ComplexVector amps = ComplexVector::Zero(d);
    amps(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
    amps(d - 1) = Complex(1.0 / std::sqrt(2.0), 0.0);
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector basis_state(Eigen::Index d, Eigen::Index j) {
    if (d < 1 || j < 0 || j >= d) {
        throw ParameterError("basis_state: index out of range");
    }
    ComplexVector amps = ComplexVector::Zero(d);
    amps(j) = Complex(1.0, 0.0);
    return StateVector::from_amplitudes(std::move(amps));
}

DensityMatrix maximally_mixed(Eigen::Index d) {
    if (d < 1) {
        throw ParameterError("maximally_mixed: dimension must be positive");
    }
    return DensityMatrix::from_matrix(ComplexMatrix::Identity(d, d) / double(d));
}

} // namespace dmpst
