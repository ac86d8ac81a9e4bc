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

#include "dmpst/observables.hpp"

#include <cmath>

#include "dmpst/errors.hpp"

namespace dmpst {

namespace {

void require_pair(Eigen::Index j, Eigen::Index k) {
    if (j < 0 || k < 0 || j >= k) {
        throw ParameterError("target observable: indices must satisfy 0 <= j < k");
    }
}

} // namespace

TargetObservable TargetObservable::phi(Eigen::Index j, Eigen::Index k) {
    require_pair(j, k);
    return {ObservableKind::Phi, j, k};
}

TargetObservable TargetObservable::psi(Eigen::Index j, Eigen::Index k) {
    require_pair(j, k);
    return {ObservableKind::Psi, j, k};
}

TargetObservable TargetObservable::diag(Eigen::Index j) {
    if (j < 0) {
        throw ParameterError("target observable: diagonal index must be nonnegative");
    }
    return {ObservableKind::Diag, j, j};
}

ComplexVector TargetObservable::state_vector(Eigen::Index d) const {
    if (k >= d) {
        throw ParameterError("target observable: index exceeds dimension");
    }
    ComplexVector v = ComplexVector::Zero(d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case ObservableKind::Phi:
        v(j) = Complex(inv_sqrt2, 0.0);
        v(k) = Complex(inv_sqrt2, 0.0);
        break;
    case ObservableKind::Psi:
        v(j) = Complex(inv_sqrt2, 0.0);
        v(k) = Complex(0.0, inv_sqrt2);
        break;
    case ObservableKind::Diag:
        v(j) = Complex(1.0, 0.0);
        break;
    }
    return v;
}

ComplexMatrix TargetObservable::dense(Eigen::Index d) const {
    const ComplexVector v = state_vector(d);
    return v * v.adjoint();
}

std::vector<TargetObservable> offdiagonal_observable_set(Eigen::Index d) {
    std::vector<TargetObservable> set;
    set.reserve(static_cast<std::size_t>(d * (d - 1)));
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            set.push_back(TargetObservable::phi(j, k));
            set.push_back(TargetObservable::psi(j, k));
        }
    }
    return set;
}

} // namespace dmpst
