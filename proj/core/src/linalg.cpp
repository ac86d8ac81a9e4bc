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

#include "dmpst/linalg.hpp"

namespace dmpst {

double hermiticity_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitize(const ComplexMatrix &m) {
    return 0.5 * (m + m.adjoint());
}

bool qubit_count_for_dim(Eigen::Index d, int &n) {
    if (d < 2) {
        return false;
    }
    const auto ud = static_cast<std::uint64_t>(d);
    if ((ud & (ud - 1)) != 0) {
        return false;
    }
    n = 0;
    for (std::uint64_t v = ud; v > 1; v >>= 1) {
        ++n;
    }
    return true;
}

} // namespace dmpst
