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

#include "dmpst/density_matrix.hpp"

namespace dmpst {

/// Half the trace norm of a - b, for Hermitian a and b of equal dimension.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Root fidelity tr sqrt(sqrt(a) b sqrt(a)); 1 for identical states,
/// 0 for orthogonal pure states.
double fidelity(const DensityMatrix &a, const DensityMatrix &b);

/// tr(rho * obs).
Complex expectation(const DensityMatrix &rho, const ComplexMatrix &obs);

} // namespace dmpst
