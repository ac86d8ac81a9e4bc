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
#include <string>
#include <vector>

#include "dmpst/density_matrix.hpp"

namespace dmpst::cli {

// Exit codes, stable across versions.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Parses a ground-truth state specifier:
///   random:rank=R[,seed=S]   seeded Gaussian-induced state (seed defaults to
///                            a stream derived from default_seed)
///   file:PATH                density-matrix JSON file
///   plus | ghz | maxmixed    named fixtures
DensityMatrix parse_state_spec(const std::string &spec, int n,
                               std::uint64_t default_seed);

/// Runs the command-line tool; returns the process exit code.
int run_cli(int argc, const char *const *argv);
int run_cli(const std::vector<std::string> &args);

} // namespace dmpst::cli
