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

#include <filesystem>
#include <string>
#include <string_view>

#include "dmpst/estimation.hpp"
#include "dmpst/mub.hpp"
#include "dmpst/shadows.hpp"

namespace dmpst {

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kEstimateFormatVersion = 1;

/// Dataset file: a JSON header {version, scheme, n, master_seed, shots}
/// followed by the snapshot body as an array of [unitary_id, outcome] pairs.
/// Serialization is byte-deterministic; loaders reject unknown versions.
std::string dataset_to_json(const ShadowDataset &dataset);
ShadowDataset dataset_from_json(std::string_view text);
void save_dataset(const ShadowDataset &dataset, const std::filesystem::path &path);
ShadowDataset load_dataset(const std::filesystem::path &path);

/// Matrix estimate file: complex entries as [re, im] plus the metadata block.
/// Values round-trip bit-exactly. `provenance` is an optional pre-rendered
/// JSON object appended under "provenance".
std::string matrix_estimate_to_json(const MatrixEstimate &estimate,
                                    const std::string &provenance = {});
MatrixEstimate matrix_estimate_from_json(std::string_view text);

/// Density-matrix file for ground-truth states: {dim, entries} with complex
/// entries as [re, im].
std::string density_matrix_to_json(const DensityMatrix &rho);
DensityMatrix density_matrix_from_json(std::string_view text);

/// Debug export of an ensemble: list of bases, each a list of columns, each
/// complex as [re, im]; intended for cross-language verification.
std::string mub_ensemble_to_json(const MubEnsemble &ensemble);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace dmpst
