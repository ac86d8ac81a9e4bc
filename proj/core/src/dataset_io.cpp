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

#include "dmpst/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dmpst/errors.hpp"

namespace dmpst {

namespace {

using nlohmann::json;

json parse(std::string_view text, const char *what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw UsageError(std::string(what) + ": malformed JSON");
    }
    return j;
}

// Missing keys and type mismatches surface as validation errors, not as
// library exceptions.
template <typename Fn> auto checked(const char *what, Fn &&fn) {
    try {
        return fn();
    } catch (const json::exception &e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

json complex_to_json(const Complex &z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw UsageError("complex entries must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &rows, Eigen::Index d) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
        throw UsageError("matrix entries must be a d x d array");
    }
    ComplexMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const json &row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw UsageError("matrix entries must be a d x d array");
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

} // namespace

std::string dataset_to_json(const ShadowDataset &dataset) {
    json body = json::array();
    for (const Snapshot &s : dataset.shots()) {
        body.push_back(json::array({s.unitary_id, s.outcome}));
    }
    json j = {
        {"version", kDatasetFormatVersion},
        {"scheme", scheme_name(dataset.scheme())},
        {"n", dataset.qubit_count()},
        {"master_seed", dataset.master_seed()},
        {"shots", dataset.size()},
        {"snapshots", std::move(body)},
    };
    return j.dump();
}

ShadowDataset dataset_from_json(std::string_view text) {
    const json j = parse(text, "dataset");
    if (!j.contains("version") || !j["version"].is_number_integer()) {
        throw UsageError("dataset: missing format version");
    }
    if (j["version"].get<int>() != kDatasetFormatVersion) {
        throw UsageError("dataset: unsupported format version " +
                         j["version"].dump());
    }
    return checked("dataset", [&] {
        const Scheme scheme = scheme_from_name(j.at("scheme").get<std::string>());
        const int n = j.at("n").get<int>();
        const auto master_seed = j.at("master_seed").get<std::uint64_t>();
        const auto declared = j.at("shots").get<std::uint64_t>();
        const json &body = j.at("snapshots");
        if (!body.is_array() || body.size() != declared) {
            throw UsageError("dataset: snapshot count does not match header");
        }
        std::vector<Snapshot> shots;
        shots.reserve(body.size());
        for (const json &row : body) {
            if (!row.is_array() || row.size() != 2) {
                throw UsageError(
                    "dataset: snapshots must be [unitary_id, outcome] pairs");
            }
            shots.push_back(Snapshot{row[0].get<std::uint64_t>(),
                                     row[1].get<std::uint32_t>()});
        }
        return ShadowDataset(scheme, n, master_seed, std::move(shots));
    });
}

void save_dataset(const ShadowDataset &dataset,
                  const std::filesystem::path &path) {
    write_text_file(path, dataset_to_json(dataset));
}

ShadowDataset load_dataset(const std::filesystem::path &path) {
    return dataset_from_json(read_text_file(path));
}

std::string matrix_estimate_to_json(const MatrixEstimate &estimate,
                                    const std::string &provenance) {
    json j = {
        {"version", kEstimateFormatVersion},
        {"metadata",
         {
             {"scheme", scheme_name(estimate.scheme)},
             {"n", estimate.n},
             {"shots", estimate.shots},
             {"master_seed", estimate.master_seed},
             {"eps1", estimate.per_entry_budget},
             {"delta", estimate.delta},
         }},
        {"values", matrix_to_json(estimate.values)},
    };
    if (!provenance.empty()) {
        j["provenance"] = parse(provenance, "provenance");
    }
    return j.dump();
}

MatrixEstimate matrix_estimate_from_json(std::string_view text) {
    const json j = parse(text, "matrix estimate");
    return checked("matrix estimate", [&] {
        if (j.at("version").get<int>() != kEstimateFormatVersion) {
            throw UsageError("matrix estimate: unsupported format version");
        }
        const json &meta = j.at("metadata");
        MatrixEstimate est;
        est.scheme = scheme_from_name(meta.at("scheme").get<std::string>());
        est.n = meta.at("n").get<int>();
        est.shots = meta.at("shots").get<std::uint64_t>();
        est.master_seed = meta.at("master_seed").get<std::uint64_t>();
        est.per_entry_budget = meta.at("eps1").get<double>();
        est.delta = meta.at("delta").get<double>();
        const Eigen::Index d = Eigen::Index(1) << est.n;
        est.values = matrix_from_json(j.at("values"), d);
        return est;
    });
}

std::string density_matrix_to_json(const DensityMatrix &rho) {
    json j = {
        {"dim", rho.dim()},
        {"entries", matrix_to_json(rho.matrix())},
    };
    return j.dump();
}

DensityMatrix density_matrix_from_json(std::string_view text) {
    const json j = parse(text, "density matrix");
    return checked("density matrix", [&] {
        const auto d = j.at("dim").get<Eigen::Index>();
        if (d < 1) {
            throw UsageError("density matrix: dim must be positive");
        }
        return DensityMatrix::from_matrix(matrix_from_json(j.at("entries"), d));
    });
}

std::string mub_ensemble_to_json(const MubEnsemble &ensemble) {
    json bases = json::array();
    for (std::size_t b = 0; b < ensemble.basis_count(); ++b) {
        const ComplexMatrix &v = ensemble.basis(b);
        json columns = json::array();
        for (Eigen::Index c = 0; c < v.cols(); ++c) {
            json column = json::array();
            for (Eigen::Index r = 0; r < v.rows(); ++r) {
                column.push_back(complex_to_json(v(r, c)));
            }
            columns.push_back(std::move(column));
        }
        bases.push_back(std::move(columns));
    }
    json j = {
        {"n", ensemble.qubit_count()},
        {"fingerprint", mub_fingerprint(ensemble)},
        {"bases", std::move(bases)},
    };
    return j.dump();
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw IoError("read failure: " + path.string());
    }
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.good()) {
        throw IoError("write failure: " + path.string());
    }
}

} // namespace dmpst
