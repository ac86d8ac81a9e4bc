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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmpst/bench.hpp"
#include "dmpst/dataset_io.hpp"
#include "dmpst/errors.hpp"
#include "dmpst/estimation.hpp"
#include "dmpst/metrics.hpp"
#include "dmpst/random_states.hpp"
#include "dmpst/version.hpp"

namespace dmpst::cli {

namespace {

using nlohmann::json;

// Stream index reserved for state generation so it never collides with the
// per-shot indices used by collect().
constexpr std::uint64_t kStateStreamTag = 0x5354415445ULL; // "STATE"

std::filesystem::path default_out_dir() {
    if (const char *env = std::getenv("DMPST_OUT_DIR")) {
        return env;
    }
    return std::filesystem::current_path();
}

// The invocation recorded in output provenance; the thread count is omitted
// because results are thread-count independent.
std::string invocation_string(const std::vector<std::string> &args) {
    std::string s = "dmpst";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--threads" || args[i] == "-t") {
            ++i; // skip the value too
            continue;
        }
        if (args[i].rfind("--threads=", 0) == 0) {
            continue;
        }
        s += " " + args[i];
    }
    return s;
}

json provenance_json(const std::string &invocation) {
    return json{{"tool", "dmpst"},
                {"version", std::string(kVersion)},
                {"invocation", invocation}};
}

struct EntryRequest {
    Eigen::Index j;
    Eigen::Index k;
};

std::vector<EntryRequest> parse_entries(const std::string &text) {
    std::vector<EntryRequest> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(';', pos), text.size());
        const std::string item = text.substr(pos, end - pos);
        if (!item.empty()) {
            const std::size_t comma = item.find(',');
            if (comma == std::string::npos) {
                throw UsageError("entries: expected 'j,k' pairs separated by ';'");
            }
            try {
                entries.push_back(
                    {std::stoll(item.substr(0, comma)),
                     std::stoll(item.substr(comma + 1))});
            } catch (const std::exception &) {
                throw UsageError("entries: indices must be integers");
            }
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    if (entries.empty()) {
        throw UsageError("entries: at least one 'j,k' pair is required");
    }
    return entries;
}

int cmd_collect(const std::string &scheme_name_arg, int n, std::uint64_t shots,
                std::uint64_t seed, const std::string &state_spec,
                std::filesystem::path out, int threads,
                const std::string &invocation) {
    const Scheme scheme = scheme_from_name(scheme_name_arg);
    const DensityMatrix rho = parse_state_spec(state_spec, n, seed);
    if (out.empty()) {
        out = default_out_dir() / "dataset.json";
    }
    const ShadowDataset ds = collect(rho, scheme, shots, seed, threads);
    // Attach provenance on top of the plain dataset format; loaders ignore it.
    json payload = json::parse(dataset_to_json(ds));
    payload["provenance"] = provenance_json(invocation);
    write_text_file(out, payload.dump());
    std::cout << "collected " << ds.size() << " " << scheme_name(scheme)
              << " shots (n=" << n << ", seed=" << seed << ") -> " << out.string()
              << "\n";
    return kExitOk;
}

int cmd_estimate(const std::filesystem::path &dataset_path,
                 const std::string &entries_text, double eps, double delta,
                 bool verbose, const std::string &format,
                 const std::filesystem::path &out, int threads,
                 const std::string &invocation) {
    const ShadowDataset ds = load_dataset(dataset_path);
    const Eigen::Index d = ds.dim();
    const std::vector<EntryRequest> requests = parse_entries(entries_text);

    std::vector<IndexPair> pairs;
    std::vector<Eigen::Index> diag_indices;
    for (const EntryRequest &r : requests) {
        if (r.j < 0 || r.k < 0 || r.j >= d || r.k >= d) {
            throw ParameterError("entries: index exceeds dataset dimension");
        }
        if (r.j > r.k) {
            throw ParameterError(
                "entries: require j < k; the (k, j) value is the conjugate of (j, k)");
        }
        if (r.j == r.k) {
            diag_indices.push_back(r.j);
        } else {
            pairs.emplace_back(r.j, r.k);
        }
    }

    const std::uint64_t needed = pairs.empty()
                                     ? 0
                                     : required_shots_for_entries(
                                           pairs.size(), d, eps, delta,
                                           ds.scheme());
    if (needed > ds.size()) {
        std::cerr << "warning: dataset holds " << ds.size()
                  << " shots; the requested accuracy plans for " << needed
                  << "\n";
    }

    std::vector<OffdiagonalComponents> components;
    if (!pairs.empty()) {
        components =
            estimate_offdiagonal_components(ds, pairs, eps, delta, threads);
    }
    std::vector<double> diag_values;
    if (!diag_indices.empty()) {
        const EstimatorConfig cfg = EstimatorConfig::for_targets(
            diag_indices.size(), delta, ds.size());
        diag_values = estimate_diagonal(ds, diag_indices, cfg, threads);
    }

    json entries = json::array();
    std::size_t pi = 0, di = 0;
    std::ostringstream csv;
    csv << "j,k,re,im\n";
    for (const EntryRequest &r : requests) {
        json e = {{"j", r.j}, {"k", r.k}};
        Complex value;
        if (r.j == r.k) {
            value = Complex(diag_values[di++], 0.0);
        } else {
            const OffdiagonalComponents &c = components[pi++];
            value = c.value();
            if (verbose) {
                e["components"] = {{"phi", c.phi},
                                   {"psi", c.psi},
                                   {"diag_j", c.diag_j},
                                   {"diag_k", c.diag_k}};
            }
        }
        e["value"] = json::array({value.real(), value.imag()});
        entries.push_back(std::move(e));
        csv << r.j << "," << r.k << "," << value.real() << "," << value.imag()
            << "\n";
    }

    json output = {
        {"version", 1},
        {"dataset",
         {{"scheme", scheme_name(ds.scheme())},
          {"n", ds.qubit_count()},
          {"shots", ds.size()},
          {"master_seed", ds.master_seed()}}},
        {"eps", eps},
        {"delta", delta},
        {"entries", std::move(entries)},
        {"provenance", provenance_json(invocation)},
    };

    const std::string rendered =
        format == "csv" ? csv.str() : output.dump(2) + "\n";
    if (out.empty()) {
        std::cout << rendered;
    } else {
        write_text_file(out, rendered);
        std::cout << "wrote " << out.string() << "\n";
    }
    return kExitOk;
}

int cmd_tomography(const std::string &scheme_name_arg, int n, double eps,
                   double delta, std::uint64_t seed,
                   const std::string &state_spec, std::filesystem::path out_dir,
                   bool conservative, int threads,
                   const std::string &invocation) {
    const Scheme scheme = scheme_from_name(scheme_name_arg);
    const DensityMatrix rho = parse_state_spec(state_spec, n, seed);
    const Eigen::Index d = rho.dim();
    if (out_dir.empty()) {
        out_dir = default_out_dir();
    }

    const std::uint64_t shots =
        required_shots_for_tomography(d, eps, delta, scheme, conservative);
    const ShadowDataset ds = collect(rho, scheme, shots, seed, threads);
    const MatrixEstimate est = reconstruct_full(ds, eps, delta, threads);
    const DensityMatrix projected = project_to_physical(est);
    const double raw_td = trace_distance(rho.matrix(), est.values);
    const double proj_td = trace_distance(rho, projected);

    const std::string invocation_blob = provenance_json(invocation).dump();
    write_text_file(out_dir / "estimate.json",
                    matrix_estimate_to_json(est, invocation_blob));
    json report = {
        {"version", 1},
        {"params",
         {{"scheme", scheme_name(scheme)},
          {"n", n},
          {"eps_trace", eps},
          {"delta", delta},
          {"seed", seed},
          {"state", state_spec},
          {"shots", shots},
          {"per_entry_budget", est.per_entry_budget},
          {"conservative_planning", conservative}}},
        {"trace_distance", {{"raw", raw_td}, {"projected", proj_td}}},
        {"provenance", provenance_json(invocation)},
    };
    write_text_file(out_dir / "report.json", report.dump(2) + "\n");

    std::cout << "tomography n=" << n << " scheme=" << scheme_name(scheme)
              << " shots=" << shots << " raw_td=" << raw_td
              << " projected_td=" << proj_td << " -> " << out_dir.string()
              << "\n";
    return kExitOk;
}

int cmd_bench(const std::filesystem::path &spec_path,
              std::filesystem::path out_dir, int threads,
              const std::string &invocation) {
    const bench::ExperimentSpec spec =
        bench::ExperimentSpec::from_json(read_text_file(spec_path));
    if (out_dir.empty()) {
        out_dir = default_out_dir();
    }
    const bench::ExperimentResult result = bench::run_experiment(spec, threads);
    bench::write_outputs(result, out_dir, invocation);
    for (const bench::ClaimResult &claim : result.claims) {
        std::cout << (claim.pass ? "pass" : "FAIL") << "  " << claim.name
                  << " = " << claim.value << "  (band " << claim.band << ")\n";
    }
    std::cout << (result.all_pass() ? "all claims passed" : "claim bands violated")
              << "; outputs in " << out_dir.string() << "\n";
    return result.all_pass() ? kExitOk : kExitClaimFailed;
}

} // namespace

DensityMatrix parse_state_spec(const std::string &spec, int n,
                               std::uint64_t default_seed) {
    if (n < 1 || n > 5) {
        throw ParameterError("state: qubit count must lie in 1..5");
    }
    const Eigen::Index d = Eigen::Index(1) << n;
    if (spec == "plus") {
        return DensityMatrix::pure(plus_state(n));
    }
    if (spec == "ghz") {
        return DensityMatrix::pure(ghz_state(n));
    }
    if (spec == "maxmixed") {
        return maximally_mixed(d);
    }
    if (spec.rfind("file:", 0) == 0) {
        const DensityMatrix rho =
            density_matrix_from_json(read_text_file(spec.substr(5)));
        if (rho.dim() != d) {
            throw UsageError("state file dimension does not match --n");
        }
        return rho;
    }
    if (spec.rfind("random:", 0) == 0) {
        Eigen::Index rank = -1;
        std::uint64_t seed = derive_seed(default_seed, kStateStreamTag);
        std::string rest = spec.substr(7);
        std::size_t pos = 0;
        while (pos <= rest.size() && !rest.empty()) {
            const std::size_t end = std::min(rest.find(',', pos), rest.size());
            const std::string kv = rest.substr(pos, end - pos);
            const std::size_t eq = kv.find('=');
            if (eq == std::string::npos) {
                throw UsageError("state: expected key=value in random spec");
            }
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            try {
                if (key == "rank") {
                    rank = std::stoll(value);
                } else if (key == "seed") {
                    seed = std::stoull(value);
                } else {
                    throw UsageError("state: unknown random spec key '" + key + "'");
                }
            } catch (const UsageError &) {
                throw;
            } catch (const std::exception &) {
                throw UsageError("state: bad value for '" + key + "'");
            }
            if (end == rest.size()) {
                break;
            }
            pos = end + 1;
        }
        if (rank < 1) {
            throw UsageError("state: random spec requires rank=R with R >= 1");
        }
        return random_density_matrix(d, rank, seed);
    }
    throw UsageError("state: unknown specifier '" + spec + "'");
}

int run_cli(const std::vector<std::string> &args) {
    std::vector<const char *> argv;
    argv.push_back("dmpst");
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char *const *argv) {
    CLI::App app{"direct density-matrix element estimation from randomized "
                 "measurement datasets"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    const std::string invocation = invocation_string(
        std::vector<std::string>(argv + 1, argv + argc));
    const int default_threads =
        std::max(1u, std::thread::hardware_concurrency());

    // collect
    auto *collect_cmd =
        app.add_subcommand("collect", "simulate a randomized-measurement dataset");
    std::string c_scheme = "mub", c_state;
    int c_n = 0, c_threads = default_threads;
    std::uint64_t c_shots = 0, c_seed = 0;
    std::string c_out;
    collect_cmd->add_option("--scheme", c_scheme, "mub | clifford");
    collect_cmd->add_option("--n", c_n, "qubit count")->required();
    collect_cmd->add_option("--shots", c_shots, "number of snapshots")->required();
    collect_cmd->add_option("--seed", c_seed, "master seed")->required();
    collect_cmd->add_option("--state", c_state, "ground-truth state spec")->required();
    collect_cmd->add_option("--out", c_out, "output dataset path");
    collect_cmd->add_option("--threads", c_threads, "worker threads");

    // estimate
    auto *estimate_cmd =
        app.add_subcommand("estimate", "estimate matrix entries from a dataset");
    std::string e_dataset, e_entries, e_format = "json", e_out;
    double e_eps = 0.1, e_delta = 0.05;
    bool e_verbose = false;
    int e_threads = default_threads;
    estimate_cmd->add_option("--dataset", e_dataset, "dataset file")->required();
    estimate_cmd->add_option("--entries", e_entries, "entry list, e.g. \"0,1;2,3\"")
        ->required();
    estimate_cmd->add_option("--eps", e_eps, "per-entry accuracy target");
    estimate_cmd->add_option("--delta", e_delta, "failure probability");
    estimate_cmd->add_flag("--verbose", e_verbose, "include component breakdown");
    estimate_cmd->add_option("--format", e_format, "json | csv");
    estimate_cmd->add_option("--out", e_out, "output path (default stdout)");
    estimate_cmd->add_option("--threads", e_threads, "worker threads");

    // tomography
    auto *tomo_cmd =
        app.add_subcommand("tomography", "full reconstruction with certification");
    std::string t_scheme = "mub", t_state, t_out;
    int t_n = 0, t_threads = default_threads;
    double t_eps = 0.1, t_delta = 0.05;
    std::uint64_t t_seed = 0;
    bool t_conservative = false;
    tomo_cmd->add_option("--scheme", t_scheme, "mub | clifford");
    tomo_cmd->add_option("--n", t_n, "qubit count")->required();
    tomo_cmd->add_option("--eps", t_eps, "trace-distance target")->required();
    tomo_cmd->add_option("--delta", t_delta, "failure probability")->required();
    tomo_cmd->add_option("--seed", t_seed, "master seed")->required();
    tomo_cmd->add_option("--state", t_state, "ground-truth state spec")->required();
    tomo_cmd->add_option("--out", t_out, "output directory");
    tomo_cmd->add_flag("--conservative", t_conservative,
                       "use the rigorous planning constants");
    tomo_cmd->add_option("--threads", t_threads, "worker threads");

    // bench
    auto *bench_cmd =
        app.add_subcommand("bench", "run a benchmark experiment from a JSON spec");
    std::string b_spec, b_out;
    int b_threads = default_threads;
    bench_cmd->add_option("--spec", b_spec, "experiment spec JSON")->required();
    bench_cmd->add_option("--out", b_out, "output directory");
    bench_cmd->add_option("--threads", b_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (collect_cmd->parsed()) {
            return cmd_collect(c_scheme, c_n, c_shots, c_seed, c_state, c_out,
                               c_threads, invocation);
        }
        if (estimate_cmd->parsed()) {
            return cmd_estimate(e_dataset, e_entries, e_eps, e_delta, e_verbose,
                                e_format, e_out, e_threads, invocation);
        }
        if (tomo_cmd->parsed()) {
            return cmd_tomography(t_scheme, t_n, t_eps, t_delta, t_seed, t_state,
                                  t_out, t_conservative, t_threads, invocation);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(b_spec, b_out, b_threads, invocation);
        }
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InsufficientDataError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace dmpst::cli
