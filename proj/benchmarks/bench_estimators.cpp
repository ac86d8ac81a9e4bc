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

#include <benchmark/benchmark.h>

#include "dmpst/estimation.hpp"
#include "dmpst/random_states.hpp"
#include "dmpst/shadows.hpp"

using namespace dmpst;

static void BM_MubBuild(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(MubEnsemble::build(n));
    }
}
BENCHMARK(BM_MubBuild)->DenseRange(1, 5);

static void BM_CliffordSample(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_clifford(n, rng));
    }
}
BENCHMARK(BM_CliffordSample)->DenseRange(1, 5);

static void BM_CollectMub(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho =
        random_density_matrix(Eigen::Index(1) << n, Eigen::Index(1) << n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(collect(rho, Scheme::BiasedMub, 10000, 7));
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_CollectMub)->DenseRange(1, 4);

static void BM_CollectClifford(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho =
        random_density_matrix(Eigen::Index(1) << n, Eigen::Index(1) << n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(collect(rho, Scheme::Clifford, 1000, 7));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_CollectClifford)->DenseRange(1, 3);

// The estimator hot loop: one dataset, all off-diagonal targets at once.
static void BM_EstimateAllEntriesMub(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Eigen::Index d = Eigen::Index(1) << n;
    const DensityMatrix rho = random_density_matrix(d, d, 5);
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, 50000, 7);
    const ShadowEstimator est(ds);
    const auto obs = offdiagonal_observable_set(d);
    const EstimatorConfig cfg = EstimatorConfig::for_targets(obs.size(), 0.05,
                                                             ds.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(est.estimate_batch(obs, cfg, 1));
    }
    state.SetItemsProcessed(state.iterations() * 50000 *
                            static_cast<long>(obs.size()));
}
BENCHMARK(BM_EstimateAllEntriesMub)->DenseRange(1, 4);

static void BM_SingleShotMub(benchmark::State &state) {
    const DensityMatrix rho = random_density_matrix(8, 8, 5);
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, 1000, 7);
    const ShadowEstimator est(ds);
    const TargetObservable obs = TargetObservable::psi(1, 6);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(est.single_shot(ds.shots()[i], obs));
        i = (i + 1) % ds.size();
    }
}
BENCHMARK(BM_SingleShotMub);

static void BM_ReconstructFull(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Eigen::Index d = Eigen::Index(1) << n;
    const DensityMatrix rho = random_density_matrix(d, d, 5);
    const std::uint64_t shots =
        required_shots_for_tomography(d, 0.3, 0.1, Scheme::BiasedMub);
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, shots, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct_full(ds, 0.3, 0.1, 1));
    }
}
BENCHMARK(BM_ReconstructFull)->DenseRange(1, 3);

BENCHMARK_MAIN();
