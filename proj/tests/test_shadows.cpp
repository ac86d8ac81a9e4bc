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

#include <cmath>

#include <doctest.h>

#include "dmpst/errors.hpp"
#include "dmpst/metrics.hpp"
#include "dmpst/random_states.hpp"
#include "dmpst/shadows.hpp"

using namespace dmpst;

TEST_CASE("collect validates its inputs") {
    const DensityMatrix rho = random_density_matrix(4, 4, 1);
    CHECK_THROWS_AS(collect(rho, Scheme::BiasedMub, 0, 1), ParameterError);
    const DensityMatrix odd = random_density_matrix(3, 3, 1);
    CHECK_THROWS_AS(collect(odd, Scheme::BiasedMub, 10, 1), ParameterError);
}

TEST_CASE("collect replays bit-identically, independent of thread count") {
    const DensityMatrix rho = random_density_matrix(4, 3, 7);
    for (const Scheme scheme : {Scheme::BiasedMub, Scheme::Clifford}) {
        const ShadowDataset a = collect(rho, scheme, 2000, 99, 1);
        const ShadowDataset b = collect(rho, scheme, 2000, 99, 8);
        REQUIRE(a.size() == b.size());
        CHECK(a.shots() == b.shots());
        const ShadowDataset c = collect(rho, scheme, 2000, 99, 3);
        CHECK(a.shots() == c.shots());
    }
}

TEST_CASE("computational-basis snapshots of |0><0| always read outcome 0") {
    const DensityMatrix rho = DensityMatrix::pure(basis_state(2, 0));
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, 5000, 3);
    int basis0 = 0;
    for (const Snapshot &s : ds.shots()) {
        if (s.unitary_id == 0) {
            ++basis0;
            CHECK(s.outcome == 0);
        }
    }
    CHECK(basis0 > 0);
}

TEST_CASE("maximally mixed single qubit gives symmetric outcomes in every basis") {
    const ShadowDataset ds = collect(maximally_mixed(2), Scheme::BiasedMub, 100000, 5);
    int count[3][2] = {};
    for (const Snapshot &s : ds.shots()) {
        ++count[s.unitary_id][s.outcome];
    }
    for (int j = 0; j < 3; ++j) {
        const double total = count[j][0] + count[j][1];
        const double band = 4.0 * std::sqrt(total * 0.25);
        CHECK(std::abs(count[j][0] - total / 2) < band);
    }
}

TEST_CASE("Clifford channel estimates for the identity element") {
    CliffordTableau identity;
    identity.n = 1;
    identity.symplectic = {1u, 2u};
    identity.sign_bits = 0;
    const CliffordUnitary u(identity);
    REQUIRE((u.dense() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
            1e-12);
    const TargetObservable o = TargetObservable::diag(0);
    CHECK(std::abs(clifford_single_shot(u, 0, o) - 2.0) < 1e-12);
    CHECK(std::abs(clifford_single_shot(u, 1, o) - (-1.0)) < 1e-12);
}

TEST_CASE("exhaustive single-qubit unbiasedness of the Clifford estimator") {
    // Born-weighted average of single-shot estimates over all 24 elements.
    const DensityMatrix rho = DensityMatrix::pure(plus_state(1));
    const TargetObservable obs = TargetObservable::phi(0, 1); // |+><+|
    double acc = 0.0;
    const auto all = enumerate_cliffords(1);
    for (const CliffordUnitary &c : all) {
        const ComplexMatrix evolved =
            c.dense() * rho.matrix() * c.dense().adjoint();
        for (std::uint32_t k = 0; k < 2; ++k) {
            acc += evolved(k, k).real() * clifford_single_shot(c, k, obs);
        }
    }
    acc /= static_cast<double>(all.size());
    CHECK(std::abs(acc - 1.0) < 1e-10);
}

TEST_CASE("biased-MUB snapshot estimates average back to the target expectation") {
    // All (basis, outcome) cells weighted by sampling probability and Born rule.
    const int n = 2;
    const Eigen::Index d = 4;
    const DensityMatrix rho = random_density_matrix(d, d, 21);
    const MubEnsemble ens = MubEnsemble::build(n);
    const BiasedDistribution dist{n};
    const ShadowDataset empty_like(Scheme::BiasedMub, n, 0, {Snapshot{0, 0}});
    const ShadowEstimator context(empty_like);
    for (const TargetObservable &obs :
         {TargetObservable::phi(0, 3), TargetObservable::psi(1, 2),
          TargetObservable::diag(2)}) {
        double acc = 0.0;
        for (std::size_t j = 0; j < ens.basis_count(); ++j) {
            const double pr =
                j == 0 ? dist.computational_weight() : dist.nontrivial_weight();
            for (std::uint32_t k = 0; k < d; ++k) {
                const ComplexVector v = ens.basis(j).col(k);
                const double born = (v.adjoint() * rho.matrix() * v)(0, 0).real();
                acc += pr * born *
                       context.single_shot(Snapshot{j, k}, obs);
            }
        }
        const double truth = expectation(rho, obs.dense(d)).real();
        CHECK(std::abs(acc - truth) < 1e-10);
    }
}

TEST_CASE("estimate degenerates to the mean at B = 1 and is median-stable") {
    const DensityMatrix rho = random_density_matrix(4, 4, 77);
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, 3000, 11);
    const ShadowEstimator est(ds);
    const TargetObservable obs = TargetObservable::phi(0, 2);

    EstimatorConfig mean_cfg;
    mean_cfg.batches = 1;
    double manual = 0.0;
    for (const Snapshot &s : ds.shots()) {
        manual += est.single_shot(s, obs);
    }
    manual /= static_cast<double>(ds.size());
    CHECK(std::abs(est.estimate(obs, mean_cfg) - manual) < 1e-12);

    // A constant single-shot sequence returns that constant for any B: use
    // the diagonal observable on |0><0| under basis-0 snapshots only.
    std::vector<Snapshot> fixed(100, Snapshot{0, 0});
    const ShadowDataset constant(Scheme::BiasedMub, 2, 0, std::move(fixed));
    const ShadowEstimator cest(constant);
    for (std::size_t b : {1u, 3u, 10u}) {
        EstimatorConfig cfg;
        cfg.batches = b;
        CHECK(std::abs(cest.estimate(TargetObservable::diag(0), cfg) -
                       (2.0 - 0.25)) < 1e-12);
    }
}

TEST_CASE("estimate rejects empty datasets and bad batch counts") {
    const DensityMatrix rho = random_density_matrix(2, 2, 5);
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, 10, 1);
    EstimatorConfig cfg;
    cfg.batches = 11;
    CHECK_THROWS_AS(estimate(ds, TargetObservable::phi(0, 1), cfg),
                    ParameterError);
}

TEST_CASE("median-of-means estimates land near the truth over seeded trials") {
    const Eigen::Index d = 4;
    const TargetObservable obs = TargetObservable::phi(0, 1);
    int hits = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const DensityMatrix rho =
            random_density_matrix(d, d, derive_seed(1000, t));
        const ShadowDataset ds =
            collect(rho, Scheme::BiasedMub, 50000, derive_seed(2000, t), 8);
        EstimatorConfig cfg;
        cfg.batches = 10;
        const double est = estimate(ds, obs, cfg);
        const double truth = expectation(rho, obs.dense(d)).real();
        if (std::abs(est - truth) <= 0.05) {
            ++hits;
        }
    }
    CHECK(hits >= 99);
}

TEST_CASE("estimator error shrinks like one over sqrt(N)") {
    const Eigen::Index d = 4;
    const TargetObservable obs = TargetObservable::psi(0, 3);
    const DensityMatrix rho = random_density_matrix(d, d, 31337);
    const double truth = expectation(rho, obs.dense(d)).real();
    std::vector<double> log_n, log_err;
    for (const std::size_t shots : {1000u, 10000u, 100000u}) {
        double mse = 0.0;
        const int trials = 60;
        for (int t = 0; t < trials; ++t) {
            const ShadowDataset ds = collect(
                rho, Scheme::BiasedMub, shots,
                derive_seed(5000 + shots, static_cast<std::uint64_t>(t)), 8);
            EstimatorConfig cfg;
            cfg.batches = 1;
            const double err = estimate(ds, obs, cfg) - truth;
            mse += err * err;
        }
        mse /= trials;
        log_n.push_back(std::log(static_cast<double>(shots)));
        log_err.push_back(0.5 * std::log(mse));
    }
    const double slope = (log_err.back() - log_err.front()) /
                         (log_n.back() - log_n.front());
    CHECK(slope < -0.5 + 0.15);
    CHECK(slope > -0.5 - 0.15);
}

TEST_CASE("empirical variance respects the scheme bounds on aligned states") {
    const int n = 2;
    const Eigen::Index d = 4;
    const TargetObservable obs = TargetObservable::psi(1, 3);
    const DensityMatrix sigma = DensityMatrix::pure(obs.state_vector(d));

    const ShadowDataset mub = collect(sigma, Scheme::BiasedMub, 30000, 8);
    const double v_mub = empirical_variance(mub, obs);
    CHECK(v_mub <= 1.5 + 0.1);

    const ShadowDataset cliff = collect(sigma, Scheme::Clifford, 30000, 8);
    const double v_cliff = empirical_variance(cliff, obs);
    CHECK(v_cliff <= 3.0 * (1.0 - 1.0 / double(d)) + 0.1);

    const ShadowDataset tiny(Scheme::BiasedMub, n, 0, {Snapshot{0, 0}});
    CHECK_THROWS_AS(empirical_variance(tiny, obs), UsageError);
}

TEST_CASE("half of the biased-MUB snapshots reuse the computational basis") {
    const DensityMatrix rho = random_density_matrix(8, 8, 17);
    const std::size_t shots = 100000;
    const ShadowDataset ds = collect(rho, Scheme::BiasedMub, shots, 23);
    std::size_t basis0 = 0;
    std::vector<std::size_t> outcome_counts(8, 0);
    for (const Snapshot &s : ds.shots()) {
        if (s.unitary_id == 0) {
            ++basis0;
            ++outcome_counts[s.outcome];
        }
    }
    const double band = 4.0 * std::sqrt(shots * 0.25);
    CHECK(std::abs(double(basis0) - shots / 2.0) < band);
    for (Eigen::Index j = 0; j < 8; ++j) {
        const double p = rho.matrix()(j, j).real();
        const double freq =
            double(outcome_counts[static_cast<std::size_t>(j)]) / double(basis0);
        CHECK(std::abs(freq - p) <
              4.0 * std::sqrt(p * (1.0 - p) / double(basis0)) + 1e-3);
    }
}

TEST_CASE("plan_samples reproduces the closed-form counts") {
    CHECK(plan_samples(1, 0.1, 0.05, PlanTarget::Diagonal) == 185);
    CHECK(plan_samples(10, 0.1, 0.05, PlanTarget::Diagonal) == 300);
    // delta = 2/e makes ln(2/delta) = 1.
    CHECK(plan_samples(1, 0.1, 2.0 / std::exp(1.0), PlanTarget::Diagonal) ==
          static_cast<std::uint64_t>(std::ceil(1.0 / 0.02)));
    CHECK(plan_samples(1, 0.1, 0.05, PlanTarget::BiasedMubShadow) <
          plan_samples(1, 0.1, 0.05, PlanTarget::CliffordShadow));
    CHECK(plan_samples(1, 0.1, 0.05, PlanTarget::CliffordShadow, true) >
          plan_samples(1, 0.1, 0.05, PlanTarget::CliffordShadow));
    CHECK_THROWS_AS(plan_samples(0, 0.1, 0.05, PlanTarget::Diagonal),
                    ParameterError);
    CHECK_THROWS_AS(plan_samples(1, 1.5, 0.05, PlanTarget::Diagonal),
                    ParameterError);
}

TEST_CASE("Hoeffding coverage of planned diagonal estimation") {
    const std::uint64_t shots = plan_samples(1, 0.1, 0.05, PlanTarget::Diagonal);
    REQUIRE(shots == 185);
    int hits = 0;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        const DensityMatrix rho =
            random_density_matrix(4, 4, derive_seed(909, t));
        const auto outcomes = sample_computational_outcomes(
            rho, shots, derive_seed(808, static_cast<std::uint64_t>(t)));
        std::size_t zeros = 0;
        for (const std::uint32_t o : outcomes) {
            zeros += o == 0 ? 1 : 0;
        }
        const double p_hat = double(zeros) / double(shots);
        if (std::abs(p_hat - rho.matrix()(0, 0).real()) <= 0.1) {
            ++hits;
        }
    }
    CHECK(double(hits) / trials >= 0.93);
}

TEST_CASE("scheme names round-trip") {
    CHECK(scheme_from_name(scheme_name(Scheme::Clifford)) == Scheme::Clifford);
    CHECK(scheme_from_name("mub") == Scheme::BiasedMub);
    CHECK_THROWS_AS(scheme_from_name("haar"), UsageError);
}
