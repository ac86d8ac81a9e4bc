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
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include <doctest.h>

#include "dmpst/clifford.hpp"
#include "dmpst/errors.hpp"

using namespace dmpst;

namespace {

std::string canonical_key(const ComplexMatrix &u) {
    std::string key;
    char buf[64];
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            // +0.0 normalizes negative zero.
            std::snprintf(buf, sizeof(buf), "%.6f %.6f;", u(r, c).real() + 0.0,
                          u(r, c).imag() + 0.0);
            key += buf;
        }
    }
    return key;
}

} // namespace

TEST_CASE("group orders") {
    CHECK(symplectic_group_order(1) == 6);
    CHECK(symplectic_group_order(2) == 720);
    CHECK(clifford_group_order(1) == 24);
    CHECK(clifford_group_order(2) == 11520);
}

TEST_CASE("enumeration lists each phase-stripped element exactly once") {
    for (int n = 1; n <= 2; ++n) {
        const auto all = enumerate_cliffords(n);
        REQUIRE(all.size() == clifford_group_order(n));
        std::set<std::string> keys;
        for (const CliffordUnitary &c : all) {
            keys.insert(canonical_key(c.dense()));
        }
        CHECK(keys.size() == all.size());
    }
    CHECK_THROWS_AS(enumerate_cliffords(3), ParameterError);
}

TEST_CASE("every enumerated single-qubit element passes the membership check") {
    for (const CliffordUnitary &c : enumerate_cliffords(1)) {
        CHECK(is_clifford_matrix(c.dense(), 1));
    }
}

TEST_CASE("sampled elements are unitary Clifford matrices") {
    for (int n = 1; n <= 3; ++n) {
        RngStream rng(derive_seed(31, static_cast<std::uint64_t>(n)));
        for (int i = 0; i < 8; ++i) {
            const CliffordUnitary c = sample_clifford(n, rng);
            const Eigen::Index d = c.dim();
            CHECK((c.dense() * c.dense().adjoint() - ComplexMatrix::Identity(d, d))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
            CHECK(is_clifford_matrix(c.dense(), n));
        }
    }
    RngStream rng(1);
    CHECK_THROWS_AS(sample_clifford(0, rng), ParameterError);
    CHECK_THROWS_AS(sample_clifford(6, rng), ParameterError);
}

TEST_CASE("sampling replays deterministically from the stream state") {
    RngStream a(4242), b(4242);
    for (int i = 0; i < 20; ++i) {
        const CliffordUnitary ca = sample_clifford(2, a);
        const CliffordUnitary cb = sample_clifford(2, b);
        CHECK(ca.tableau().symplectic == cb.tableau().symplectic);
        CHECK(ca.tableau().sign_bits == cb.tableau().sign_bits);
        CHECK((ca.dense() - cb.dense()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("single-qubit sampling is uniform over the 24 classes") {
    // Oracle: the 24 enumerated elements keyed by their canonical matrices.
    std::map<std::string, int> histogram;
    for (const CliffordUnitary &c : enumerate_cliffords(1)) {
        histogram[canonical_key(c.dense())] = 0;
    }
    REQUIRE(histogram.size() == 24);

    RngStream rng(20260809);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const CliffordUnitary c = sample_clifford(1, rng);
        const auto it = histogram.find(canonical_key(c.dense()));
        REQUIRE(it != histogram.end());
        ++it->second;
    }
    const double p = 1.0 / 24.0;
    const double band = 4.0 * std::sqrt(draws * p * (1.0 - p));
    for (const auto &[key, count] : histogram) {
        CHECK(std::abs(count - draws * p) < band);
    }
}

TEST_CASE("tableau images match dense conjugation") {
    for (int n = 1; n <= 2; ++n) {
        RngStream rng(derive_seed(77, static_cast<std::uint64_t>(n)));
        for (int rep = 0; rep < 5; ++rep) {
            const CliffordUnitary c = sample_clifford(n, rng);
            const ComplexMatrix &u = c.dense();
            for (int col = 0; col < 2 * n; ++col) {
                const std::uint32_t generator = 1u << col;
                const ComplexMatrix expected = pauli_dense(
                    c.tableau().symplectic[static_cast<std::size_t>(col)], n,
                    (c.tableau().sign_bits >> col) & 1u);
                const ComplexMatrix actual =
                    u * pauli_dense(generator, n) * u.adjoint();
                CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}
