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
#include <set>

#include <doctest.h>

#include "dmpst/errors.hpp"
#include "dmpst/rng.hpp"

using namespace dmpst;

TEST_CASE("derive_seed is deterministic and spreads indices") {
    CHECK(derive_seed(42, 0) == derive_seed(42, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        seen.insert(derive_seed(42, i));
    }
    CHECK(seen.size() == 10000);
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("streams replay identically from the same seed") {
    RngStream a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("next_double stays in [0, 1) and next_open_double in (0, 1]") {
    RngStream rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.next_open_double();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("next_below respects the bound and rejects zero") {
    RngStream rng(9);
    for (int i = 0; i < 10000; ++i) {
        CHECK(rng.next_below(24) < 24);
    }
    CHECK_THROWS_AS(rng.next_below(0), ParameterError);
}

TEST_CASE("gaussian pairs have roughly standard moments") {
    RngStream rng(11);
    double sum = 0.0, sum_sq = 0.0;
    const int count = 200000;
    for (int i = 0; i < count / 2; ++i) {
        const auto [a, b] = rng.next_gaussian_pair();
        sum += a + b;
        sum_sq += a * a + b * b;
    }
    CHECK(std::abs(sum / count) < 0.02);
    CHECK(std::abs(sum_sq / count - 1.0) < 0.02);
}
