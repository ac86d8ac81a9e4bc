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

#include "dmpst/mub.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>

#include "dmpst/errors.hpp"

namespace dmpst {

namespace {

// Fixed irreducible polynomials for GF(2^n), n = 1..5 (bit i = coefficient
// of x^i). Changing these changes the frozen basis ordering.
constexpr std::array<unsigned, 6> kIrreducible = {0u,       0b11u,     0b111u,
                                                  0b1011u,  0b10011u,  0b100101u};

unsigned gf_mul(unsigned a, unsigned b, int n) {
    const unsigned poly = kIrreducible[static_cast<std::size_t>(n)];
    unsigned r = 0;
    while (b != 0) {
        if (b & 1u) {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a >> n & 1u) {
            a ^= poly;
        }
    }
    return r;
}

// Field trace GF(2^n) -> GF(2): sum of the Frobenius conjugates.
unsigned gf_trace(unsigned a, int n) {
    unsigned acc = 0;
    unsigned x = a;
    for (int i = 0; i < n; ++i) {
        acc ^= x;
        x = gf_mul(x, x, n);
    }
    return acc & 1u;
}

// First basis of GF(2^n) over GF(2) (in lexicographic element order) whose
// trace-form Gram matrix is the identity. Such a basis exists for every n in
// characteristic 2; the multiplication matrices expressed in it come out
// symmetric, which the quadratic-phase construction below needs.
bool find_self_dual_basis(int n, std::vector<unsigned> &basis) {
    if (static_cast<int>(basis.size()) == n) {
        return true;
    }
    const unsigned count = 1u << n;
    for (unsigned cand = 1; cand < count; ++cand) {
        if (gf_trace(gf_mul(cand, cand, n), n) != 1u) {
            continue; // needs Tr(e_i e_i) = 1
        }
        bool ok = true;
        for (unsigned e : basis) {
            if (e == cand || gf_trace(gf_mul(e, cand, n), n) != 0u) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        basis.push_back(cand);
        if (find_self_dual_basis(n, basis)) {
            return true;
        }
        basis.pop_back();
    }
    return false;
}

} // namespace

MubEnsemble MubEnsemble::build(int n) {
    if (n < 1 || n > 5) {
        throw ParameterError("mub: qubit count must lie in 1..5");
    }
    const Eigen::Index d = Eigen::Index(1) << n;
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));

    std::vector<unsigned> field_basis;
    if (!find_self_dual_basis(n, field_basis)) {
        throw Error("mub: self-dual field basis search failed");
    }

    std::vector<ComplexMatrix> bases;
    bases.reserve(static_cast<std::size_t>(d) + 1);
    bases.push_back(ComplexMatrix::Identity(d, d));

    const std::array<Complex, 4> phase = {Complex(1, 0), Complex(0, 1),
                                          Complex(-1, 0), Complex(0, -1)};

    for (unsigned mu = 0; mu < static_cast<unsigned>(d); ++mu) {
        // Multiplication-by-mu matrix in the self-dual basis:
        // M[i][j] = Tr(e_i mu e_j); symmetric, and M_mu - M_nu invertible for
        // mu != nu, which is exactly what pairwise unbiasedness needs.
        std::vector<std::vector<unsigned>> m(static_cast<std::size_t>(n),
                                             std::vector<unsigned>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m[i][j] = gf_trace(
                    gf_mul(field_basis[i], gf_mul(mu, field_basis[j], n), n), n);
            }
        }
        // Quadratic phase Q(x) mod 4 per row index x.
        std::vector<int> q(static_cast<std::size_t>(d), 0);
        for (Eigen::Index x = 0; x < d; ++x) {
            int acc = 0;
            for (int i = 0; i < n; ++i) {
                if (!((x >> i) & 1)) {
                    continue;
                }
                acc += static_cast<int>(m[i][i]);
                for (int j = i + 1; j < n; ++j) {
                    if ((x >> j) & 1) {
                        acc += 2 * static_cast<int>(m[i][j]);
                    }
                }
            }
            q[static_cast<std::size_t>(x)] = acc & 3;
        }
        ComplexMatrix v(d, d);
        for (Eigen::Index col = 0; col < d; ++col) {
            for (Eigen::Index x = 0; x < d; ++x) {
                const int parity =
                    std::popcount(static_cast<unsigned>(col & x)) & 1;
                Complex amp = phase[static_cast<std::size_t>(
                    (q[static_cast<std::size_t>(x)] + 2 * parity) & 3)];
                v(x, col) = amp * inv_sqrt_d;
            }
        }
        bases.push_back(std::move(v));
    }
    return MubEnsemble(n, std::move(bases));
}

std::uint64_t mub_fingerprint(const MubEnsemble &ensemble) {
    std::uint64_t h = 0xCBF29CE484222325ULL; // FNV-1a offset basis
    auto mix_byte = [&h](std::uint8_t b) {
        h ^= b;
        h *= 0x100000001B3ULL;
    };
    const double scale = std::sqrt(static_cast<double>(ensemble.dim()));
    mix_byte(static_cast<std::uint8_t>(ensemble.qubit_count()));
    for (std::size_t j = 0; j < ensemble.basis_count(); ++j) {
        const ComplexMatrix &v = ensemble.basis(j);
        for (Eigen::Index col = 0; col < v.cols(); ++col) {
            for (Eigen::Index row = 0; row < v.rows(); ++row) {
                const Complex scaled = v(row, col) * scale;
                mix_byte(static_cast<std::uint8_t>(
                    std::lround(scaled.real()) + 2));
                mix_byte(static_cast<std::uint8_t>(
                    std::lround(scaled.imag()) + 2));
            }
        }
    }
    return h;
}

std::size_t sample_basis(const BiasedDistribution &dist, RngStream &rng) {
    const double u = rng.next_double();
    if (u < 0.5) {
        return 0;
    }
    const std::size_t buckets = std::size_t(1) << dist.n;
    // (u - 0.5) is exact for u in [0.5, 1), so the bucket map is exact.
    const auto idx = static_cast<std::size_t>((u - 0.5) *
                                              static_cast<double>(2 * buckets));
    return 1 + std::min(idx, buckets - 1);
}

} // namespace dmpst
