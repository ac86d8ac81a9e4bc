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

#include "dmpst/clifford.hpp"

#include <cmath>
#include <functional>

#include "dmpst/errors.hpp"

namespace dmpst {

namespace {

// Symplectic product on packed F2^(2n) vectors (bit 2q: X part, 2q+1: Z part).
unsigned sym_inner(std::uint32_t v, std::uint32_t w, int n) {
    unsigned acc = 0;
    for (int q = 0; q < n; ++q) {
        acc ^= (v >> (2 * q)) & (w >> (2 * q + 1)) & 1u;
        acc ^= (v >> (2 * q + 1)) & (w >> (2 * q)) & 1u;
    }
    return acc;
}

std::uint32_t combine(const std::vector<std::uint32_t> &basis,
                      std::uint64_t bits) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((bits >> i) & 1u) {
            v ^= basis[i];
        }
    }
    return v;
}

// Builds a uniform symplectic map by choosing, pair by pair, the images of
// (X_j, Z_j): a nonzero vector f1 in the remaining symplectic complement,
// then a partner f2 with <f1, f2> = 1. The chooser supplies one uniform
// integer below each requested count; distinct choice tuples give distinct
// maps, and the counts multiply to |Sp(2n, F2)|.
std::vector<std::uint32_t>
build_symplectic(int n, const std::function<std::uint64_t(std::uint64_t)> &choose) {
    std::vector<std::uint32_t> columns(2 * static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> space;
    space.reserve(2 * static_cast<std::size_t>(n));
    for (int c = 0; c < 2 * n; ++c) {
        space.push_back(1u << c);
    }

    for (int level = 0; level < n; ++level) {
        const std::size_t m = space.size();
        const std::uint64_t a = choose((std::uint64_t(1) << m) - 1) + 1;
        const std::uint32_t f1 = combine(space, a);

        std::size_t pivot = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (sym_inner(f1, space[i], n) == 1u) {
                pivot = i;
                break;
            }
        }
        // The form is nondegenerate on the current subspace, so a pivot exists.
        const std::uint32_t u = space[pivot];

        std::vector<std::uint32_t> perp;
        perp.reserve(m - 1);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot) {
                continue;
            }
            std::uint32_t w = space[i];
            if (sym_inner(f1, w, n) == 1u) {
                w ^= u;
            }
            perp.push_back(w);
        }

        const std::uint64_t b = choose(std::uint64_t(1) << (m - 1));
        const std::uint32_t f2 = u ^ combine(perp, b);

        columns[static_cast<std::size_t>(2 * level)] = f1;
        columns[static_cast<std::size_t>(2 * level + 1)] = f2;

        // Next subspace: the perp vectors, further reduced against f2.
        std::size_t pivot2 = perp.size();
        for (std::size_t i = 0; i < perp.size(); ++i) {
            if (sym_inner(f2, perp[i], n) == 1u) {
                pivot2 = i;
                break;
            }
        }
        std::vector<std::uint32_t> next;
        next.reserve(perp.size() > 0 ? perp.size() - 1 : 0);
        for (std::size_t i = 0; i < perp.size(); ++i) {
            if (i == pivot2) {
                continue;
            }
            std::uint32_t w = perp[i];
            if (pivot2 < perp.size() && sym_inner(f2, w, n) == 1u) {
                w ^= perp[pivot2];
            }
            next.push_back(w);
        }
        space = std::move(next);
    }
    return columns;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix local_pauli(bool x, bool z) {
    ComplexMatrix p(2, 2);
    if (x && z) {
        p << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0); // Y
    } else if (x) {
        p << 0, 1, 1, 0; // X
    } else if (z) {
        p << 1, 0, 0, -1; // Z
    } else {
        p << 1, 0, 0, 1; // I
    }
    return p;
}

ComplexMatrix materialize(const CliffordTableau &t) {
    const int n = t.n;
    const Eigen::Index d = Eigen::Index(1) << n;

    std::vector<ComplexMatrix> x_img, z_img;
    x_img.reserve(static_cast<std::size_t>(n));
    z_img.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        x_img.push_back(pauli_dense(t.symplectic[static_cast<std::size_t>(2 * q)],
                                    n, (t.sign_bits >> (2 * q)) & 1u));
        z_img.push_back(
            pauli_dense(t.symplectic[static_cast<std::size_t>(2 * q + 1)], n,
                        (t.sign_bits >> (2 * q + 1)) & 1u));
    }

    // Column 0 is the joint +1 eigenvector of the Z images; the remaining
    // columns follow by applying the X images.
    ComplexVector psi0;
    for (Eigen::Index m = 0; m < d; ++m) {
        ComplexVector w = ComplexVector::Zero(d);
        w(m) = Complex(1, 0);
        for (int q = 0; q < n; ++q) {
            w = 0.5 * (w + z_img[static_cast<std::size_t>(q)] * w);
        }
        if (w.norm() > 1e-9) {
            psi0 = w / w.norm();
            break;
        }
    }

    ComplexMatrix u(d, d);
    for (Eigen::Index x = 0; x < d; ++x) {
        ComplexVector col = psi0;
        for (int q = 0; q < n; ++q) {
            if ((x >> q) & 1) {
                col = x_img[static_cast<std::size_t>(q)] * col;
            }
        }
        u.col(x) = col;
    }

    // Canonical representative: first nonzero entry (column-major) made
    // positive real.
    for (Eigen::Index c = 0; c < d; ++c) {
        bool done = false;
        for (Eigen::Index r = 0; r < d; ++r) {
            const Complex e = u(r, c);
            if (std::abs(e) > 1e-9) {
                u *= std::conj(e) / std::abs(e);
                done = true;
                break;
            }
        }
        if (done) {
            break;
        }
    }
    return u;
}

void require_qubits(int n, int lo, int hi, const char *op) {
    if (n < lo || n > hi) {
        throw ParameterError(std::string(op) + ": qubit count out of supported range");
    }
}

} // namespace

ComplexMatrix pauli_dense(std::uint32_t v, int n, bool negated) {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) {
        m = kron(m, local_pauli((v >> (2 * q)) & 1u, (v >> (2 * q + 1)) & 1u));
    }
    if (negated) {
        m = -m;
    }
    return m;
}

CliffordUnitary::CliffordUnitary(CliffordTableau tableau, std::uint64_t seed)
    : tableau_(std::move(tableau)), dense_(materialize(tableau_)), seed_(seed) {}

std::uint64_t symplectic_group_order(int n) {
    require_qubits(n, 1, 5, "symplectic_group_order");
    std::uint64_t order = 1;
    for (int j = 1; j <= n; ++j) {
        order *= (std::uint64_t(1) << (2 * j)) - 1;
        order *= std::uint64_t(1) << (2 * j - 1);
    }
    return order;
}

std::uint64_t clifford_group_order(int n) {
    return symplectic_group_order(n) * (std::uint64_t(1) << (2 * n));
}

CliffordUnitary sample_clifford(int n, RngStream &rng) {
    require_qubits(n, 1, 5, "sample_clifford");
    CliffordTableau t;
    t.n = n;
    t.symplectic = build_symplectic(
        n, [&rng](std::uint64_t count) { return rng.next_below(count); });
    t.sign_bits =
        static_cast<std::uint32_t>(rng.next_below(std::uint64_t(1) << (2 * n)));
    return CliffordUnitary(std::move(t));
}

CliffordUnitary clifford_from_index(int n, std::uint64_t sp_index,
                                    std::uint32_t sign_bits) {
    require_qubits(n, 1, 5, "clifford_from_index");
    if (sp_index >= symplectic_group_order(n)) {
        throw ParameterError("clifford_from_index: symplectic index out of range");
    }
    std::uint64_t cursor = sp_index;
    CliffordTableau t;
    t.n = n;
    t.symplectic = build_symplectic(n, [&cursor](std::uint64_t count) {
        const std::uint64_t c = cursor % count;
        cursor /= count;
        return c;
    });
    t.sign_bits = sign_bits;
    return CliffordUnitary(std::move(t));
}

std::vector<CliffordUnitary> enumerate_cliffords(int n) {
    if (n != 1 && n != 2) {
        throw ParameterError("enumerate_cliffords: only n = 1 and n = 2 are supported");
    }
    const std::uint64_t sp_order = symplectic_group_order(n);
    const std::uint32_t sign_count = 1u << (2 * n);
    std::vector<CliffordUnitary> all;
    all.reserve(sp_order * sign_count);
    for (std::uint64_t s = 0; s < sp_order; ++s) {
        for (std::uint32_t r = 0; r < sign_count; ++r) {
            all.push_back(clifford_from_index(n, s, r));
        }
    }
    return all;
}

bool is_clifford_matrix(const ComplexMatrix &u, int n, double tol) {
    const Eigen::Index d = Eigen::Index(1) << n;
    if (u.rows() != d || u.cols() != d) {
        return false;
    }
    if (((u * u.adjoint()) - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() >
        tol) {
        return false;
    }
    // A matrix is a signed-phase Pauli iff column c has its only weight on row
    // c ^ x for a fixed x, with entries of unit magnitude and (-1)^{z.c}
    // relative signs for a fixed z.
    auto is_pauli_like = [&](const ComplexMatrix &m) {
        Eigen::Index x = -1;
        for (Eigen::Index r = 0; r < d; ++r) {
            if (std::abs(m(r, 0)) > 0.5) {
                x = r;
                break;
            }
        }
        if (x < 0) {
            return false;
        }
        const Complex p0 = m(x, 0);
        if (std::abs(std::abs(p0) - 1.0) > tol) {
            return false;
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            for (Eigen::Index r = 0; r < d; ++r) {
                const Complex e = m(r, c);
                if (r == (c ^ x)) {
                    const Complex ratio = e / p0;
                    if (std::abs(ratio.imag()) > tol ||
                        std::abs(std::abs(ratio.real()) - 1.0) > tol) {
                        return false;
                    }
                } else if (std::abs(e) > tol) {
                    return false;
                }
            }
        }
        return true;
    };
    for (int q = 0; q < n; ++q) {
        const ComplexMatrix gx = pauli_dense(1u << (2 * q), n);
        const ComplexMatrix gz = pauli_dense(1u << (2 * q + 1), n);
        if (!is_pauli_like(u * gx * u.adjoint()) ||
            !is_pauli_like(u * gz * u.adjoint())) {
            return false;
        }
    }
    return true;
}

} // namespace dmpst
