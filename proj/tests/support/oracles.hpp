/*
 * Copyright 2026 The qortho Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Test-only oracles, kept independent of the code paths they check.

#ifndef QORTHO_TESTS_ORACLES_HPP
#define QORTHO_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>

#include "qortho/circuit.hpp"
#include "qortho/matrix.hpp"
#include "qortho/pauli.hpp"
#include "qortho/random.hpp"

namespace qortho::testing {

/// Dense matrix exponential by scaling and squaring with a Taylor core.
/// Good to ~1e-14 for the operator norms that show up here.
inline CMat expm_dense(const CMat &m) {
    const int n = m.dim();
    double norm1 = 0.0;
    for (int j = 0; j < n; j++) {
        double col = 0.0;
        for (int i = 0; i < n; i++) {
            col += std::abs(m.at(i, j));
        }
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    while (norm1 / std::pow(2.0, squarings) > 0.25) {
        squarings++;
    }
    const CMat b = m * cdouble{std::pow(2.0, -squarings), 0.0};
    CMat sum = CMat::identity(n);
    CMat term = CMat::identity(n);
    for (int k = 1; k <= 30; k++) {
        term = term * b * cdouble{1.0 / k, 0.0};
        sum = sum + term;
        if (term.max_abs() < 1e-20) {
            break;
        }
    }
    for (int s = 0; s < squarings; s++) {
        sum = sum * sum;
    }
    return sum;
}

/// Haar-ish random unitary via modified Gram-Schmidt of a complex
/// Gaussian matrix; independent of the library's orthogonal sampler.
inline CMat random_unitary(int dim, uint64_t seed) {
    RandomStream rng(seed);
    CMat g(dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            g.at(i, j) = cdouble{rng.normal(), rng.normal()};
        }
    }
    CMat q(dim);
    for (int j = 0; j < dim; j++) {
        std::vector<cdouble> col(static_cast<size_t>(dim));
        for (int i = 0; i < dim; i++) {
            col[static_cast<size_t>(i)] = g.at(i, j);
        }
        for (int k = 0; k < j; k++) {
            cdouble dot = 0.0;
            for (int i = 0; i < dim; i++) {
                dot += std::conj(q.at(i, k)) * col[static_cast<size_t>(i)];
            }
            for (int i = 0; i < dim; i++) {
                col[static_cast<size_t>(i)] -= dot * q.at(i, k);
            }
        }
        double nrm = 0.0;
        for (const auto &v : col) {
            nrm += std::norm(v);
        }
        nrm = std::sqrt(nrm);
        for (int i = 0; i < dim; i++) {
            q.at(i, j) = col[static_cast<size_t>(i)] / nrm;
        }
    }
    return q;
}

/// exp of a random combination of basis generators (through the dense
/// oracle, not exp_commuting_sum).
inline CMat random_group_element(const CartanBasis &basis, RandomStream &rng, double scale) {
    CMat h(1 << basis.n());
    for (const auto &p : basis.elements) {
        h = h + to_matrix(p) * cdouble{rng.uniform(-scale, scale), 0.0};
    }
    return expm_dense(h * cdouble{0.0, -1.0});
}

inline Circuit random_circuit(int qubits, int max_gates, RandomStream &rng) {
    Circuit c(qubits);
    const int count = 1 + rng.below(max_gates);
    for (int i = 0; i < count; i++) {
        switch (rng.below(3)) {
            case 0: {
                const int control = 1 + rng.below(qubits);
                int target = 1 + rng.below(qubits);
                while (target == control) {
                    target = 1 + rng.below(qubits);
                }
                c.append(Gate::cnot(control, target));
                break;
            }
            case 1:
                c.append(Gate::ry(1 + rng.below(qubits), rng.uniform(-PI, PI)));
                break;
            default:
                c.append(Gate::rz(1 + rng.below(qubits), rng.uniform(-PI, PI)));
                break;
        }
    }
    return c;
}

} // namespace qortho::testing

#endif
