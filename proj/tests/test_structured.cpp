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

// Structured inputs that Haar sampling never produces: signed permutations,
// exact branch-edge angles, repeated factor angles, block tensors, and
// near-identity matrices. These pin the degenerate paths of the
// factorization engine (maximally clustered singular values, components of
// the local-product group with negative-determinant factors, sine content
// near the rounding floor).

#include <algorithm>
#include <vector>

#include "doctest.h"

#include "qortho/random.hpp"
#include "qortho/synth_three_qubit.hpp"
#include "qortho/synth_two_qubit.hpp"

using namespace qortho;

namespace {

CMat perm_matrix(int n, const std::vector<int> &dest, const std::vector<int> &sign) {
    CMat m(n);
    for (int i = 0; i < n; i++) {
        m.at(dest[static_cast<size_t>(i)], i) = sign[static_cast<size_t>(i)];
    }
    return m;
}

void check4(const CMat &x) {
    const double d = det(x).real();
    const Synth2Result r = d >= 0 ? synth_so4(x) : synth_o4(x);
    CHECK(r.reconstruction_error < 1e-9);
    CHECK(r.gate_counts.cnot <= (d >= 0 ? 2 : 3));
    CHECK(r.gate_counts.one_qubit <= 6);
}

void check8(const CMat &x) {
    const Synth3Result r = synth_so8(x);
    CHECK(r.reconstruction_error < 1e-8);
    CHECK(r.gate_counts.cnot <= 16);
    CHECK(r.gate_counts.one_qubit <= 36);
}

CMat near_identity_orthogonal(uint64_t seed, double scale) {
    RandomStream rng(seed);
    CMat x = CMat::identity(8);
    for (int i = 0; i < 8; i++) {
        for (int j = i + 1; j < 8; j++) {
            const double v = rng.normal() * scale;
            CMat g = CMat::identity(8);
            g.at(i, i) = std::cos(v);
            g.at(j, j) = std::cos(v);
            g.at(i, j) = -std::sin(v);
            g.at(j, i) = std::sin(v);
            x = x * g;
        }
    }
    return x.real_part();
}

} // namespace

TEST_CASE("every signed 4x4 permutation synthesizes") {
    std::vector<int> p{0, 1, 2, 3};
    do {
        for (int smask = 0; smask < 16; smask++) {
            std::vector<int> sg(4);
            for (int i = 0; i < 4; i++) {
                sg[static_cast<size_t>(i)] = (smask >> i) & 1 ? -1 : 1;
            }
            check4(perm_matrix(4, p, sg));
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("local rotations at angle extremes synthesize") {
    for (const double a : {1e-16, 1e-12, 1e-8, 0.5, 0.5 * PI, PI - 1e-12, PI, 2.0}) {
        check4(kron(rot_y_2(a), CMat::identity(2)));
        check4(kron(CMat::identity(2), rot_y_2(a)));
        check4(kron(rot_y_2(a), rot_y_2(-a)));
    }
}

TEST_CASE("two-qubit torus elements at branch edges synthesize") {
    for (const double a : {0.0, 0.25 * PI, 0.5 * PI, PI - 1e-13, PI}) {
        for (const double b : {0.0, 0.25 * PI, 0.5 * PI, PI}) {
            PauliSum s;
            s.add(a, PauliString::parse("XY"));
            s.add(b, PauliString::parse("YZ"));
            check4(exp_commuting_sum(s).real_part());
        }
    }
    // Equal angles give exactly degenerate factor values.
    for (const double a : {0.3, 0.5 * PI, 1.0}) {
        PauliSum s;
        s.add(a, PauliString::parse("XY"));
        s.add(a, PauliString::parse("YZ"));
        check4(exp_commuting_sum(s).real_part());
    }
}

TEST_CASE("structured 8x8 gates synthesize") {
    {
        std::vector<int> shift{1, 2, 3, 4, 5, 6, 7, 0};
        std::vector<int> sg(8, 1);
        sg[0] = -1; // restore det +1 for the 8-cycle
        check8(perm_matrix(8, shift, sg));
        check8(perm_matrix(8, {1, 0, 3, 2, 4, 5, 6, 7}, std::vector<int>(8, 1)));
        check8(perm_matrix(8, {7, 6, 5, 4, 3, 2, 1, 0}, std::vector<int>(8, 1)));
    }
    for (const double a : {1e-14, 1e-9, 0.7, 0.5 * PI, PI}) {
        check8(kron(rot_y_2(a), kron(rot_y_2(-0.3), rot_y_2(0.5 * a))));
        PauliSum s;
        s.add(a, PauliString::parse("XXY"));
        s.add(0.5 * PI, PauliString::parse("IIY"));
        const CMat t = exp_commuting_sum(s);
        check8((magic().adjoint() * t * magic()).real_part());
    }
}

TEST_CASE("block tensors of two-qubit gates synthesize") {
    for (uint64_t seed = 0; seed < 10; seed++) {
        check8(kron(haar_orthogonal(4, seed, 1), CMat::identity(2)));
        check8(kron(CMat::identity(2), haar_orthogonal(4, seed, 1)));
    }
}

TEST_CASE("near-identity gates synthesize at several perturbation scales") {
    for (const double scale : {1e-13, 1e-10, 1e-7, 1e-4}) {
        for (uint64_t seed = 0; seed < 5; seed++) {
            check8(near_identity_orthogonal(seed, scale));
        }
    }
}
