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

#include <algorithm>

#include "doctest.h"

#include "qortho/kak.hpp"
#include "support/oracles.hpp"

using namespace qortho;
using qortho::testing::expm_dense;
using qortho::testing::random_group_element;
using qortho::testing::random_unitary;

namespace {

CMat exp_basis(const CartanBasis &basis, const std::vector<double> &coeffs) {
    PauliSum s;
    for (int i = 0; i < basis.size(); i++) {
        s.add(coeffs.at(static_cast<size_t>(i)), basis.elements[static_cast<size_t>(i)]);
    }
    return exp_commuting_sum(s);
}

double theta_residual(const InvolutionSpec &inv, const CMat &k) {
    return frobenius_distance(inv.sigma() * k * inv.sigma(), k);
}

void check_roundtrip(const InvolutionSpec &inv, const CMat &u) {
    const KakResult r = kak_factor(u, inv);
    CHECK(r.reconstruction_error < 1e-9);
    CHECK(frobenius_distance(r.k1 * r.a * r.k2, u) < 1e-9);
    CHECK(theta_residual(inv, r.k1) < 1e-9);
    CHECK(theta_residual(inv, r.k2) < 1e-9);
    CHECK(frobenius_distance(exp_basis(inv.a_basis(), r.params), r.a) < 1e-10);
}

} // namespace

TEST_CASE("the three involution specs validate their commutation structure") {
    CHECK(InvolutionSpec::two_qubit().structure_residual() < 1e-12);
    CHECK(InvolutionSpec::three_qubit_outer().structure_residual() < 1e-12);
    CHECK(InvolutionSpec::three_qubit_inner().structure_residual() < 1e-12);
}

TEST_CASE("subgroup elements factor with a trivial abelian part") {
    RandomStream rng(31);
    for (int i = 0; i < 20; i++) {
        const CMat u = random_group_element(so4_k_basis(), rng, 1.2);
        const KakResult r = kak_factor(u, InvolutionSpec::two_qubit());
        CHECK(r.reconstruction_error < 1e-10);
        for (const double p : r.params) {
            CHECK(std::abs(p) < 1e-10);
        }
        CHECK(frobenius_distance(r.a, CMat::identity(4)) < 1e-9);
    }
}

TEST_CASE("torus elements recover their parameters up to branch equivalence") {
    const CMat u = exp_basis(so4_a_basis(), {0.3, 0.8});
    const KakResult r = kak_factor(u, InvolutionSpec::two_qubit());
    CHECK(r.reconstruction_error < 1e-10);
    std::vector<double> mags{std::abs(r.params[0]), std::abs(r.params[1])};
    std::sort(mags.begin(), mags.end());
    CHECK(mags[0] == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(mags[1] == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("forward-constructed elements factor within tolerance (two-qubit)") {
    RandomStream rng(32);
    const auto &inv = InvolutionSpec::two_qubit();
    for (int i = 0; i < 100; i++) {
        const CMat k1 = random_group_element(inv.k_basis(), rng, 1.5);
        const CMat k2 = random_group_element(inv.k_basis(), rng, 1.5);
        const CMat a = exp_basis(inv.a_basis(), {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
        check_roundtrip(inv, k1 * a * k2);
    }
}

TEST_CASE("forward-constructed elements factor within tolerance (outer)") {
    RandomStream rng(33);
    const auto &inv = InvolutionSpec::three_qubit_outer();
    for (int i = 0; i < 40; i++) {
        const CMat k1 = random_group_element(inv.k_basis(), rng, 0.8);
        const CMat k2 = random_group_element(inv.k_basis(), rng, 0.8);
        const CMat a = exp_basis(inv.a_basis(), {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                                 rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
        check_roundtrip(inv, k1 * a * k2);
    }
}

TEST_CASE("forward-constructed elements factor within tolerance (inner)") {
    RandomStream rng(34);
    const auto &inv = InvolutionSpec::three_qubit_inner();
    for (int i = 0; i < 40; i++) {
        const CMat k1 = random_group_element(inv.k_basis(), rng, 1.5);
        const CMat k2 = random_group_element(inv.k_basis(), rng, 1.5);
        const CMat a = exp_basis(inv.a_basis(), {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
        check_roundtrip(inv, k1 * a * k2);
    }
}

TEST_CASE("factorization is bit-deterministic") {
    RandomStream rng(35);
    const auto &inv = InvolutionSpec::three_qubit_outer();
    const CMat u = random_group_element(inv.k_basis(), rng, 0.7) *
                   exp_basis(inv.a_basis(), {0.4, -0.2, 0.9, 0.1}) *
                   random_group_element(inv.k_basis(), rng, 0.7);
    const KakResult r1 = kak_factor(u, inv);
    const KakResult r2 = kak_factor(u, inv);
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 8; j++) {
            CHECK(r1.k1.at(i, j) == r2.k1.at(i, j));
            CHECK(r1.a.at(i, j) == r2.a.at(i, j));
            CHECK(r1.k2.at(i, j) == r2.k2.at(i, j));
        }
    }
    CHECK(r1.params == r2.params);
}

TEST_CASE("non-unitary input is rejected") {
    CMat m = CMat::identity(4);
    m.at(0, 0) = 1.5;
    CHECK_THROWS_AS((void)kak_factor(m, InvolutionSpec::two_qubit()), Error);
}

TEST_CASE("a determinant -1 orthogonal matrix is outside the factorization group") {
    CMat m = CMat::identity(4);
    m.at(3, 3) = -1.0;
    CHECK_THROWS_AS((void)kak_factor(m, InvolutionSpec::two_qubit()), Error);
}

TEST_CASE("abelian parameters of the identity vanish") {
    const auto p = abelian_params(CMat::identity(8), so8_a_basis());
    for (const double v : p) {
        CHECK(std::abs(v) < 1e-12);
    }
}

TEST_CASE("abelian parameters recover a sparse combination on the so8 torus") {
    const CMat a = exp_basis(so8_a_basis(), {0.5, 0.0, 0.0, 0.25});
    const auto p = abelian_params(a, so8_a_basis());
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(p[2] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(p[3] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("abelian parameters at a branch point re-exponentiate correctly") {
    const CMat a = exp_basis(so4_a_basis(), {PI, 0.0});
    const auto p = abelian_params(a, so4_a_basis());
    CHECK(frobenius_distance(exp_basis(so4_a_basis(), p), a) < 1e-10);
}

TEST_CASE("matrices outside the abelian subgroup are rejected") {
    CHECK_THROWS_AS((void)abelian_params(random_unitary(8, 77), so8_a_basis()), Error);
}

TEST_CASE("euler angles of the identity and of a pure y-rotation") {
    const EulerZYZ e0 = euler_zyz(CMat::identity(2));
    CHECK(e0.theta == doctest::Approx(0.0));
    CHECK(e0.phi == doctest::Approx(0.0));
    CHECK(e0.psi == doctest::Approx(0.0));
    CHECK(std::abs(e0.phase - cdouble{1.0, 0.0}) < 1e-14);

    const EulerZYZ e1 = euler_zyz(rot_y_2(0.4));
    CHECK(e1.theta == doctest::Approx(0.0));
    CHECK(e1.phi == doctest::Approx(0.4));
    CHECK(e1.psi == doctest::Approx(0.0));
    CHECK(std::abs(e1.phase - cdouble{1.0, 0.0}) < 1e-14);
}

TEST_CASE("euler decomposition reconstructs random one-qubit unitaries") {
    for (uint64_t seed = 0; seed < 200; seed++) {
        const CMat u = random_unitary(2, 8000 + seed);
        const EulerZYZ e = euler_zyz(u);
        CHECK(e.phi >= 0.0);
        CHECK(e.phi <= PI);
        CHECK(e.theta > -PI - 1e-12);
        CHECK(e.theta <= PI + 1e-12);
        const CMat rebuilt =
            (rot_z_2(e.theta) * rot_y_2(e.phi) * rot_z_2(e.psi)) * e.phase;
        CHECK(frobenius_distance(rebuilt, u) < 1e-12);
    }
}

TEST_CASE("euler rejects non-unitary input") {
    CMat m(2);
    m.at(0, 0) = 2.0;
    CHECK_THROWS_AS((void)euler_zyz(m), Error);
}

TEST_CASE("nearest product recovers exact tensor factors") {
    const ProductSplit s = nearest_product_2x2(kron(pauli_x_2(), pauli_z_2()));
    CHECK(s.residual < 1e-13);
    // Factors agree with (X, Z) up to a reciprocal scalar.
    const cdouble scale = s.left.at(0, 1);
    CHECK(std::abs(scale * s.right.at(0, 0) - cdouble{1.0, 0.0}) < 1e-12);
    CHECK(frobenius_distance(kron(s.left, s.right), kron(pauli_x_2(), pauli_z_2())) < 1e-13);
}

TEST_CASE("nearest product of random tensor pairs") {
    for (uint64_t seed = 0; seed < 50; seed++) {
        const CMat u = kron(random_unitary(2, 9000 + seed), random_unitary(2, 9100 + seed));
        const ProductSplit s = nearest_product_2x2(u);
        CHECK(s.residual < 1e-12);
        CHECK(frobenius_distance(kron(s.left, s.right), u) < 1e-12);
    }
}

TEST_CASE("an entangling gate is far from any tensor product") {
    Circuit c(2);
    c.append(Gate::cnot(2, 1));
    const ProductSplit s = nearest_product_2x2(simulate(c));
    CHECK(s.residual > 0.5);
}
