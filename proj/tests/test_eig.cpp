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

#include "doctest.h"

#include "qortho/eig.hpp"
#include "support/oracles.hpp"

using namespace qortho;
using qortho::testing::random_unitary;

namespace {

double reassembly_error(const CMat &u, const SpectralDecomposition &sd) {
    const int n = u.dim();
    CMat lambda(n);
    for (int i = 0; i < n; i++) {
        lambda.at(i, i) = sd.eigenvalues[static_cast<size_t>(i)];
    }
    return frobenius_distance(sd.eigenvectors * lambda * sd.eigenvectors.adjoint(), u);
}

} // namespace

TEST_CASE("identity diagonalizes to itself") {
    const SpectralDecomposition sd = eig_unitary(CMat::identity(4));
    for (const auto &ev : sd.eigenvalues) {
        CHECK(std::abs(ev - cdouble{1.0, 0.0}) < 1e-14);
    }
    CHECK(frobenius_distance(sd.eigenvectors, CMat::identity(4)) < 1e-14);
}

TEST_CASE("pauli y has eigenvalues -1 and +1") {
    const SpectralDecomposition sd = eig_unitary(pauli_y_2());
    CHECK(std::abs(sd.eigenvalues[0] - cdouble{-1.0, 0.0}) < 1e-13);
    CHECK(std::abs(sd.eigenvalues[1] - cdouble{1.0, 0.0}) < 1e-13);
    CHECK(reassembly_error(pauli_y_2(), sd) < 1e-13);
}

TEST_CASE("reassembly stays below 1e-12 over seeded random unitaries") {
    int count = 0;
    for (const int dim : {2, 4, 8}) {
        for (uint64_t seed = 0; seed < 334 && count < 1000; seed++, count++) {
            const CMat u = random_unitary(dim, seed * 3 + dim);
            CHECK(reassembly_error(u, eig_unitary(u)) < 1e-12);
        }
    }
    CHECK(count >= 1000 - 2);
}

TEST_CASE("eigenvalues come back phase sorted") {
    for (uint64_t seed = 0; seed < 20; seed++) {
        const SpectralDecomposition sd = eig_unitary(random_unitary(8, 7000 + seed));
        for (size_t i = 1; i < sd.eigenvalues.size(); i++) {
            CHECK(std::arg(sd.eigenvalues[i - 1]) <= std::arg(sd.eigenvalues[i]) + 1e-8);
        }
    }
}

TEST_CASE("degenerate clusters honor the tiebreak matrix") {
    // The identity is maximally degenerate; the eigenbasis must then
    // diagonalize the tiebreak.
    const CMat h = [] {
        const CMat u = random_unitary(4, 99);
        CMat d(4);
        for (int i = 0; i < 4; i++) {
            d.at(i, i) = static_cast<double>(i);
        }
        return u * d * u.adjoint();
    }();
    const SpectralDecomposition sd = eig_unitary(CMat::identity(4), h);
    const CMat rotated = sd.eigenvectors.adjoint() * h * sd.eigenvectors;
    double offdiag = 0.0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            if (i != j) {
                offdiag = std::max(offdiag, std::abs(rotated.at(i, j)));
            }
        }
    }
    CHECK(offdiag < 1e-12);
    // Tiebreak eigenvalues sorted descending within the cluster.
    for (int i = 1; i < 4; i++) {
        CHECK(rotated.at(i - 1, i - 1).real() >= rotated.at(i, i).real() - 1e-12);
    }
}

TEST_CASE("non-unitary input is rejected") {
    CMat m = CMat::identity(2);
    m.at(0, 0) = 2.0;
    CHECK_THROWS_AS((void)eig_unitary(m), Error);
}

TEST_CASE("real svd reconstructs and completes degenerate inputs") {
    for (uint64_t seed = 0; seed < 20; seed++) {
        RandomStream rng(4200 + seed);
        CMat a(4);
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                a.at(i, j) = rng.normal();
            }
        }
        const RealSvd svd = real_svd(a);
        CMat s(4);
        for (int i = 0; i < 4; i++) {
            s.at(i, i) = svd.s[static_cast<size_t>(i)];
        }
        CHECK(frobenius_distance(svd.u * s * svd.v.transpose(), a) < 1e-12);
        CHECK(svd.u.unitary_deviation() < 1e-12);
        CHECK(svd.v.unitary_deviation() < 1e-12);
    }
    // Rank-deficient case: U columns for null singular values still form an
    // orthonormal basis.
    CMat low(3);
    low.at(0, 0) = 2.0;
    const RealSvd svd = real_svd(low);
    CHECK(svd.u.unitary_deviation() < 1e-12);
    CHECK(svd.s[0] == doctest::Approx(2.0));
    CHECK(svd.s[1] == doctest::Approx(0.0));
}
