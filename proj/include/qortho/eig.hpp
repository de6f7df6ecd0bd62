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

#ifndef QORTHO_EIG_HPP
#define QORTHO_EIG_HPP

#include <optional>
#include <vector>

#include "qortho/matrix.hpp"
#include "qortho/numeric.hpp"

namespace qortho {

struct SpectralDecomposition {
    std::vector<cdouble> eigenvalues; // unit circle, phase-ascending in [-pi, pi)
    CMat eigenvectors;                // columns form an orthonormal basis
};

/// Orthonormal eigenbasis of a single Hermitian matrix (cyclic complex
/// Jacobi). Eigenvalues come back unsorted relative to any global rule;
/// use joint_diagonalize for the clustered, ordered interface.
void hermitian_jacobi(const CMat &h, CMat &vectors, std::vector<double> &values);

/// Simultaneously diagonalize a list of commuting Hermitian matrices.
/// The first matrix fixes the coarse eigenspaces; each later matrix only
/// refines inside clusters whose earlier eigenvalue tuples agree within
/// cluster_tol. Returns the common orthonormal basis and one eigenvalue
/// vector per input matrix. Ordering: descending lexicographically by
/// eigenvalue tuple; column phases are canonicalized so the largest-modulus
/// entry of each column is real positive.
CMat joint_diagonalize(const std::vector<CMat> &mats,
                       std::vector<std::vector<double>> &values,
                       double cluster_tol = 1e-8);

/// Spectral decomposition of a unitary matrix via its commuting Hermitian
/// parts (u+u†)/2 and (u-u†)/(2i). Within an eigenvalue cluster (phases
/// within ctx.cluster_tol) the basis additionally diagonalizes `tiebreak`
/// when supplied (tiebreak must be Hermitian). Eigenvalues are sorted by
/// phase ascending in [-pi, pi); within clusters by descending tiebreak
/// eigenvalue.
SpectralDecomposition eig_unitary(const CMat &u,
                                  const std::optional<CMat> &tiebreak = std::nullopt,
                                  const NumericContext &ctx = {});

struct RealSvd {
    CMat u;                  // real orthogonal
    std::vector<double> s;   // descending, >= 0
    CMat v;                  // real orthogonal
};

/// SVD of a small real matrix via the symmetric eigenproblem of AᵀA.
/// Columns of u for near-zero singular values are completed to an
/// orthonormal basis deterministically.
RealSvd real_svd(const CMat &a);

} // namespace qortho

#endif
