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

#ifndef QORTHO_KAK_HPP
#define QORTHO_KAK_HPP

#include <optional>
#include <string>
#include <vector>

#include "qortho/matrix.hpp"
#include "qortho/pauli.hpp"

namespace qortho {

struct KakResult;
class InvolutionSpec;
KakResult kak_factor(const CMat &u, const InvolutionSpec &inv, const NumericContext &ctx);

/// One Cartan involution theta(x) = sigma x sigma together with the bases of
/// its fixed subalgebra (k), the -1 eigenspace (p) and a maximal abelian
/// subalgebra inside p (a). Construction validates the commute/anticommute
/// structure and precomputes the factorization frame; the object is
/// immutable afterwards and safe to share.
class InvolutionSpec {
  public:
    /// `realifier` is a fixed unitary R such that R† exp(k+p) R is real
    /// orthogonal; required for the full-rank (N/2 torus) factorization
    /// route. Pass std::nullopt for involutions whose group splits over a
    /// commutant axis instead.
    InvolutionSpec(CMat sigma, CartanBasis k_basis, CartanBasis p_basis, CartanBasis a_basis,
                   std::optional<CMat> realifier);

    const CMat &sigma() const { return sigma_; }
    const CartanBasis &k_basis() const { return k_basis_; }
    const CartanBasis &p_basis() const { return p_basis_; }
    const CartanBasis &a_basis() const { return a_basis_; }

    int dim() const { return sigma_.dim(); }

    /// Worst commute (k) / anticommute (p) residual of sigma against the
    /// basis matrices; validated < 1e-12 at construction.
    double structure_residual() const { return structure_residual_; }

    // The two-qubit involution: sigma = YY over the so(4) split.
    static const InvolutionSpec &two_qubit();
    // Outer three-qubit involution: sigma = IIZ over the so(8) split,
    // realified by the magic matrix.
    static const InvolutionSpec &three_qubit_outer();
    // Inner three-qubit involution: sigma = IIX over the nested split.
    static const InvolutionSpec &three_qubit_inner();

  private:
    friend struct KakEngine;
    friend KakResult kak_factor(const CMat &u, const InvolutionSpec &inv,
                                const NumericContext &ctx);

    enum class Strategy { CosineSine, BlockSplit };

    CMat sigma_;
    CartanBasis k_basis_, p_basis_, a_basis_;
    double structure_residual_ = 0.0;
    Strategy strategy_ = Strategy::CosineSine;

    // CosineSine route: frame_ maps the working basis to a frame where the
    // group is real orthogonal, sigma is diag(I, -I), and the torus is the
    // standard cosine-sine block family over `slot_sign_` signatures.
    CMat realifier_;
    CMat frame_;                              // unitary, columns ordered (+ block, - block)
    std::vector<std::vector<int>> slot_sign_; // m x k matrix of +/-1
};

/// One KAK factorization u = k1 * a * k2 with theta-fixed k factors and
/// a = exp(-i sum params[i] * a_basis[i]). Parameters are branch-reduced to
/// the minimal l1-norm representative of the torus lattice coset; any
/// remaining ambiguity is inherent and verified by re-exponentiation.
struct KakResult {
    CMat k1, a, k2;
    std::vector<double> params;
    double reconstruction_error = 0.0;
    int repair_flips = 0; // identity-component sign repairs applied
};

KakResult kak_factor(const CMat &u, const InvolutionSpec &inv, const NumericContext &ctx);
inline KakResult kak_factor(const CMat &u, const InvolutionSpec &inv) {
    return kak_factor(u, inv, NumericContext{});
}

/// Coefficients c with exp(-i sum c[i] basis[i]) = a, minimal-l1 branch.
std::vector<double> abelian_params(const CMat &a, const CartanBasis &basis,
                                   const NumericContext &ctx = {});

struct EulerZYZ {
    double theta = 0.0; // (-pi, pi]
    double phi = 0.0;   // [0, pi]
    double psi = 0.0;   // (-pi, pi]
    cdouble phase{1.0, 0.0};
};

/// u = phase * Rz(theta) * Ry(phi) * Rz(psi). When phi is degenerate (0 or
/// pi) all z-rotation folds into theta and psi = 0. An exactly special
/// unitary input always yields phase 1.
EulerZYZ euler_zyz(const CMat &u, const NumericContext &ctx = {});

struct ProductSplit {
    CMat left;  // 2x2
    CMat right; // 2x2
    double residual = 0.0;
};

/// Closest Kronecker product v (x) w to a 4x4 matrix, via the rank-1
/// approximation of its factor-rearranged form. Exact products come back
/// with residual at rounding level.
ProductSplit nearest_product_2x2(const CMat &u);

} // namespace qortho

#endif
