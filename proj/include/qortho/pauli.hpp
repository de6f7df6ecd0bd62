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

#ifndef QORTHO_PAULI_HPP
#define QORTHO_PAULI_HPP

#include <array>
#include <string>
#include <vector>

#include "qortho/matrix.hpp"

namespace qortho {

enum class PauliOp : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Pauli operators. Qubit 1 is the leftmost
/// factor and the most significant bit of basis-state indices. Factors are
/// also carried as symplectic (x, z) bit pairs so commutation is decidable
/// without building matrices.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<PauliOp> factors) : factors_(std::move(factors)) {}
    /// Parse from symbols, e.g. "XY" or "IIZ".
    static PauliString parse(const std::string &symbols);

    int n() const { return static_cast<int>(factors_.size()); }
    PauliOp factor(int i) const { return factors_[static_cast<size_t>(i)]; }
    const std::vector<PauliOp> &factors() const { return factors_; }

    bool x_bit(int i) const {
        return factors_[static_cast<size_t>(i)] == PauliOp::X || factors_[static_cast<size_t>(i)] == PauliOp::Y;
    }
    bool z_bit(int i) const {
        return factors_[static_cast<size_t>(i)] == PauliOp::Z || factors_[static_cast<size_t>(i)] == PauliOp::Y;
    }

    bool commutes_with(const PauliString &o) const;

    bool operator==(const PauliString &o) const { return factors_ == o.factors_; }
    bool operator<(const PauliString &o) const { return factors_ < o.factors_; }

    std::string str() const;

  private:
    std::vector<PauliOp> factors_;
};

/// Real-coefficient combination of distinct Pauli strings on a common
/// register; the matrix of a PauliSum is Hermitian.
struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

class PauliSum {
  public:
    PauliSum() = default;
    PauliSum(std::initializer_list<PauliTerm> terms);
    explicit PauliSum(std::vector<PauliTerm> terms);

    void add(double coefficient, const PauliString &s);
    const std::vector<PauliTerm> &terms() const { return terms_; }
    int n() const { return terms_.empty() ? 0 : terms_.front().string.n(); }

    bool commuting() const;

  private:
    std::vector<PauliTerm> terms_;
};

CMat to_matrix(const PauliString &p);
CMat to_matrix(const PauliSum &s);

/// Hilbert-Schmidt coefficient tr(P h)/2^n; exact on PauliSum-built input.
double hs_project(const CMat &h, const PauliString &p,
                  const NumericContext &ctx = {});

/// exp(-i * sum) computed as the ordered product of per-term exponentials
/// exp(-i t P) = cos(t) I - i sin(t) P. Requires pairwise commuting terms.
CMat exp_commuting_sum(const PauliSum &s);

/// Frobenius residual of [A⊗B, C⊗D] - ({A,C}⊗[B,D] + [A,C]⊗{B,D})/2 for
/// single-qubit operators; vanishes identically.
double commutator_identity_check(PauliOp a1, PauliOp b1, PauliOp a2, PauliOp b2);

/// Named ordered list of Pauli strings, each standing for the generator
/// i*P of a Lie algebra; elements are pairwise Hilbert-Schmidt orthogonal.
struct CartanBasis {
    std::string name;
    std::vector<PauliString> elements;

    int n() const { return elements.empty() ? 0 : elements.front().n(); }
    int size() const { return static_cast<int>(elements.size()); }
    bool contains(const PauliString &p) const;
    bool same_set(const CartanBasis &o) const;

    /// Orthogonality + expected-cardinality self-check; throws on failure.
    void validate(int expected_size) const;
};

/// Largest residual of [a, b] outside span{i * target} over all pairs
/// (a in setA, b in setB).
double closure_check(const CartanBasis &set_a, const CartanBasis &set_b,
                     const CartanBasis &target);

// Basis tables for the two-qubit decomposition of so(4).
const CartanBasis &so4_k_basis(); // {IY, YI}
const CartanBasis &so4_p_basis(); // {XY, YX, ZY, YZ}
const CartanBasis &so4_a_basis(); // {XY, YZ}

// Basis tables for the three-qubit decomposition.
const CartanBasis &so8_k_basis();
const CartanBasis &so8_p_basis();
const CartanBasis &so8_a_basis();
const CartanBasis &so8_nested_k_basis();
const CartanBasis &so8_nested_p_basis();
const CartanBasis &so8_nested_a_basis();

/// The 28 three-qubit generators whose conjugation by the magic matrix is
/// real antisymmetric; equals so8_k ∪ so8_p as a set.
const CartanBasis &magic_so8_generators();

/// The fixed 8x8 magic transformation matrix (a 4x4 block on qubits 1-2
/// tensored with the identity on qubit 3).
CMat magic();

/// M† b M for an 8x8 matrix b.
CMat magic_conjugate(const CMat &b);

} // namespace qortho

#endif
