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

#ifndef QORTHO_MATRIX_HPP
#define QORTHO_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "qortho/errors.hpp"
#include "qortho/numeric.hpp"

namespace qortho {

/// Dense square complex matrix. The whole compiler works on dimensions
/// 2, 4 and 8; nothing here assumes a bound, but nothing is tuned for
/// anything large either. Values are immutable by convention: every
/// operation returns a fresh matrix.
class CMat {
  public:
    CMat() : dim_(0) {}
    explicit CMat(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}
    CMat(int dim, std::initializer_list<cdouble> entries);

    static CMat identity(int dim);
    static CMat zero(int dim) { return CMat(dim); }

    int dim() const { return dim_; }

    cdouble &at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cdouble &at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    CMat operator+(const CMat &o) const;
    CMat operator-(const CMat &o) const;
    CMat operator*(const CMat &o) const;
    CMat operator*(cdouble s) const;

    CMat adjoint() const;
    CMat transpose() const;
    CMat conj() const;
    CMat real_part() const;

    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double max_abs_imag() const;

    /// Largest |(A†A - I)| entry; the orthogonality/unitarity deviation.
    double unitary_deviation() const;

    bool is_unitary(double tol = NumericContext{}.unitary_tol) const;
    bool is_hermitian(double tol = NumericContext{}.hermitian_tol) const;
    bool is_real(double tol = NumericContext{}.orthogonal_tol) const;
    bool is_special_orthogonal(double tol = NumericContext{}.orthogonal_tol) const;

    std::string str(int precision = 4) const;

  private:
    int dim_;
    std::vector<cdouble> a_;
};

CMat kron(const CMat &a, const CMat &b);
CMat matmul_chain(const std::vector<CMat> &factors);
cdouble det(const CMat &u);
CMat adjoint(const CMat &u);

double frobenius_distance(const CMat &u, const CMat &v);

struct PhaseDistance {
    double distance = 0.0;
    cdouble phase{1.0, 0.0}; // unit scalar minimizing ||u - phase * v||_F
};

/// min over unit phi of ||u - phi v||_F, attained at phi = T/|T| with
/// T = tr(v† u). When T vanishes the distance is phase-independent and the
/// reported phase comes from scanning the eigenphases of v†u.
PhaseDistance phase_distance(const CMat &u, const CMat &v);

// Fixed 2x2 building blocks.
CMat pauli_x_2();
CMat pauli_y_2();
CMat pauli_z_2();
CMat rot_y_2(double angle); // exp(-i * angle * sigma_y), no half angle
CMat rot_z_2(double angle); // exp(-i * angle * sigma_z)

} // namespace qortho

#endif
