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

#include "qortho/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qortho/eig.hpp"

namespace qortho {

const char *errc_name(Errc code) {
    switch (code) {
        case Errc::NotUnitary: return "NotUnitary";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::DimMismatch: return "DimMismatch";
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NonCommutingTerms: return "NonCommutingTerms";
        case Errc::BadQubitIndex: return "BadQubitIndex";
        case Errc::ParseError: return "ParseError";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::WrongDeterminant: return "WrongDeterminant";
        case Errc::FactorizationResidual: return "FactorizationResidual";
        case Errc::NotInAbelianGroup: return "NotInAbelianGroup";
        case Errc::ProductRepairFailed: return "ProductRepairFailed";
        case Errc::UnsupportedMode: return "UnsupportedMode";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

CMat::CMat(int dim, std::initializer_list<cdouble> entries) : CMat(dim) {
    if (static_cast<int>(entries.size()) != dim * dim) {
        throw Error(Errc::InvalidArgument, "entry count does not match dimension");
    }
    std::copy(entries.begin(), entries.end(), a_.begin());
}

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; i++) {
        m.at(i, i) = 1.0;
    }
    return m;
}

static void require_same_dim(const CMat &a, const CMat &b) {
    if (a.dim() != b.dim()) {
        throw Error(Errc::DimMismatch, "matrix dimensions differ");
    }
}

CMat CMat::operator+(const CMat &o) const {
    require_same_dim(*this, o);
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = at(i, j) + o.at(i, j);
        }
    }
    return r;
}

CMat CMat::operator-(const CMat &o) const {
    require_same_dim(*this, o);
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = at(i, j) - o.at(i, j);
        }
    }
    return r;
}

CMat CMat::operator*(const CMat &o) const {
    require_same_dim(*this, o);
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int k = 0; k < dim_; k++) {
            const cdouble v = at(i, k);
            if (v == cdouble{0.0, 0.0}) {
                continue;
            }
            for (int j = 0; j < dim_; j++) {
                r.at(i, j) += v * o.at(k, j);
            }
        }
    }
    return r;
}

CMat CMat::operator*(cdouble s) const {
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = at(i, j) * s;
        }
    }
    return r;
}

CMat CMat::adjoint() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = std::conj(at(j, i));
        }
    }
    return r;
}

CMat CMat::transpose() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = at(j, i);
        }
    }
    return r;
}

CMat CMat::conj() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = std::conj(at(i, j));
        }
    }
    return r;
}

CMat CMat::real_part() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = at(i, j).real();
        }
    }
    return r;
}

cdouble CMat::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < dim_; i++) {
        t += at(i, i);
    }
    return t;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const auto &v : a_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto &v : a_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double CMat::max_abs_imag() const {
    double m = 0.0;
    for (const auto &v : a_) {
        m = std::max(m, std::abs(v.imag()));
    }
    return m;
}

double CMat::unitary_deviation() const {
    const CMat g = adjoint() * (*this);
    double m = 0.0;
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            const cdouble want = (i == j) ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
            m = std::max(m, std::abs(g.at(i, j) - want));
        }
    }
    return m;
}

bool CMat::is_unitary(double tol) const {
    return unitary_deviation() <= tol;
}

bool CMat::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool CMat::is_real(double tol) const {
    return max_abs_imag() <= tol;
}

bool CMat::is_special_orthogonal(double tol) const {
    return is_real(tol) && is_unitary(tol) && std::abs(det(*this) - cdouble{1.0, 0.0}) <= tol;
}

std::string CMat::str(int precision) const {
    std::ostringstream out;
    out.precision(precision);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            const cdouble v = at(i, j);
            out << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
            out << (j + 1 == dim_ ? "\n" : " ");
        }
    }
    return out.str();
}

CMat kron(const CMat &a, const CMat &b) {
    const int na = a.dim(), nb = b.dim();
    CMat r(na * nb);
    for (int i = 0; i < na; i++) {
        for (int j = 0; j < na; j++) {
            const cdouble v = a.at(i, j);
            if (v == cdouble{0.0, 0.0}) {
                continue;
            }
            for (int k = 0; k < nb; k++) {
                for (int l = 0; l < nb; l++) {
                    r.at(i * nb + k, j * nb + l) = v * b.at(k, l);
                }
            }
        }
    }
    return r;
}

CMat matmul_chain(const std::vector<CMat> &factors) {
    if (factors.empty()) {
        throw Error(Errc::InvalidArgument, "matmul_chain of no factors");
    }
    CMat acc = factors.front();
    for (size_t i = 1; i < factors.size(); i++) {
        acc = acc * factors[i];
    }
    return acc;
}

cdouble det(const CMat &u) {
    // LU with partial pivoting; dimensions here are at most 8.
    const int n = u.dim();
    CMat a = u;
    cdouble d = 1.0;
    for (int col = 0; col < n; col++) {
        int pivot = col;
        double best = std::abs(a.at(col, col));
        for (int r = col + 1; r < n; r++) {
            if (std::abs(a.at(r, col)) > best) {
                best = std::abs(a.at(r, col));
                pivot = r;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (int c = 0; c < n; c++) {
                std::swap(a.at(pivot, c), a.at(col, c));
            }
            d = -d;
        }
        d *= a.at(col, col);
        for (int r = col + 1; r < n; r++) {
            const cdouble f = a.at(r, col) / a.at(col, col);
            for (int c = col; c < n; c++) {
                a.at(r, c) -= f * a.at(col, c);
            }
        }
    }
    return d;
}

CMat adjoint(const CMat &u) {
    return u.adjoint();
}

double frobenius_distance(const CMat &u, const CMat &v) {
    require_same_dim(u, v);
    return (u - v).frobenius_norm();
}

PhaseDistance phase_distance(const CMat &u, const CMat &v) {
    require_same_dim(u, v);
    const CMat g = v.adjoint() * u;
    const cdouble t = g.trace();
    PhaseDistance r;
    if (std::abs(t) > 1e-12) {
        r.phase = t / std::abs(t);
        r.distance = frobenius_distance(u, v * r.phase);
        return r;
    }
    // Trace-free case: the distance is phase independent; scan the
    // eigenphases of v†u for a reportable minimizer.
    std::vector<cdouble> candidates;
    if (g.is_unitary(1e-8)) {
        const SpectralDecomposition sd = eig_unitary(g);
        candidates = sd.eigenvalues;
    } else {
        for (int i = 0; i < g.dim(); i++) {
            const cdouble d = g.at(i, i);
            if (std::abs(d) > 1e-12) {
                candidates.push_back(d / std::abs(d));
            }
        }
    }
    if (candidates.empty()) {
        candidates.push_back({1.0, 0.0});
    }
    r.phase = candidates.front();
    r.distance = frobenius_distance(u, v * r.phase);
    for (const cdouble &c : candidates) {
        const double d = frobenius_distance(u, v * c);
        if (d < r.distance) {
            r.distance = d;
            r.phase = c;
        }
    }
    return r;
}

CMat pauli_x_2() {
    return CMat(2, {0.0, 1.0, 1.0, 0.0});
}

CMat pauli_y_2() {
    return CMat(2, {0.0, cdouble{0.0, -1.0}, cdouble{0.0, 1.0}, 0.0});
}

CMat pauli_z_2() {
    return CMat(2, {1.0, 0.0, 0.0, -1.0});
}

CMat rot_y_2(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return CMat(2, {c, -s, s, c});
}

CMat rot_z_2(double angle) {
    return CMat(2, {std::polar(1.0, -angle), 0.0, 0.0, std::polar(1.0, angle)});
}

} // namespace qortho
