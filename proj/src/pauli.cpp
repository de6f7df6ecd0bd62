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

#include "qortho/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace qortho {

PauliString PauliString::parse(const std::string &symbols) {
    std::vector<PauliOp> f;
    f.reserve(symbols.size());
    for (char c : symbols) {
        switch (c) {
            case 'I': f.push_back(PauliOp::I); break;
            case 'X': f.push_back(PauliOp::X); break;
            case 'Y': f.push_back(PauliOp::Y); break;
            case 'Z': f.push_back(PauliOp::Z); break;
            default:
                throw Error(Errc::InvalidArgument, std::string("bad pauli symbol '") + c + "'");
        }
    }
    return PauliString(std::move(f));
}

bool PauliString::commutes_with(const PauliString &o) const {
    if (n() != o.n()) {
        throw Error(Errc::DimMismatch, "pauli strings of different length");
    }
    // Symplectic overlap parity: strings commute iff the number of
    // positions with anticommuting single-qubit factors is even.
    int parity = 0;
    for (int i = 0; i < n(); i++) {
        parity ^= (x_bit(i) && o.z_bit(i)) ^ (z_bit(i) && o.x_bit(i));
    }
    return parity == 0;
}

std::string PauliString::str() const {
    static const char *names = "IXYZ";
    std::string s;
    for (const PauliOp f : factors_) {
        s += names[static_cast<int>(f)];
    }
    return s;
}

PauliSum::PauliSum(std::initializer_list<PauliTerm> terms) {
    for (const auto &t : terms) {
        add(t.coefficient, t.string);
    }
}

PauliSum::PauliSum(std::vector<PauliTerm> terms) {
    for (const auto &t : terms) {
        add(t.coefficient, t.string);
    }
}

void PauliSum::add(double coefficient, const PauliString &s) {
    if (!terms_.empty() && terms_.front().string.n() != s.n()) {
        throw Error(Errc::DimMismatch, "pauli sum mixes register sizes");
    }
    for (auto &t : terms_) {
        if (t.string == s) {
            t.coefficient += coefficient;
            return;
        }
    }
    terms_.push_back({coefficient, s});
}

bool PauliSum::commuting() const {
    for (size_t i = 0; i < terms_.size(); i++) {
        for (size_t j = i + 1; j < terms_.size(); j++) {
            if (!terms_[i].string.commutes_with(terms_[j].string)) {
                return false;
            }
        }
    }
    return true;
}

static CMat single_pauli(PauliOp p) {
    switch (p) {
        case PauliOp::I: return CMat::identity(2);
        case PauliOp::X: return pauli_x_2();
        case PauliOp::Y: return pauli_y_2();
        case PauliOp::Z: return pauli_z_2();
    }
    throw Error(Errc::InvalidArgument, "bad pauli op");
}

CMat to_matrix(const PauliString &p) {
    CMat m = single_pauli(p.factor(0));
    for (int i = 1; i < p.n(); i++) {
        m = kron(m, single_pauli(p.factor(i)));
    }
    return m;
}

CMat to_matrix(const PauliSum &s) {
    if (s.terms().empty()) {
        throw Error(Errc::InvalidArgument, "empty pauli sum has no register size");
    }
    CMat m(1 << s.n());
    for (const auto &t : s.terms()) {
        m = m + to_matrix(t.string) * cdouble{t.coefficient, 0.0};
    }
    return m;
}

double hs_project(const CMat &h, const PauliString &p, const NumericContext &ctx) {
    if (h.dim() != (1 << p.n())) {
        throw Error(Errc::DimMismatch, "hs_project dimension mismatch");
    }
    if (!h.is_hermitian(ctx.hermitian_tol)) {
        throw Error(Errc::NotHermitian, "hs_project requires a hermitian matrix");
    }
    return ((to_matrix(p) * h).trace() / static_cast<double>(h.dim())).real();
}

CMat exp_commuting_sum(const PauliSum &s) {
    if (s.terms().empty()) {
        throw Error(Errc::InvalidArgument, "empty pauli sum has no register size");
    }
    if (!s.commuting()) {
        throw Error(Errc::NonCommutingTerms, "exp_commuting_sum requires commuting terms");
    }
    const int dim = 1 << s.n();
    CMat acc = CMat::identity(dim);
    for (const auto &t : s.terms()) {
        const CMat p = to_matrix(t.string);
        const double c = std::cos(t.coefficient), sn = std::sin(t.coefficient);
        CMat e(dim);
        for (int i = 0; i < dim; i++) {
            for (int j = 0; j < dim; j++) {
                e.at(i, j) = cdouble{0.0, -sn} * p.at(i, j);
            }
            e.at(i, i) += c;
        }
        acc = acc * e;
    }
    return acc;
}

static CMat anticommutator(const CMat &a, const CMat &b) {
    return a * b + b * a;
}

static CMat commutator(const CMat &a, const CMat &b) {
    return a * b - b * a;
}

double commutator_identity_check(PauliOp a1, PauliOp b1, PauliOp a2, PauliOp b2) {
    const CMat a = single_pauli(a1), b = single_pauli(b1);
    const CMat c = single_pauli(a2), d = single_pauli(b2);
    const CMat lhs = commutator(kron(a, b), kron(c, d));
    const CMat rhs = (kron(anticommutator(a, c), commutator(b, d)) +
                      kron(commutator(a, c), anticommutator(b, d))) *
                     cdouble{0.5, 0.0};
    return frobenius_distance(lhs, rhs);
}

bool CartanBasis::contains(const PauliString &p) const {
    return std::find(elements.begin(), elements.end(), p) != elements.end();
}

bool CartanBasis::same_set(const CartanBasis &o) const {
    if (elements.size() != o.elements.size()) {
        return false;
    }
    std::vector<PauliString> a = elements, b = o.elements;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

void CartanBasis::validate(int expected_size) const {
    if (size() != expected_size) {
        throw Error(Errc::InvalidArgument,
                    "basis '" + name + "' has " + std::to_string(size()) +
                        " elements, expected " + std::to_string(expected_size));
    }
    const double limit = 1e-13 * (1 << n());
    for (int i = 0; i < size(); i++) {
        for (int j = i + 1; j < size(); j++) {
            const cdouble t = (to_matrix(elements[i]) * to_matrix(elements[j])).trace();
            if (std::abs(t) > limit) {
                throw Error(Errc::InvalidArgument,
                            "basis '" + name + "' is not orthogonal at (" +
                                elements[i].str() + ", " + elements[j].str() + ")");
            }
        }
    }
}

double closure_check(const CartanBasis &set_a, const CartanBasis &set_b,
                     const CartanBasis &target) {
    const int dim = 1 << set_a.n();
    std::vector<CMat> gen;
    gen.reserve(target.elements.size());
    for (const auto &t : target.elements) {
        gen.push_back(to_matrix(t) * cdouble{0.0, 1.0});
    }
    double worst = 0.0;
    for (const auto &ea : set_a.elements) {
        const CMat ma = to_matrix(ea);
        for (const auto &eb : set_b.elements) {
            const CMat c = commutator(ma, to_matrix(eb));
            CMat residual = c;
            for (const auto &g : gen) {
                // HS projection over the orthogonal generators i*T.
                const cdouble coeff = (g.adjoint() * c).trace() / static_cast<double>(dim);
                residual = residual - g * coeff;
            }
            worst = std::max(worst, residual.frobenius_norm());
        }
    }
    return worst;
}

namespace {

CartanBasis make_basis(const std::string &name, std::initializer_list<const char *> strings) {
    CartanBasis b;
    b.name = name;
    for (const char *s : strings) {
        b.elements.push_back(PauliString::parse(s));
    }
    return b;
}

} // namespace

const CartanBasis &so4_k_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so4_k", {"IY", "YI"});
        r.validate(2);
        return r;
    }();
    return b;
}

const CartanBasis &so4_p_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so4_p", {"XY", "YX", "ZY", "YZ"});
        r.validate(4);
        return r;
    }();
    return b;
}

const CartanBasis &so4_a_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so4_a", {"XY", "YZ"});
        r.validate(2);
        return r;
    }();
    return b;
}

const CartanBasis &so8_k_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so8_k", {
                                                "IXI", "IYI", "IZI",
                                                "XII", "YII", "ZII",
                                                "IXZ", "IYZ", "IZZ",
                                                "XIZ", "YIZ", "ZIZ",
                                            });
        r.validate(12);
        return r;
    }();
    return b;
}

const CartanBasis &so8_p_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so8_p", {
                                                "IXX", "IYX", "IZX",
                                                "XIX", "YIX", "ZIX",
                                                "IIY",
                                                "XXY", "XYY", "XZY",
                                                "YXY", "YYY", "YZY",
                                                "ZXY", "ZYY", "ZZY",
                                            });
        r.validate(16);
        return r;
    }();
    return b;
}

const CartanBasis &so8_a_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so8_a", {"XXY", "YYY", "ZZY", "IIY"});
        r.validate(4);
        return r;
    }();
    return b;
}

const CartanBasis &so8_nested_k_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so8_nested_k", {"IXI", "IYI", "IZI", "XII", "YII", "ZII"});
        r.validate(6);
        return r;
    }();
    return b;
}

const CartanBasis &so8_nested_p_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so8_nested_p", {"IXZ", "IYZ", "IZZ", "XIZ", "YIZ", "ZIZ"});
        r.validate(6);
        return r;
    }();
    return b;
}

const CartanBasis &so8_nested_a_basis() {
    static const CartanBasis b = [] {
        CartanBasis r = make_basis("so8_nested_a", {"IZZ", "ZIZ"});
        r.validate(2);
        return r;
    }();
    return b;
}

const CartanBasis &magic_so8_generators() {
    static const CartanBasis b = [] {
        CartanBasis r;
        r.name = "magic_so8";
        // Two-qubit operators with exactly one non-identity factor,
        // completed by {X, Z, I} on qubit 3...
        const char *one_body[] = {"IX", "IY", "IZ", "XI", "YI", "ZI"};
        const char *third[] = {"X", "Z", "I"};
        for (const char *t : third) {
            for (const char *ob : one_body) {
                r.elements.push_back(PauliString::parse(std::string(ob) + t));
            }
        }
        // ...and the two-body block (plus the identity) tensored with Y.
        const std::string axes = "XYZ";
        for (char a : axes) {
            for (char bsym : axes) {
                r.elements.push_back(PauliString::parse(std::string{a, bsym, 'Y'}));
            }
        }
        r.elements.push_back(PauliString::parse("IIY"));
        r.validate(28);
        return r;
    }();
    return b;
}

CMat magic() {
    static const CMat m = [] {
        const double h = 1.0 / std::sqrt(2.0);
        const cdouble i{0.0, 1.0};
        const CMat m4(4, {
                             h, h * i, 0.0, 0.0,
                             0.0, 0.0, h * i, h,
                             0.0, 0.0, h * i, -h,
                             h, -h * i, 0.0, 0.0,
                         });
        return kron(m4, CMat::identity(2));
    }();
    return m;
}

CMat magic_conjugate(const CMat &b) {
    if (b.dim() != 8) {
        throw Error(Errc::DimMismatch, "magic_conjugate expects an 8x8 matrix");
    }
    const CMat m = magic();
    return m.adjoint() * b * m;
}

} // namespace qortho
