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

#include "qortho/kak.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qortho/eig.hpp"

namespace qortho {

namespace {

CMat block(const CMat &m, int row0, int col0, int size) {
    CMat b(size);
    for (int i = 0; i < size; i++) {
        for (int j = 0; j < size; j++) {
            b.at(i, j) = m.at(row0 + i, col0 + j);
        }
    }
    return b;
}

void set_block(CMat &m, int row0, int col0, const CMat &b) {
    for (int i = 0; i < b.dim(); i++) {
        for (int j = 0; j < b.dim(); j++) {
            m.at(row0 + i, col0 + j) = b.at(i, j);
        }
    }
}

CMat block_diag(const CMat &a, const CMat &b) {
    CMat m(a.dim() + b.dim());
    set_block(m, 0, 0, a);
    set_block(m, a.dim(), a.dim(), b);
    return m;
}

double column_norm(const CMat &m, int col) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); i++) {
        s += std::norm(m.at(i, col));
    }
    return std::sqrt(s);
}

void scale_column(CMat &m, int col, double factor) {
    for (int i = 0; i < m.dim(); i++) {
        m.at(i, col) *= factor;
    }
}

// Nearest real orthogonal matrix (polar factor).
CMat polar_orthogonal(const CMat &m) {
    const RealSvd svd = real_svd(m);
    return (svd.u * svd.v.transpose()).real_part();
}

double det_sign(const CMat &m) {
    return det(m).real() < 0.0 ? -1.0 : 1.0;
}

// Solve a small real linear system in place; `a` is k x k, `b` length k.
std::vector<double> solve_small(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int k = static_cast<int>(b.size());
    for (int col = 0; col < k; col++) {
        int pivot = col;
        for (int r = col + 1; r < k; r++) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-12) {
            throw Error(Errc::InvalidArgument, "singular torus signature system");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (int r = col + 1; r < k; r++) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < k; c++) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(k, 0.0);
    for (int r = k - 1; r >= 0; r--) {
        double acc = b[r];
        for (int c = r + 1; c < k; c++) {
            acc -= a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
    }
    return x;
}

} // namespace

// ---------------------------------------------------------------------------
// Euler decomposition of one-qubit unitaries.

EulerZYZ euler_zyz(const CMat &u, const NumericContext &ctx) {
    if (u.dim() != 2) {
        throw Error(Errc::DimMismatch, "euler_zyz expects a 2x2 matrix");
    }
    if (u.unitary_deviation() > ctx.unitary_tol) {
        throw Error(Errc::NotUnitary, "euler_zyz: input deviates from unitary");
    }
    EulerZYZ e;
    const cdouble d = det(u);
    const double mu = 0.5 * std::atan2(d.imag(), d.real());
    e.phase = std::polar(1.0, mu);
    const cdouble a = u.at(0, 0) * std::polar(1.0, -mu);
    const cdouble b = u.at(1, 0) * std::polar(1.0, -mu);
    e.phi = std::atan2(std::abs(b), std::abs(a));
    if (std::abs(b) < 1e-13) {
        e.theta = wrap_angle(-std::arg(a));
        e.psi = 0.0;
    } else if (std::abs(a) < 1e-13) {
        e.theta = std::arg(b);
        e.psi = 0.0;
    } else {
        e.theta = wrap_angle(0.5 * (-std::arg(a) + std::arg(b)));
        e.psi = wrap_angle(0.5 * (-std::arg(a) - std::arg(b)));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Nearest Kronecker product.

ProductSplit nearest_product_2x2(const CMat &u) {
    if (u.dim() != 4) {
        throw Error(Errc::DimMismatch, "nearest_product_2x2 expects a 4x4 matrix");
    }
    // Rearrange so that u = v (x) w becomes the rank-1 form vec(v) vec(w)ᵀ.
    CMat r(4);
    for (int i1 = 0; i1 < 2; i1++) {
        for (int j1 = 0; j1 < 2; j1++) {
            for (int i2 = 0; i2 < 2; i2++) {
                for (int j2 = 0; j2 < 2; j2++) {
                    r.at(2 * i1 + j1, 2 * i2 + j2) = u.at(2 * i1 + i2, 2 * j1 + j2);
                }
            }
        }
    }
    std::vector<std::vector<double>> vals;
    const CMat gram = r.adjoint() * r;
    const CMat basis = joint_diagonalize({gram}, vals, 1e-13);
    const double sigma = std::sqrt(std::max(0.0, vals[0][0]));

    ProductSplit out;
    out.left = CMat(2);
    out.right = CMat(2);
    if (sigma < 1e-12) {
        out.residual = r.frobenius_norm();
        return out;
    }
    std::vector<cdouble> y(4), x(4);
    for (int i = 0; i < 4; i++) {
        y[i] = basis.at(i, 0);
    }
    for (int i = 0; i < 4; i++) {
        cdouble acc = 0.0;
        for (int j = 0; j < 4; j++) {
            acc += r.at(i, j) * y[j];
        }
        x[i] = acc / sigma;
    }
    const double scale = std::sqrt(sigma);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out.left.at(i, j) = x[2 * i + j] * scale;
            out.right.at(i, j) = std::conj(y[2 * i + j]) * scale;
        }
    }
    out.residual = frobenius_distance(u, kron(out.left, out.right));
    return out;
}

// ---------------------------------------------------------------------------
// Abelian parameter extraction.

std::vector<double> abelian_params(const CMat &a, const CartanBasis &basis,
                                   const NumericContext &ctx) {
    (void)ctx;
    const int k = basis.size();
    const int dim = 1 << basis.n();
    if (a.dim() != dim) {
        throw Error(Errc::DimMismatch, "abelian_params dimension mismatch");
    }
    std::vector<CMat> mats;
    mats.reserve(k);
    for (const auto &p : basis.elements) {
        mats.push_back(to_matrix(p));
    }
    std::vector<std::vector<double>> vals;
    const CMat w = joint_diagonalize(mats, vals, 0.5);

    // Slot signatures: every basis matrix has +/-1 spectrum.
    std::vector<std::vector<double>> sig(dim, std::vector<double>(k, 0.0));
    for (int j = 0; j < dim; j++) {
        for (int i = 0; i < k; i++) {
            const double v = vals[i][j];
            if (std::abs(std::abs(v) - 1.0) > 1e-9) {
                throw Error(Errc::InvalidArgument, "abelian basis is not a +/-1 family");
            }
            sig[j][i] = v < 0 ? -1.0 : 1.0;
        }
    }

    const CMat y = w.adjoint() * a * w;
    double offdiag = 0.0;
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            if (i != j) {
                offdiag = std::max(offdiag, std::abs(y.at(i, j)));
            }
        }
    }
    if (offdiag > 1e-7) {
        throw Error(Errc::NotInAbelianGroup, "matrix does not lie in the abelian subgroup");
    }
    std::vector<double> ph(dim);
    for (int j = 0; j < dim; j++) {
        const cdouble d = y.at(j, j);
        if (std::abs(d) < 0.5) {
            throw Error(Errc::NotInAbelianGroup, "degenerate diagonal in abelian extraction");
        }
        ph[j] = std::arg(d);
    }

    // Pick k independent signature rows (entries are +/-1, so a greedy
    // elimination over copies is exact enough).
    std::vector<int> rows;
    {
        std::vector<std::vector<double>> elim;
        for (int j = 0; j < dim && static_cast<int>(rows.size()) < k; j++) {
            // Orthogonalize against accepted rows and keep if independent.
            std::vector<double> reduced = sig[j];
            for (const auto &er : elim) {
                double dot = 0.0, nrm = 0.0;
                for (int i = 0; i < k; i++) {
                    dot += er[i] * reduced[i];
                    nrm += er[i] * er[i];
                }
                for (int i = 0; i < k; i++) {
                    reduced[i] -= dot / nrm * er[i];
                }
            }
            double nr = 0.0;
            for (int i = 0; i < k; i++) {
                nr += reduced[i] * reduced[i];
            }
            if (nr > 1e-6) {
                rows.push_back(j);
                elim.push_back(reduced);
            }
        }
        if (static_cast<int>(rows.size()) < k) {
            throw Error(Errc::InvalidArgument, "abelian basis signatures are rank deficient");
        }
    }

    // Enumerate 2-pi branches on the selected rows; keep every candidate
    // consistent with all slots and return the minimal-l1 representative.
    std::vector<double> best;
    double best_l1 = 0.0;
    const int span = 3;
    std::vector<int> branch(k, -span);
    while (true) {
        std::vector<std::vector<double>> a_sys(k, std::vector<double>(k));
        std::vector<double> b_sys(k);
        for (int r = 0; r < k; r++) {
            for (int i = 0; i < k; i++) {
                a_sys[r][i] = sig[rows[r]][i];
            }
            b_sys[r] = -ph[rows[r]] + TAU * branch[r];
        }
        const std::vector<double> c = solve_small(a_sys, b_sys);
        bool ok = true;
        for (int j = 0; j < dim && ok; j++) {
            double acc = ph[j];
            for (int i = 0; i < k; i++) {
                acc += sig[j][i] * c[i];
            }
            if (std::abs(wrap_angle(acc)) > 1e-6) {
                ok = false;
            }
        }
        if (ok) {
            double l1 = 0.0;
            for (const double v : c) {
                l1 += std::abs(v);
            }
            if (best.empty() || l1 < best_l1 - 1e-12 ||
                (l1 < best_l1 + 1e-12 && c < best)) {
                best = c;
                best_l1 = l1;
            }
        }
        int pos = k - 1;
        while (pos >= 0 && branch[pos] == span) {
            branch[pos] = -span;
            pos--;
        }
        if (pos < 0) {
            break;
        }
        branch[pos]++;
    }
    if (best.empty()) {
        throw Error(Errc::NotInAbelianGroup, "no consistent branch for abelian parameters");
    }
    PauliSum s;
    for (int i = 0; i < k; i++) {
        s.add(best[i], basis.elements[i]);
    }
    if (frobenius_distance(exp_commuting_sum(s), a) > 1e-8) {
#ifdef QORTHO_DEBUG_ABELIAN
        std::fprintf(stderr, "abelian mismatch %.3e offdiag %.3e\n",
                     frobenius_distance(exp_commuting_sum(s), a), offdiag);
#endif
        throw Error(Errc::NotInAbelianGroup, "abelian parameter re-exponentiation mismatch");
    }
    return best;
}

// ---------------------------------------------------------------------------
// InvolutionSpec construction.

InvolutionSpec::InvolutionSpec(CMat sigma, CartanBasis k_basis, CartanBasis p_basis,
                               CartanBasis a_basis, std::optional<CMat> realifier)
    : sigma_(std::move(sigma)),
      k_basis_(std::move(k_basis)),
      p_basis_(std::move(p_basis)),
      a_basis_(std::move(a_basis)) {
    const int n = sigma_.dim();
    if (!sigma_.is_unitary(1e-12) || !sigma_.is_hermitian(1e-12)) {
        throw Error(Errc::InvalidArgument, "sigma must be hermitian unitary");
    }
    double worst = 0.0;
    for (const auto &e : k_basis_.elements) {
        const CMat m = to_matrix(e);
        worst = std::max(worst, frobenius_distance(sigma_ * m * sigma_, m));
    }
    for (const auto &e : p_basis_.elements) {
        const CMat m = to_matrix(e);
        worst = std::max(worst, frobenius_distance(sigma_ * m * sigma_, m * cdouble{-1.0, 0.0}));
    }
    structure_residual_ = worst;
    if (worst > 1e-10) {
        throw Error(Errc::InvalidArgument, "sigma does not realize the k/p split");
    }
    for (const auto &e : a_basis_.elements) {
        if (!p_basis_.contains(e)) {
            throw Error(Errc::InvalidArgument, "abelian basis must lie inside p");
        }
    }
    for (int i = 0; i < a_basis_.size(); i++) {
        for (int j = i + 1; j < a_basis_.size(); j++) {
            if (!a_basis_.elements[i].commutes_with(a_basis_.elements[j])) {
                throw Error(Errc::InvalidArgument, "abelian basis does not commute");
            }
        }
    }

    const int m = n / 2;
    if (realifier && a_basis_.size() == m) {
        strategy_ = Strategy::CosineSine;
        realifier_ = *realifier;
        if (!realifier_.is_unitary(1e-12)) {
            throw Error(Errc::InvalidArgument, "realifier must be unitary");
        }
        // Real symmetric form of sigma and its ordered eigenbasis.
        const CMat sigma_r = realifier_.adjoint() * sigma_ * realifier_;
        if (sigma_r.max_abs_imag() > 1e-12) {
            throw Error(Errc::InvalidArgument, "sigma is not real in the realified frame");
        }
        std::vector<std::vector<double>> svals;
        CMat z = joint_diagonalize({sigma_r.real_part()}, svals, 0.5).real_part();
        for (int j = 0; j < n; j++) {
            const double want = j < m ? 1.0 : -1.0;
            if (std::abs(svals[0][j] - want) > 1e-9) {
                throw Error(Errc::InvalidArgument, "sigma spectrum is not balanced +/-1");
            }
        }
        // Realified torus generators and their antidiagonal blocks.
        std::vector<CMat> b_blocks;
        for (const auto &e : a_basis_.elements) {
            const CMat gen = realifier_.adjoint() * (to_matrix(e) * cdouble{0.0, -1.0}) * realifier_;
            if (gen.max_abs_imag() > 1e-11) {
                throw Error(Errc::InvalidArgument, "torus generator is not real in frame");
            }
            const CMat xr = z.transpose() * gen.real_part() * z;
            if (block(xr, 0, 0, m).max_abs() > 1e-10 || block(xr, m, m, m).max_abs() > 1e-10) {
                throw Error(Errc::InvalidArgument, "torus generator has diagonal blocks");
            }
            b_blocks.push_back(block(xr, m, 0, m));
        }
        // Simultaneous signed diagonalization: the symmetric orthogonal
        // family BᵢᵀB₁ shares an eigenbasis Q+, and Q- = B₁ Q+ turns every
        // block into a +/-1 diagonal.
        CMat qp = CMat::identity(m);
        std::vector<std::vector<double>> gvals;
        if (a_basis_.size() > 1) {
            std::vector<CMat> family;
            for (size_t i = 1; i < b_blocks.size(); i++) {
                family.push_back(b_blocks[i].transpose() * b_blocks[0]);
            }
            qp = joint_diagonalize(family, gvals, 1e-6).real_part();
        }
        const CMat qm = b_blocks[0] * qp;
        slot_sign_.assign(m, std::vector<int>(a_basis_.size(), 1));
        for (size_t i = 1; i < b_blocks.size(); i++) {
            for (int j = 0; j < m; j++) {
                const double v = gvals[i - 1][j];
                if (std::abs(std::abs(v) - 1.0) > 1e-9) {
                    throw Error(Errc::InvalidArgument, "torus signature is not +/-1");
                }
                slot_sign_[j][i] = v < 0 ? -1 : 1;
            }
        }
        frame_ = realifier_ * (z * block_diag(qp, qm));
        // Loud self-check: every torus generator must take the standard
        // antidiagonal form in the finished frame.
        for (size_t i = 0; i < b_blocks.size(); i++) {
            const CMat gen = frame_.adjoint() * (to_matrix(a_basis_.elements[i]) * cdouble{0.0, -1.0}) * frame_;
            CMat want(n);
            for (int j = 0; j < m; j++) {
                want.at(j, m + j) = -slot_sign_[j][i];
                want.at(m + j, j) = slot_sign_[j][i];
            }
            if (frobenius_distance(gen, want) > 1e-10) {
                throw Error(Errc::InvalidArgument, "torus frame self-check failed");
            }
        }
        return;
    }

    // Block-split route: the group must commute with Z on the last qubit
    // while sigma anticommutes with it, so the element splits into two
    // tensor-product blocks threaded by sigma.
    strategy_ = Strategy::BlockSplit;
    const int qubits = [&] {
        int q = 0;
        while ((1 << q) < n) {
            q++;
        }
        return q;
    }();
    PauliString axis = [&] {
        std::vector<PauliOp> f(static_cast<size_t>(qubits), PauliOp::I);
        f.back() = PauliOp::Z;
        return PauliString(std::move(f));
    }();
    for (const auto &e : k_basis_.elements) {
        if (!e.commutes_with(axis)) {
            throw Error(Errc::InvalidArgument, "block-split requires a commutant on the last qubit");
        }
    }
    for (const auto &e : p_basis_.elements) {
        if (!e.commutes_with(axis)) {
            throw Error(Errc::InvalidArgument, "block-split requires a commutant on the last qubit");
        }
    }
    const CMat axis_m = to_matrix(axis);
    if ((sigma_ * axis_m + axis_m * sigma_).max_abs() > 1e-12) {
        throw Error(Errc::InvalidArgument, "sigma must anticommute with the commutant axis");
    }
    // sigma must couple the two blocks by a scalar.
    const cdouble t = sigma_.at(0, 1);
    for (int i = 0; i < n / 2; i++) {
        for (int j = 0; j < n / 2; j++) {
            const cdouble want = i == j ? t : cdouble{0.0, 0.0};
            if (std::abs(sigma_.at(2 * i, 2 * j + 1) - want) > 1e-12 ||
                std::abs(sigma_.at(2 * i, 2 * j)) > 1e-12) {
                throw Error(Errc::InvalidArgument, "sigma does not couple blocks by a scalar");
            }
        }
    }
    // Torus generators must be diagonal so the block factorization can
    // assemble them from per-qubit phases.
    for (const auto &e : a_basis_.elements) {
        const CMat am = to_matrix(e);
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                if (i != j && std::abs(am.at(i, j)) > 1e-13) {
                    throw Error(Errc::InvalidArgument, "block-split torus must be diagonal");
                }
            }
        }
    }
}

const InvolutionSpec &InvolutionSpec::two_qubit() {
    static const InvolutionSpec s(to_matrix(PauliString::parse("YY")), so4_k_basis(),
                                  so4_p_basis(), so4_a_basis(), CMat::identity(4));
    return s;
}

const InvolutionSpec &InvolutionSpec::three_qubit_outer() {
    static const InvolutionSpec s(to_matrix(PauliString::parse("IIZ")), so8_k_basis(),
                                  so8_p_basis(), so8_a_basis(), magic());
    return s;
}

const InvolutionSpec &InvolutionSpec::three_qubit_inner() {
    static const InvolutionSpec s(to_matrix(PauliString::parse("IIX")), so8_nested_k_basis(),
                                  so8_nested_p_basis(), so8_nested_a_basis(), std::nullopt);
    return s;
}

// ---------------------------------------------------------------------------
// The factorization engine.

struct KakEngine {
    static KakResult cosine_sine(const CMat &u, const InvolutionSpec &inv,
                                 const NumericContext &ctx);
    static KakResult block_split(const CMat &u, const InvolutionSpec &inv,
                                 const NumericContext &ctx);
};

KakResult KakEngine::cosine_sine(const CMat &u, const InvolutionSpec &inv,
                                 const NumericContext &ctx) {
    const int n = inv.dim();
    const int m = n / 2;
    const CMat &frame = inv.frame_;
    CMat uf_c = frame.adjoint() * u * frame;
    if (uf_c.max_abs_imag() > 1e-7) {
        throw Error(Errc::FactorizationResidual,
                    "input is not in the factorization group (complex residue in real frame)");
    }
    const CMat uf = uf_c.real_part();
    if (det(uf).real() < 0.0) {
        throw Error(Errc::FactorizationResidual,
                    "input is not in the identity component (negative determinant)");
    }

    const CMat u11 = block(uf, 0, 0, m);
    const CMat u12 = block(uf, 0, m, m);
    const CMat u21 = block(uf, m, 0, m);
    const CMat u22 = block(uf, m, m, m);

    // Right singular basis of U11; U21 shares it because the two gram
    // matrices sum to the identity. Inside a degenerate gram cluster the
    // directions must come from whichever gram is small there: products of
    // small entries carry absolute rounding at the cluster's own scale,
    // while the near-identity gram drowns the same structure in 1e-16
    // noise. So clusters with cosines near 1 are refined by the sine gram
    // and clusters with cosines near 0 by the cosine gram itself.
    std::vector<std::vector<double>> vals;
    const CMat cos_gram = u11.transpose() * u11;
    const CMat sin_gram = u21.transpose() * u21;
    CMat r1 = joint_diagonalize({cos_gram}, vals, 1e-9).real_part();
    {
        std::vector<std::vector<int>> clusters{{0}};
        for (int j = 1; j < m; j++) {
            if (std::abs(vals[0][static_cast<size_t>(j)] - vals[0][static_cast<size_t>(j - 1)]) >
                1e-9) {
                clusters.push_back({});
            }
            clusters.back().push_back(j);
        }
        for (const auto &cluster : clusters) {
            const int k = static_cast<int>(cluster.size());
            if (k == 1) {
                continue;
            }
            const CMat &refiner =
                vals[0][static_cast<size_t>(cluster[0])] > 0.5 ? sin_gram : cos_gram;
            CMat sub(k);
            for (int i = 0; i < k; i++) {
                for (int j = 0; j < k; j++) {
                    cdouble acc = 0.0;
                    for (int r = 0; r < m; r++) {
                        cdouble rv = 0.0;
                        for (int c = 0; c < m; c++) {
                            rv += refiner.at(r, c) * r1.at(c, cluster[static_cast<size_t>(j)]);
                        }
                        acc += r1.at(r, cluster[static_cast<size_t>(i)]) * rv;
                    }
                    sub.at(i, j) = acc.real();
                }
            }
            CMat rot;
            std::vector<double> lam;
            hermitian_jacobi(sub, rot, lam);
            std::vector<int> order(static_cast<size_t>(k));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return lam[static_cast<size_t>(x)] > lam[static_cast<size_t>(y)]; });
            std::vector<std::vector<double>> newcols(static_cast<size_t>(k),
                                                     std::vector<double>(static_cast<size_t>(m)));
            for (int j = 0; j < k; j++) {
                for (int r = 0; r < m; r++) {
                    cdouble acc = 0.0;
                    for (int i = 0; i < k; i++) {
                        acc += r1.at(r, cluster[static_cast<size_t>(i)]) *
                               rot.at(i, order[static_cast<size_t>(j)]);
                    }
                    newcols[static_cast<size_t>(j)][static_cast<size_t>(r)] = acc.real();
                }
            }
            for (int j = 0; j < k; j++) {
                for (int r = 0; r < m; r++) {
                    r1.at(r, cluster[static_cast<size_t>(j)]) =
                        newcols[static_cast<size_t>(j)][static_cast<size_t>(r)];
                }
            }
        }
    }

    const CMat top = u11 * r1;
    const CMat bottom = u21 * r1;
    CMat l1(m), l2(m);
    std::vector<double> cvals(m), svals(m);
    std::vector<bool> l1_built(m, false), l2_built(m, false);
    for (int j = 0; j < m; j++) {
        cvals[j] = column_norm(top, j);
        svals[j] = column_norm(bottom, j);
        if (cvals[j] > 1e-13) {
            for (int i = 0; i < m; i++) {
                l1.at(i, j) = top.at(i, j) / cvals[j];
            }
            l1_built[j] = true;
        }
        if (svals[j] > 1e-13) {
            for (int i = 0; i < m; i++) {
                l2.at(i, j) = bottom.at(i, j) / svals[j];
            }
            l2_built[j] = true;
        }
    }
    auto complete = [m](CMat &mat, std::vector<bool> &built) {
        for (int j = 0; j < m; j++) {
            if (built[j]) {
                continue;
            }
            std::vector<double> best(m, 0.0);
            double best_nrm = -1.0;
            for (int seed = 0; seed < m; seed++) {
                std::vector<double> cand(m, 0.0);
                cand[seed] = 1.0;
                for (int k = 0; k < m; k++) {
                    if (!built[k]) {
                        continue;
                    }
                    double dot = 0.0;
                    for (int i = 0; i < m; i++) {
                        dot += mat.at(i, k).real() * cand[i];
                    }
                    for (int i = 0; i < m; i++) {
                        cand[i] -= dot * mat.at(i, k).real();
                    }
                }
                double nrm = 0.0;
                for (const double v : cand) {
                    nrm += v * v;
                }
                nrm = std::sqrt(nrm);
                if (nrm > best_nrm + 1e-12) {
                    best_nrm = nrm;
                    best = cand;
                }
            }
            if (best_nrm < 0.25) {
                throw Error(Errc::FactorizationResidual, "failed to complete a K factor");
            }
            for (int i = 0; i < m; i++) {
                mat.at(i, j) = best[i] / best_nrm;
            }
            built[j] = true;
        }
    };
    complete(l1, l1_built);
    complete(l2, l2_built);
    l1 = polar_orthogonal(l1);
    l2 = polar_orthogonal(l2);

    CMat r2t(m);
    {
        const CMat t1 = l1.transpose() * u12;
        const CMat t2 = l2.transpose() * u22;
        for (int j = 0; j < m; j++) {
            for (int c = 0; c < m; c++) {
                r2t.at(j, c) = -svals[j] * t1.at(j, c) + cvals[j] * t2.at(j, c);
            }
        }
    }
    CMat r2 = polar_orthogonal(r2t.transpose());

    // Determinant repair into the identity component: with det(U_f) = +1 an
    // even number of the four block factors carries a -1, and flipping the
    // first column of exactly those factors keeps the middle factor inside
    // the torus (now with signed sines, which the parameter fit absorbs).
    int flips = 0;
    for (CMat *factor : {&l1, &l2, &r1, &r2}) {
        if (det_sign(*factor) < 0) {
            scale_column(*factor, 0, -1.0);
            flips++;
        }
    }
    if (flips % 2 != 0) {
        throw Error(Errc::FactorizationResidual, "determinant parity repair failed");
    }

    const CMat k1_f = block_diag(l1, l2);
    const CMat k2_f = block_diag(r1, r2).transpose();

    KakResult out;
    out.repair_flips = flips;
    out.k1 = frame * k1_f * frame.adjoint();
    out.k2 = frame * k2_f * frame.adjoint();
    out.a = out.k1.adjoint() * u * out.k2.adjoint();
    out.params = abelian_params(out.a, inv.a_basis(), ctx);
    out.reconstruction_error = frobenius_distance(out.k1 * out.a * out.k2, u);
    if (out.reconstruction_error > ctx.factor_residual) {
        throw Error(Errc::FactorizationResidual, "reconstruction residual too large");
    }
    return out;
}

KakResult KakEngine::block_split(const CMat &u, const InvolutionSpec &inv,
                                 const NumericContext &ctx) {
    const int n = inv.dim();
    const int m = n / 2;
    // Blocks over the last qubit (even = +1 of the commutant axis).
    CMat vp(m), vm(m);
    double off = 0.0;
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            vp.at(i, j) = u.at(2 * i, 2 * j);
            vm.at(i, j) = u.at(2 * i + 1, 2 * j + 1);
            off = std::max(off, std::abs(u.at(2 * i, 2 * j + 1)));
            off = std::max(off, std::abs(u.at(2 * i + 1, 2 * j)));
        }
    }
    if (off > 1e-8) {
        throw Error(Errc::FactorizationResidual,
                    "input does not commute with the block axis");
    }
    if (m != 4) {
        throw Error(Errc::UnsupportedMode, "block-split factorization expects 4-dim blocks");
    }
    const CMat g = vp * vm.adjoint();
    ProductSplit split = nearest_product_2x2(g);
    if (split.residual > ctx.product_residual * 10.0) {
        throw Error(Errc::FactorizationResidual, "block is not a tensor product");
    }
    // Normalize both factors into SU(2).
    auto to_su2 = [](CMat &f) {
        const cdouble d = det(f);
        if (std::abs(d) < 1e-12) {
            throw Error(Errc::FactorizationResidual, "degenerate tensor factor");
        }
        const cdouble root = std::polar(std::sqrt(std::abs(d)), 0.5 * std::arg(d));
        f = f * (cdouble{1.0, 0.0} / root);
    };
    to_su2(split.left);
    to_su2(split.right);
    // The SU(2) pair reproduces the block only up to a sign (both factors
    // may carry determinant -1 before normalization); fold it into the
    // left factor.
    const cdouble align = (kron(split.left, split.right).adjoint() * g).trace() / 4.0;
    if (align.real() < 0.0) {
        split.left = split.left * cdouble{-1.0, 0.0};
    }

    // Diagonalize each SU(2) factor; kappa columns ordered by the
    // traceless Hermitian part so the result is deterministic.
    auto factor_eig = [](const CMat &gf, CMat &kappa, double &half0) {
        CMat t(2);
        const CMat gd = gf.adjoint();
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                t.at(i, j) = cdouble{0.0, 0.5} * (gf.at(i, j) - gd.at(i, j));
            }
        }
        if (t.max_abs() < 1e-12) {
            kappa = CMat::identity(2);
        } else {
            std::vector<std::vector<double>> vals;
            kappa = joint_diagonalize({t}, vals, 1e-13);
            const cdouble dk = det(kappa);
            const cdouble root = std::polar(1.0, 0.5 * std::arg(dk));
            kappa = kappa * (cdouble{1.0, 0.0} / root);
        }
        const CMat diag = kappa.adjoint() * gf * kappa;
        const cdouble d0 = diag.at(0, 0);
        half0 = 0.5 * std::arg(d0 / std::abs(d0));
    };
    CMat kap1, kap2;
    double h1 = 0.0, h2 = 0.0;
    factor_eig(split.left, kap1, h1);
    factor_eig(split.right, kap2, h2);

    // Computational-diagonal square root block and the derived factors.
    const CMat d_half = kron(rot_z_2(-h1), rot_z_2(-h2));
    const CMat kap = kron(kap1, kap2);
    const CMat k2_block = d_half.adjoint() * kap.adjoint() * vp;

    auto embed = [m](const CMat &b) {
        CMat full(2 * m);
        for (int i = 0; i < m; i++) {
            for (int j = 0; j < m; j++) {
                full.at(2 * i, 2 * j) = b.at(i, j);
                full.at(2 * i + 1, 2 * j + 1) = b.at(i, j);
            }
        }
        return full;
    };

    KakResult out;
    out.k1 = embed(kap);
    out.k2 = embed(k2_block);
    out.a = out.k1.adjoint() * u * out.k2.adjoint();
    out.params = abelian_params(out.a, inv.a_basis(), ctx);
    out.reconstruction_error = frobenius_distance(out.k1 * out.a * out.k2, u);
    if (out.reconstruction_error > ctx.factor_residual) {
        throw Error(Errc::FactorizationResidual, "reconstruction residual too large");
    }
    return out;
}

KakResult kak_factor(const CMat &u, const InvolutionSpec &inv, const NumericContext &ctx) {
    if (u.dim() != inv.dim()) {
        throw Error(Errc::DimMismatch, "kak_factor dimension mismatch");
    }
    if (u.unitary_deviation() > ctx.unitary_tol) {
        throw Error(Errc::NotUnitary, "kak_factor: input deviates from unitary");
    }
    if (inv.strategy_ == InvolutionSpec::Strategy::CosineSine) {
        return KakEngine::cosine_sine(u, inv, ctx);
    }
    return KakEngine::block_split(u, inv, ctx);
}

} // namespace qortho
