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

#include "qortho/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qortho {

namespace {

// One cyclic complex Jacobi pass; returns the off-diagonal norm removed.
double jacobi_sweep(CMat &a, CMat &v) {
    const int n = a.dim();
    double removed = 0.0;
    for (int p = 0; p < n - 1; p++) {
        for (int q = p + 1; q < n; q++) {
            const cdouble apq = a.at(p, q);
            const double mag = std::abs(apq);
            if (mag < 1e-300) {
                continue;
            }
            removed += 2.0 * mag * mag;
            const double app = a.at(p, p).real();
            const double aqq = a.at(q, q).real();
            // Unitary 2x2 rotation annihilating a[p][q]; fold the angle
            // into (-pi/4, pi/4] so the diagonal keeps its ordering.
            double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
            if (theta > 0.25 * PI) {
                theta -= 0.5 * PI;
            }
            const double c = std::cos(theta);
            const cdouble s = std::sin(theta) * (apq / mag);
            // Rows/columns update: A <- J† A J, V <- V J.
            for (int k = 0; k < n; k++) {
                const cdouble akp = a.at(k, p), akq = a.at(k, q);
                a.at(k, p) = c * akp - std::conj(s) * akq;
                a.at(k, q) = s * akp + c * akq;
            }
            for (int k = 0; k < n; k++) {
                const cdouble apk = a.at(p, k), aqk = a.at(q, k);
                a.at(p, k) = c * apk - s * aqk;
                a.at(q, k) = std::conj(s) * apk + c * aqk;
            }
            for (int k = 0; k < n; k++) {
                const cdouble vkp = v.at(k, p), vkq = v.at(k, q);
                v.at(k, p) = c * vkp - std::conj(s) * vkq;
                v.at(k, q) = s * vkp + c * vkq;
            }
        }
    }
    return removed;
}

double offdiag_norm2(const CMat &a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); i++) {
        for (int j = 0; j < a.dim(); j++) {
            if (i != j) {
                s += std::norm(a.at(i, j));
            }
        }
    }
    return s;
}

void canonicalize_column_phases(CMat &v) {
    const int n = v.dim();
    for (int j = 0; j < n; j++) {
        int best = 0;
        double bestmag = 0.0;
        for (int i = 0; i < n; i++) {
            const double m = std::abs(v.at(i, j));
            if (m > bestmag + 1e-14) {
                bestmag = m;
                best = i;
            }
        }
        if (bestmag > 0.0) {
            const cdouble ph = v.at(best, j) / bestmag;
            for (int i = 0; i < n; i++) {
                v.at(i, j) /= ph;
            }
        }
    }
}

} // namespace

void hermitian_jacobi(const CMat &h, CMat &vectors, std::vector<double> &values) {
    const int n = h.dim();
    CMat a = h;
    // Symmetrize away representation noise so the iteration is exactly
    // Hermitian from the start.
    for (int i = 0; i < n; i++) {
        for (int j = i; j < n; j++) {
            const cdouble m = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = m;
            a.at(j, i) = std::conj(m);
        }
        a.at(i, i) = a.at(i, i).real();
    }
    vectors = CMat::identity(n);
    // Work on the traceless part: a large identity component carries no
    // off-diagonal structure, but it would dominate the rotation rounding
    // and the stopping scale, leaving fine spectral splittings unresolved.
    const double mean = (a.trace() / static_cast<double>(n)).real();
    for (int i = 0; i < n; i++) {
        a.at(i, i) -= mean;
    }
    const double scale = std::max(a.frobenius_norm(), 1e-300);
    int sweeps = 0;
    while (offdiag_norm2(a) > (1e-15 * scale) * (1e-15 * scale) * n) {
        jacobi_sweep(a, vectors);
        if (++sweeps > 80) {
            throw Error(Errc::NoConvergence, "hermitian jacobi did not converge");
        }
    }
    values.resize(n);
    for (int i = 0; i < n; i++) {
        values[i] = a.at(i, i).real() + mean;
    }
}

CMat joint_diagonalize(const std::vector<CMat> &mats,
                       std::vector<std::vector<double>> &values,
                       double cluster_tol) {
    if (mats.empty()) {
        throw Error(Errc::InvalidArgument, "joint_diagonalize of no matrices");
    }
    const int n = mats.front().dim();
    CMat basis = CMat::identity(n);
    values.assign(mats.size(), std::vector<double>(n, 0.0));

    // Clusters of column indices still considered degenerate.
    std::vector<std::vector<int>> clusters{std::vector<int>(n)};
    std::iota(clusters[0].begin(), clusters[0].end(), 0);

    for (size_t m = 0; m < mats.size(); m++) {
        if (mats[m].dim() != n) {
            throw Error(Errc::DimMismatch, "joint_diagonalize dimension mismatch");
        }
        std::vector<std::vector<int>> next_clusters;
        for (const auto &cluster : clusters) {
            const int k = static_cast<int>(cluster.size());
            if (k == 1) {
                const int col = cluster[0];
                cdouble lam = 0.0;
                for (int r = 0; r < n; r++) {
                    cdouble acc = 0.0;
                    for (int c = 0; c < n; c++) {
                        acc += mats[m].at(r, c) * basis.at(c, col);
                    }
                    lam += std::conj(basis.at(r, col)) * acc;
                }
                values[m][col] = lam.real();
                next_clusters.push_back(cluster);
                continue;
            }
            // Project the matrix into the cluster and diagonalize there.
            CMat sub(k);
            for (int i = 0; i < k; i++) {
                for (int j = 0; j < k; j++) {
                    cdouble acc = 0.0;
                    for (int r = 0; r < n; r++) {
                        cdouble av = 0.0;
                        for (int c = 0; c < n; c++) {
                            av += mats[m].at(r, c) * basis.at(c, cluster[j]);
                        }
                        acc += std::conj(basis.at(r, cluster[i])) * av;
                    }
                    sub.at(i, j) = acc;
                }
            }
            CMat rot;
            std::vector<double> lam;
            hermitian_jacobi(sub, rot, lam);
            // Sort descending within the cluster.
            std::vector<int> order(k);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return lam[x] > lam[y]; });
            // Apply the rotation to the basis columns of this cluster.
            std::vector<std::vector<cdouble>> newcols(k, std::vector<cdouble>(n, 0.0));
            for (int j = 0; j < k; j++) {
                const int src = order[j];
                for (int r = 0; r < n; r++) {
                    cdouble acc = 0.0;
                    for (int i = 0; i < k; i++) {
                        acc += basis.at(r, cluster[i]) * rot.at(i, src);
                    }
                    newcols[j][r] = acc;
                }
            }
            for (int j = 0; j < k; j++) {
                for (int r = 0; r < n; r++) {
                    basis.at(r, cluster[j]) = newcols[j][r];
                }
                values[m][cluster[j]] = lam[order[j]];
            }
            // Split the cluster by the fresh eigenvalues.
            std::vector<int> cur{cluster[0]};
            for (int j = 1; j < k; j++) {
                if (std::abs(values[m][cluster[j]] - values[m][cluster[j - 1]]) > cluster_tol) {
                    next_clusters.push_back(cur);
                    cur.clear();
                }
                cur.push_back(cluster[j]);
            }
            next_clusters.push_back(cur);
        }
        clusters = std::move(next_clusters);
    }
    canonicalize_column_phases(basis);
    return basis;
}

SpectralDecomposition eig_unitary(const CMat &u,
                                  const std::optional<CMat> &tiebreak,
                                  const NumericContext &ctx) {
    if (u.unitary_deviation() > ctx.unitary_tol) {
        throw Error(Errc::NotUnitary, "eig_unitary: input deviates from unitary");
    }
    const int n = u.dim();
    const CMat ua = u.adjoint();
    CMat hre(n), him(n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            hre.at(i, j) = 0.5 * (u.at(i, j) + ua.at(i, j));
            him.at(i, j) = cdouble{0.0, -0.5} * (u.at(i, j) - ua.at(i, j));
        }
    }
    std::vector<CMat> mats{hre, him};
    if (tiebreak) {
        if (tiebreak->dim() != n) {
            throw Error(Errc::DimMismatch, "eig_unitary: tiebreak dimension mismatch");
        }
        mats.push_back(*tiebreak);
    }
    std::vector<std::vector<double>> vals;
    CMat basis = joint_diagonalize(mats, vals, ctx.cluster_tol);

    // The staged pass leaves O(eps/gap) cross-talk between eigenvalues that
    // are close but outside the clustering tolerance. Polish by driving
    // V†uV to diagonal with targeted 2x2 rotations; skipped pairs with
    // negligible coupling keep the tiebreak structure intact.
    CMat y = basis.adjoint() * u * basis;
    for (int sweep = 0; sweep < 6; sweep++) {
        double worst = 0.0;
        for (int i = 0; i < n - 1; i++) {
            for (int j = i + 1; j < n; j++) {
                const double off = std::max(std::abs(y.at(i, j)), std::abs(y.at(j, i)));
                worst = std::max(worst, off);
                if (off < 1e-15) {
                    continue;
                }
                const cdouble a = y.at(i, i), b = y.at(i, j);
                const cdouble c = y.at(j, i), d = y.at(j, j);
                const cdouble disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
                const cdouble lam = 0.5 * (a + d + disc);
                cdouble v0, v1;
                if (std::abs(b) + std::abs(lam - a) >= std::abs(lam - d) + std::abs(c)) {
                    v0 = b;
                    v1 = lam - a;
                } else {
                    v0 = lam - d;
                    v1 = c;
                }
                const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
                if (nrm < 1e-150) {
                    continue;
                }
                v0 /= nrm;
                v1 /= nrm;
                for (int k = 0; k < n; k++) {
                    const cdouble yi = y.at(k, i), yj = y.at(k, j);
                    y.at(k, i) = v0 * yi + v1 * yj;
                    y.at(k, j) = -std::conj(v1) * yi + std::conj(v0) * yj;
                }
                for (int k = 0; k < n; k++) {
                    const cdouble yi = y.at(i, k), yj = y.at(j, k);
                    y.at(i, k) = std::conj(v0) * yi + std::conj(v1) * yj;
                    y.at(j, k) = -v1 * yi + v0 * yj;
                }
                for (int k = 0; k < n; k++) {
                    const cdouble bi = basis.at(k, i), bj = basis.at(k, j);
                    basis.at(k, i) = v0 * bi + v1 * bj;
                    basis.at(k, j) = -std::conj(v1) * bi + std::conj(v0) * bj;
                }
            }
        }
        if (worst < 1e-14) {
            break;
        }
    }

    std::vector<double> phase(n), tie_vals(n, 0.0);
    for (int i = 0; i < n; i++) {
        phase[i] = std::arg(y.at(i, i));
        if (phase[i] >= PI) {
            phase[i] -= TAU; // keep [-pi, pi)
        }
        if (tiebreak) {
            cdouble acc = 0.0;
            for (int r = 0; r < n; r++) {
                cdouble tv = 0.0;
                for (int ccol = 0; ccol < n; ccol++) {
                    tv += tiebreak->at(r, ccol) * basis.at(ccol, i);
                }
                acc += std::conj(basis.at(r, i)) * tv;
            }
            tie_vals[i] = acc.real();
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int yy) {
        if (std::abs(phase[x] - phase[yy]) > ctx.cluster_tol) {
            return phase[x] < phase[yy];
        }
        if (tiebreak && std::abs(tie_vals[x] - tie_vals[yy]) > 1e-12) {
            return tie_vals[x] > tie_vals[yy];
        }
        return false;
    });

    SpectralDecomposition sd;
    sd.eigenvalues.resize(n);
    sd.eigenvectors = CMat(n);
    for (int j = 0; j < n; j++) {
        const int src = order[j];
        const cdouble lam = y.at(src, src);
        sd.eigenvalues[j] = lam / std::abs(lam);
        for (int r = 0; r < n; r++) {
            sd.eigenvectors.at(r, j) = basis.at(r, src);
        }
    }
    canonicalize_column_phases(sd.eigenvectors);
    return sd;
}

RealSvd real_svd(const CMat &a) {
    const int n = a.dim();
    const CMat ata = a.transpose() * a;
    std::vector<std::vector<double>> vals;
    CMat v = joint_diagonalize({ata}, vals, 1e-13);
    // joint_diagonalize canonicalizes phases; for a real symmetric input the
    // basis is real up to those phase factors, so drop any residual
    // imaginary dust.
    v = v.real_part();

    RealSvd r;
    r.v = CMat(n);
    r.u = CMat(n);
    r.s.resize(n);
    // Eigenvalues already come sorted descending.
    for (int j = 0; j < n; j++) {
        r.s[j] = std::sqrt(std::max(0.0, vals[0][j]));
        for (int i = 0; i < n; i++) {
            r.v.at(i, j) = v.at(i, j);
        }
    }
    // U columns where sigma is meaningful.
    std::vector<bool> have(n, false);
    for (int j = 0; j < n; j++) {
        if (r.s[j] > 1e-9) {
            for (int i = 0; i < n; i++) {
                cdouble acc = 0.0;
                for (int k = 0; k < n; k++) {
                    acc += a.at(i, k) * r.v.at(k, j);
                }
                r.u.at(i, j) = acc / r.s[j];
            }
            have[j] = true;
        }
    }
    // Deterministic completion of the remaining columns: project every
    // canonical seed against the built columns and keep the best residual.
    for (int j = 0; j < n; j++) {
        if (have[j]) {
            continue;
        }
        std::vector<cdouble> best(n, 0.0);
        double best_nrm = -1.0;
        for (int seed = 0; seed < n; seed++) {
            std::vector<cdouble> cand(n, 0.0);
            cand[seed] = 1.0;
            for (int k = 0; k < n; k++) {
                if (!have[k]) {
                    continue;
                }
                cdouble dot = 0.0;
                for (int i = 0; i < n; i++) {
                    dot += std::conj(r.u.at(i, k)) * cand[i];
                }
                for (int i = 0; i < n; i++) {
                    cand[i] -= dot * r.u.at(i, k);
                }
            }
            double nrm = 0.0;
            for (int i = 0; i < n; i++) {
                nrm += std::norm(cand[i]);
            }
            nrm = std::sqrt(nrm);
            if (nrm > best_nrm + 1e-12) {
                best_nrm = nrm;
                best = cand;
            }
        }
        if (best_nrm < 0.25) {
            throw Error(Errc::NoConvergence, "real_svd: failed to complete basis");
        }
        for (int i = 0; i < n; i++) {
            r.u.at(i, j) = best[i] / best_nrm;
        }
        have[j] = true;
    }
    // Left vectors built through A v / sigma lose orthogonality for small
    // singular values; one Gram-Schmidt pass restores it without moving the
    // well-conditioned columns.
    for (int j = 0; j < n; j++) {
        for (int k = 0; k < j; k++) {
            cdouble dot = 0.0;
            for (int i = 0; i < n; i++) {
                dot += std::conj(r.u.at(i, k)) * r.u.at(i, j);
            }
            for (int i = 0; i < n; i++) {
                r.u.at(i, j) -= dot * r.u.at(i, k);
            }
        }
        double nrm = 0.0;
        for (int i = 0; i < n; i++) {
            nrm += std::norm(r.u.at(i, j));
        }
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; i++) {
            r.u.at(i, j) /= nrm;
        }
    }
    return r;
}

} // namespace qortho
