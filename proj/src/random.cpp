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

#include "qortho/random.hpp"

#include <cmath>

namespace qortho {

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    have_spare_ = true;
    spare_ = r * std::sin(TAU * u2);
    return r * std::cos(TAU * u2);
}

CMat haar_orthogonal(int dim, uint64_t seed, int det_sign) {
    if (det_sign != 1 && det_sign != -1) {
        throw Error(Errc::InvalidArgument, "determinant sign must be +1 or -1");
    }
    RandomStream rng(seed);
    CMat g(dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            g.at(i, j) = rng.normal();
        }
    }
    // Modified Gram-Schmidt QR; columns scaled by the sign of the R
    // diagonal so the distribution is Haar.
    CMat q(dim);
    for (int j = 0; j < dim; j++) {
        std::vector<double> col(dim);
        for (int i = 0; i < dim; i++) {
            col[static_cast<size_t>(i)] = g.at(i, j).real();
        }
        for (int k = 0; k < j; k++) {
            double dot = 0.0;
            for (int i = 0; i < dim; i++) {
                dot += q.at(i, k).real() * col[static_cast<size_t>(i)];
            }
            for (int i = 0; i < dim; i++) {
                col[static_cast<size_t>(i)] -= dot * q.at(i, k).real();
            }
        }
        double nrm = 0.0;
        for (const double v : col) {
            nrm += v * v;
        }
        nrm = std::sqrt(nrm);
        // rjj sign: the projection of the original column onto the new
        // direction.
        double rjj = 0.0;
        for (int i = 0; i < dim; i++) {
            rjj += col[static_cast<size_t>(i)] / nrm * g.at(i, j).real();
        }
        const double sign = rjj < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < dim; i++) {
            q.at(i, j) = sign * col[static_cast<size_t>(i)] / nrm;
        }
    }
    if (det(q).real() * det_sign < 0.0) {
        for (int j = 0; j < dim; j++) {
            q.at(0, j) = -q.at(0, j);
        }
    }
    return q;
}

} // namespace qortho
