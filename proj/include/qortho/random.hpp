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

#ifndef QORTHO_RANDOM_HPP
#define QORTHO_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qortho/matrix.hpp"

namespace qortho {

/// Deterministic random stream: MT19937-64 for raw bits, explicit
/// Box-Muller for normals. std::normal_distribution is not pinned by the
/// standard, so it is avoided for cross-platform reproducibility.
class RandomStream {
  public:
    explicit RandomStream(uint64_t seed) : gen_(seed) {}

    double uniform() { // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();
    uint64_t bits() { return gen_(); }
    int below(int n) { return static_cast<int>(bits() % static_cast<uint64_t>(n)); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed real orthogonal matrix of the requested determinant:
/// QR of a standard-normal matrix with the R-diagonal sign fix, then a
/// first-row negation when the determinant needs flipping.
CMat haar_orthogonal(int dim, uint64_t seed, int det_sign);

} // namespace qortho

#endif
