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

#ifndef QORTHO_NUMERIC_HPP
#define QORTHO_NUMERIC_HPP

#include <cmath>
#include <complex>

namespace qortho {

using cdouble = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TAU = 2.0 * PI;

/// Tolerance record shared by the numeric kernel. Every entry point that
/// gates on a tolerance takes one of these (defaulted), so a caller can
/// tighten or loosen the whole stack in one place.
struct NumericContext {
    double unitary_tol = 1e-10;      // gate for "is unitary" preconditions
    double hermitian_tol = 1e-10;    // gate for "is Hermitian" preconditions
    double orthogonal_tol = 1e-10;   // gate for real-orthogonal inputs
    double determinant_tol = 1e-10;  // gate for det = +/-1 checks
    double cluster_tol = 1e-8;       // eigenphase degeneracy clustering
    double zero_angle_eps = 1e-12;   // rotation elision in the optimizer
    double factor_residual = 1e-8;   // KAK reconstruction failure threshold
    double product_residual = 1e-9;  // tensor-split failure threshold
};

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, TAU);
    if (a <= -PI) {
        a += TAU;
    } else if (a > PI) {
        a -= TAU;
    }
    return a;
}

} // namespace qortho

#endif
