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

#ifndef QORTHO_SYNTH_TWO_QUBIT_HPP
#define QORTHO_SYNTH_TWO_QUBIT_HPP

#include "qortho/circuit.hpp"
#include "qortho/kak.hpp"

namespace qortho {

/// Two-qubit synthesis result. Reconstruction is exact (no global phase):
/// the gate set {CNOT, Ry} only generates real matrices.
struct Synth2Result {
    Circuit circuit;
    KakResult kak;
    double reconstruction_error = 0.0;
    GateCounts gate_counts;
};

/// Synthesize a special orthogonal 4x4 gate into at most 2 CNOTs and
/// 6 y-rotations.
Synth2Result synth_so4(const CMat &x, bool run_optimizer = true,
                       const NumericContext &ctx = {});

/// Synthesize an orthogonal 4x4 gate of determinant -1 into at most
/// 3 CNOTs and 6 y-rotations (a fixed CNOT prefactor reduces to the
/// special orthogonal case).
Synth2Result synth_o4(const CMat &x, bool run_optimizer = true,
                      const NumericContext &ctx = {});

/// Route on the determinant sign.
Synth2Result dispatch_2q(const CMat &x, bool run_optimizer = true,
                         const NumericContext &ctx = {});

} // namespace qortho

#endif
