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

#ifndef QORTHO_SYNTH_THREE_QUBIT_HPP
#define QORTHO_SYNTH_THREE_QUBIT_HPP

#include <array>

#include "qortho/circuit.hpp"
#include "qortho/kak.hpp"

namespace qortho {

/// Three-qubit synthesis result. Reconstruction is verified up to a global
/// phase, which is tracked explicitly and lands at +/-1: the target and all
/// CNOT/Ry gates are real, so only the z-rotations carry phase structure.
struct Synth3Result {
    Circuit circuit;
    Circuit raw_circuit; // pre-optimization assembly (16 CNOT, 40 rotations)
    KakResult outer;
    KakResult inner_left;
    KakResult inner_right;
    std::array<double, 4> abelian_outer{};      // coefficients on {XXY, YYY, ZZY, IIY}
    std::array<double, 2> abelian_inner_left{}; // coefficients on {IZZ, ZIZ}
    std::array<double, 2> abelian_inner_right{};
    std::array<EulerZYZ, 8> euler{};
    double reconstruction_error = 0.0;
    cdouble global_phase{1.0, 0.0};
    GateCounts gate_counts;
};

/// Synthesize a special orthogonal 8x8 gate into at most 16 CNOTs and
/// 36 one-qubit rotations.
Synth3Result synth_so8(const CMat &x, bool run_optimizer = true,
                       const NumericContext &ctx = {});

/// Fixed circuit computing the magic transformation on qubits 1-2 of a
/// three-qubit register: one CNOT and three rotations. The adjoint flag
/// reverses the gate order and negates the angles.
Circuit emit_magic_circuit(bool adjoint);

/// Circuit for the commuting block exp(-i(a XXY + b YYY + c ZZY + d IIY)):
/// six CNOTs and six y-rotations.
Circuit emit_a_circuit(double a, double b, double c, double d);

/// Circuit for exp(-i(a IZY - b ZZY + c ZIY)): the conjugated core of the
/// block above, four CNOTs and three y-rotations.
Circuit emit_a_tilde_circuit(double a, double b, double c);

/// Circuit for exp(-i(alpha IZZ + beta ZIZ)): four CNOTs and two
/// z-rotations.
Circuit emit_a1_circuit(double alpha, double beta);

} // namespace qortho

#endif
