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

#ifndef QORTHO_CIRCUIT_HPP
#define QORTHO_CIRCUIT_HPP

#include <map>
#include <string>
#include <vector>

#include "qortho/matrix.hpp"

namespace qortho {

enum class Axis : char { Y = 'y', Z = 'z' };

/// A CNOT or a one-qubit axis rotation. Qubits are 1-based; qubit 1 is the
/// most significant bit of basis-state indices. Rotations follow
/// R_axis(a) = exp(-i a sigma_axis) (no half angle).
struct Gate {
    enum class Kind { Cnot, Rot } kind = Kind::Cnot;
    int control = 0;    // Cnot only
    int target = 0;     // Cnot only
    Axis axis = Axis::Y; // Rot only
    int qubit = 0;      // Rot only
    double angle = 0.0; // Rot only

    static Gate cnot(int control, int target);
    static Gate ry(int qubit, double angle);
    static Gate rz(int qubit, double angle);

    bool operator==(const Gate &o) const;
};

/// Gate list in application order: the first element acts first on a state,
/// so the circuit's matrix multiplies the gate matrices in reverse order.
struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int qubits) : n(qubits) {}

    Circuit &append(const Gate &g) {
        gates.push_back(g);
        return *this;
    }
    Circuit &append(const Circuit &other);

    bool operator==(const Circuit &o) const { return n == o.n && gates == o.gates; }
};

struct GateCounts {
    int cnot = 0;
    int one_qubit = 0;
    std::map<char, int> by_axis; // 'y' / 'z'
};

CMat simulate(const Circuit &c);

/// Peephole rewrite to fixpoint: merge same-axis rotations on a qubit
/// (commuting Z-rotations through CNOT controls and any rotation through
/// disjoint gates to reach a partner), drop rotations that are 0 mod 2pi,
/// and cancel identical CNOT pairs separated only by gates the CNOT
/// commutes with. Every rule is an exact matrix identity; merged angles are
/// normalized into (-pi, pi].
Circuit optimize(const Circuit &c, double eps = 1e-12);

GateCounts counts(const Circuit &c);

/// Line-oriented text format: `qubits <n>` then one gate per line
/// (`cnot <control> <target>` | `ry <qubit> <angle>` | `rz <qubit> <angle>`),
/// '#' starts a comment. Angles are decimal radians, qubits 1-based.
std::string export_text(const Circuit &c);
Circuit import_text(const std::string &text);

/// OpenQASM 2.0. QASM rotations use half angles, so every angle doubles on
/// the way out; qubit k maps to q[k-1].
std::string export_qasm(const Circuit &c);

std::string export_json(const Circuit &c);

} // namespace qortho

#endif
