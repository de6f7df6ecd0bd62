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

#include "qortho/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qortho {

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw Error(Errc::BadQubitIndex, "cnot control equals target");
    }
    Gate g;
    g.kind = Kind::Cnot;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::ry(int qubit, double angle) {
    Gate g;
    g.kind = Kind::Rot;
    g.axis = Axis::Y;
    g.qubit = qubit;
    g.angle = angle;
    return g;
}

Gate Gate::rz(int qubit, double angle) {
    Gate g;
    g.kind = Kind::Rot;
    g.axis = Axis::Z;
    g.qubit = qubit;
    g.angle = angle;
    return g;
}

bool Gate::operator==(const Gate &o) const {
    if (kind != o.kind) {
        return false;
    }
    if (kind == Kind::Cnot) {
        return control == o.control && target == o.target;
    }
    return axis == o.axis && qubit == o.qubit && angle == o.angle;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n != n) {
        throw Error(Errc::DimMismatch, "appending circuit of different width");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

namespace {

void check_qubit(int q, int n) {
    if (q < 1 || q > n) {
        throw Error(Errc::BadQubitIndex,
                    "qubit " + std::to_string(q) + " outside register of " + std::to_string(n));
    }
}

// Bit position of qubit q (1-based, qubit 1 = most significant).
int bit_of(int qubit, int n) {
    return n - qubit;
}

CMat gate_matrix(const Gate &g, int n) {
    const int dim = 1 << n;
    if (g.kind == Gate::Kind::Cnot) {
        check_qubit(g.control, n);
        check_qubit(g.target, n);
        CMat m(dim);
        const int cb = bit_of(g.control, n), tb = bit_of(g.target, n);
        for (int b = 0; b < dim; b++) {
            const int out = (b >> cb) & 1 ? b ^ (1 << tb) : b;
            m.at(out, b) = 1.0;
        }
        return m;
    }
    check_qubit(g.qubit, n);
    const CMat r = g.axis == Axis::Y ? rot_y_2(g.angle) : rot_z_2(g.angle);
    CMat m = g.qubit == 1 ? r : CMat::identity(2);
    for (int q = 2; q <= n; q++) {
        m = kron(m, q == g.qubit ? r : CMat::identity(2));
    }
    return m;
}

} // namespace

CMat simulate(const Circuit &c) {
    CMat u = CMat::identity(1 << c.n);
    for (const Gate &g : c.gates) {
        u = gate_matrix(g, c.n) * u;
    }
    return u;
}

namespace {

bool touches(const Gate &g, int qubit) {
    if (g.kind == Gate::Kind::Cnot) {
        return g.control == qubit || g.target == qubit;
    }
    return g.qubit == qubit;
}

// Whether rotation `rot` commutes with gate `g` for the purpose of sliding
// it rightward: disjoint gates always commute; a Z-rotation additionally
// commutes with a CNOT controlled on its qubit.
bool rotation_passes(const Gate &rot, const Gate &g) {
    if (!touches(g, rot.qubit)) {
        return true;
    }
    if (rot.axis == Axis::Z && g.kind == Gate::Kind::Cnot && g.control == rot.qubit) {
        return true;
    }
    return false;
}

// Whether a CNOT slides past `g`: CNOTs commute when neither one's control
// is the other's target; a Z-rotation on the control commutes, and disjoint
// gates always do.
bool cnot_passes(const Gate &cn, const Gate &g) {
    if (g.kind == Gate::Kind::Cnot) {
        return cn.target != g.control && cn.control != g.target;
    }
    if (!touches(g, cn.control) && !touches(g, cn.target)) {
        return true;
    }
    return g.axis == Axis::Z && g.qubit == cn.control;
}

} // namespace

Circuit optimize(const Circuit &c, double eps) {
    Circuit out = c;
    bool changed = true;
    while (changed) {
        changed = false;
        auto &gs = out.gates;

        // Drop rotations that are 0 mod 2pi.
        for (size_t i = 0; i < gs.size();) {
            if (gs[i].kind == Gate::Kind::Rot && std::abs(wrap_angle(gs[i].angle)) <= eps) {
                gs.erase(gs.begin() + static_cast<long>(i));
                changed = true;
            } else {
                i++;
            }
        }

        // Cancel identical CNOT pairs, sliding the earlier one rightward
        // past commuting gates to reach its partner.
        for (size_t i = 0; i < gs.size() && !changed; i++) {
            if (gs[i].kind != Gate::Kind::Cnot) {
                continue;
            }
            for (size_t j = i + 1; j < gs.size(); j++) {
                if (gs[j].kind == Gate::Kind::Cnot && gs[i] == gs[j]) {
                    gs.erase(gs.begin() + static_cast<long>(j));
                    gs.erase(gs.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                if (!cnot_passes(gs[i], gs[j])) {
                    break;
                }
            }
        }

        // Merge same-axis rotations on the same qubit, commuting the earlier
        // one rightward past compatible gates to reach its partner.
        for (size_t i = 0; i < gs.size() && !changed; i++) {
            if (gs[i].kind != Gate::Kind::Rot) {
                continue;
            }
            for (size_t j = i + 1; j < gs.size(); j++) {
                if (gs[j].kind == Gate::Kind::Rot && gs[j].qubit == gs[i].qubit) {
                    if (gs[j].axis == gs[i].axis) {
                        gs[j].angle = wrap_angle(gs[j].angle + gs[i].angle);
                        gs.erase(gs.begin() + static_cast<long>(i));
                        changed = true;
                    }
                    break;
                }
                if (!rotation_passes(gs[i], gs[j])) {
                    break;
                }
            }
        }
    }
    return out;
}

GateCounts counts(const Circuit &c) {
    GateCounts gc;
    for (const Gate &g : c.gates) {
        if (g.kind == Gate::Kind::Cnot) {
            gc.cnot++;
        } else {
            gc.one_qubit++;
            gc.by_axis[static_cast<char>(g.axis)]++;
        }
    }
    return gc;
}

namespace {

std::string format_angle(double a) {
    char buf[64];
    if (a == std::floor(a) && std::abs(a) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.1f", a);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", a);
    }
    return buf;
}

} // namespace

std::string export_text(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.n << "\n";
    for (const Gate &g : c.gates) {
        if (g.kind == Gate::Kind::Cnot) {
            out << "cnot " << g.control << " " << g.target << "\n";
        } else {
            out << (g.axis == Axis::Y ? "ry " : "rz ") << g.qubit << " " << format_angle(g.angle)
                << "\n";
        }
    }
    return out.str();
}

Circuit import_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Circuit c;
    auto fail = [&](const std::string &msg) -> void {
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        lineno++;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        if (!have_header) {
            if (word != "qubits") {
                fail("expected 'qubits <n>' header");
            }
            if (!(ls >> c.n) || c.n < 1) {
                fail("bad qubit count");
            }
            have_header = true;
            continue;
        }
        if (word == "cnot") {
            int control = 0, target = 0;
            if (!(ls >> control >> target)) {
                fail("cnot needs control and target");
            }
            if (control < 1 || control > c.n || target < 1 || target > c.n || control == target) {
                fail("cnot qubits out of range");
            }
            c.append(Gate::cnot(control, target));
        } else if (word == "ry" || word == "rz") {
            int qubit = 0;
            double angle = 0.0;
            if (!(ls >> qubit >> angle)) {
                fail(word + " needs qubit and angle");
            }
            if (qubit < 1 || qubit > c.n) {
                fail("rotation qubit out of range");
            }
            c.append(word == "ry" ? Gate::ry(qubit, angle) : Gate::rz(qubit, angle));
        } else {
            fail("unknown gate '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) {
            fail("trailing tokens");
        }
    }
    if (!have_header) {
        lineno = 1;
        fail("missing 'qubits <n>' header");
    }
    return c;
}

std::string export_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.n << "];\n";
    for (const Gate &g : c.gates) {
        if (g.kind == Gate::Kind::Cnot) {
            out << "cx q[" << g.control - 1 << "],q[" << g.target - 1 << "];\n";
        } else {
            out << (g.axis == Axis::Y ? "ry(" : "rz(") << format_angle(2.0 * g.angle) << ") q["
                << g.qubit - 1 << "];\n";
        }
    }
    return out.str();
}

std::string export_json(const Circuit &c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate &g : c.gates) {
        if (g.kind == Gate::Kind::Cnot) {
            gates.push_back({{"type", "cnot"}, {"control", g.control}, {"target", g.target}});
        } else {
            gates.push_back({{"type", g.axis == Axis::Y ? "ry" : "rz"},
                             {"qubit", g.qubit},
                             {"angle", g.angle}});
        }
    }
    nlohmann::json doc{{"qubits", c.n}, {"gates", gates}};
    return doc.dump(2) + "\n";
}

} // namespace qortho
