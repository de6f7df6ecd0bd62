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

#include "qortho/identities.hpp"

#include <cmath>
#include <cstdio>

#include "qortho/circuit.hpp"
#include "qortho/pauli.hpp"
#include "qortho/random.hpp"
#include "qortho/synth_three_qubit.hpp"

namespace qortho {

namespace {

PauliSum sum3(double a, const char *pa, double b, const char *pb, double c, const char *pc) {
    PauliSum s;
    s.add(a, PauliString::parse(pa));
    s.add(b, PauliString::parse(pb));
    s.add(c, PauliString::parse(pc));
    return s;
}

void push(std::vector<IdentityReport> &out, const std::string &name, double residual,
          double limit) {
    out.push_back({name, residual, limit, residual < limit});
}

} // namespace

std::vector<IdentityReport> run_identity_suite(bool flip_cnot_convention) {
    std::vector<IdentityReport> out;
    RandomStream rng(0x51D2C3B4A5968778ULL);

    // Commutation closure of the three decomposition splits.
    {
        const auto &k4 = so4_k_basis(), &p4 = so4_p_basis();
        double r = closure_check(k4, k4, k4);
        r = std::max(r, closure_check(k4, p4, p4));
        r = std::max(r, closure_check(p4, p4, k4));
        push(out, "closure so4 split", r, 1e-12);
    }
    {
        const auto &k8 = so8_k_basis(), &p8 = so8_p_basis();
        double r = closure_check(k8, k8, k8);
        r = std::max(r, closure_check(k8, p8, p8));
        r = std::max(r, closure_check(p8, p8, k8));
        push(out, "closure so8 split", r, 1e-12);
    }
    {
        const auto &k1 = so8_nested_k_basis(), &p1 = so8_nested_p_basis();
        double r = closure_check(k1, k1, k1);
        r = std::max(r, closure_check(k1, p1, p1));
        r = std::max(r, closure_check(p1, p1, k1));
        push(out, "closure nested split", r, 1e-12);
    }

    // Product commutator expansion on random single-qubit 4-tuples.
    {
        double worst = 0.0;
        for (int i = 0; i < 50; i++) {
            const auto pick = [&rng] { return static_cast<PauliOp>(rng.below(4)); };
            worst = std::max(worst, commutator_identity_check(pick(), pick(), pick(), pick()));
        }
        push(out, "product commutator expansion", worst, 1e-13);
    }

    // Cardinalities and set relations.
    {
        bool ok = so4_k_basis().size() == 2 && so4_p_basis().size() == 4 &&
                  so4_a_basis().size() == 2 && so8_k_basis().size() == 12 &&
                  so8_p_basis().size() == 16 && so8_a_basis().size() == 4 &&
                  so8_nested_k_basis().size() == 6 && so8_nested_p_basis().size() == 6 &&
                  so8_nested_a_basis().size() == 2 && magic_so8_generators().size() == 28;
        for (const auto &e : so8_a_basis().elements) {
            ok = ok && so8_p_basis().contains(e);
        }
        for (const auto &e : so8_nested_a_basis().elements) {
            ok = ok && so8_nested_p_basis().contains(e);
        }
        { // the 28 generators split exactly into the k and p sets
            CartanBasis merged;
            merged.name = "merged";
            merged.elements = so8_k_basis().elements;
            merged.elements.insert(merged.elements.end(), so8_p_basis().elements.begin(),
                                   so8_p_basis().elements.end());
            ok = ok && merged.same_set(magic_so8_generators());
        }
        push(out, "basis cardinalities and inclusions", ok ? 0.0 : 1.0, 0.5);
    }

    // Magic conjugation maps each generator to a real antisymmetric matrix.
    {
        double worst = 0.0;
        for (const auto &e : magic_so8_generators().elements) {
            const CMat g = magic_conjugate(to_matrix(e) * cdouble{0.0, 1.0});
            worst = std::max(worst, g.max_abs_imag());
            worst = std::max(worst, (g + g.transpose()).max_abs());
        }
        push(out, "magic conjugation reality", worst, 1e-12);
    }

    // Two-qubit entangling block template against its exponential.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; i++) {
            const double a = rng.uniform(-PI, PI), b = rng.uniform(-PI, PI);
            Circuit c(2);
            if (flip_cnot_convention) {
                c.append(Gate::cnot(1, 2));
                c.append(Gate::ry(2, a)).append(Gate::ry(1, b));
                c.append(Gate::cnot(1, 2));
            } else {
                c.append(Gate::cnot(2, 1));
                c.append(Gate::ry(2, a)).append(Gate::ry(1, b));
                c.append(Gate::cnot(2, 1));
            }
            PauliSum s;
            s.add(a, PauliString::parse("XY"));
            s.add(b, PauliString::parse("YZ"));
            worst = std::max(worst, frobenius_distance(simulate(c), exp_commuting_sum(s)));
        }
        push(out, "two-qubit entangling block template", worst, 1e-11);
    }

    // Magic circuit vs the fixed magic matrix (global phase recorded).
    {
        const PhaseDistance pd = phase_distance(simulate(emit_magic_circuit(false)), magic());
        const double phase_dev = std::abs(pd.phase - cdouble{1.0, 0.0});
        push(out, "magic circuit matches magic matrix", pd.distance, 1e-12);
        push(out, "magic circuit phase", phase_dev, 1e-12);
    }

    // Single-axis core blocks.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; i++) {
            const double a = rng.uniform(-PI, PI);
            Circuit c1(3);
            c1.append(Gate::cnot(2, 3)).append(Gate::ry(3, a)).append(Gate::cnot(2, 3));
            PauliSum s1;
            s1.add(a, PauliString::parse("IZY"));
            worst = std::max(worst, frobenius_distance(simulate(c1), exp_commuting_sum(s1)));

            const double b = rng.uniform(-PI, PI);
            Circuit c2(3);
            c2.append(Gate::cnot(1, 3)).append(Gate::cnot(2, 3)).append(Gate::ry(3, -b));
            c2.append(Gate::cnot(2, 3)).append(Gate::cnot(1, 3));
            PauliSum s2;
            s2.add(-b, PauliString::parse("ZZY"));
            worst = std::max(worst, frobenius_distance(simulate(c2), exp_commuting_sum(s2)));

            const double cc = rng.uniform(-PI, PI);
            Circuit c3(3);
            c3.append(Gate::cnot(1, 3)).append(Gate::ry(3, cc)).append(Gate::cnot(1, 3));
            PauliSum s3;
            s3.add(cc, PauliString::parse("ZIY"));
            worst = std::max(worst, frobenius_distance(simulate(c3), exp_commuting_sum(s3)));
        }
        push(out, "single-axis core blocks", worst, 1e-11);
    }

    // Combined core block and its diagonal pattern.
    {
        double worst = 0.0, pattern_worst = 0.0;
        for (int i = 0; i < 100; i++) {
            const double a = rng.uniform(-PI, PI), b = rng.uniform(-PI, PI),
                         c = rng.uniform(-PI, PI);
            const CMat sim = simulate(emit_a_tilde_circuit(a, b, c));
            const CMat want = exp_commuting_sum(sum3(a, "IZY", -b, "ZZY", c, "ZIY"));
            worst = std::max(worst, frobenius_distance(sim, want));
            // Diagonal 2x2 blocks on qubit 3 rotate by a-b+c, b-a+c, a+b-c,
            // -a-b-c respectively.
            const double angles[4] = {a - b + c, b - a + c, a + b - c, -a - b - c};
            for (int blk = 0; blk < 4; blk++) {
                const CMat r = rot_y_2(angles[blk]);
                for (int r0 = 0; r0 < 2; r0++) {
                    for (int c0 = 0; c0 < 2; c0++) {
                        pattern_worst = std::max(
                            pattern_worst,
                            std::abs(sim.at(2 * blk + r0, 2 * blk + c0) - r.at(r0, c0)));
                    }
                }
            }
        }
        push(out, "combined core block", worst, 1e-11);
        push(out, "core diagonal pattern", pattern_worst, 1e-11);
    }

    // Full commuting block circuit.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; i++) {
            const double a = rng.uniform(-PI, PI), b = rng.uniform(-PI, PI),
                         c = rng.uniform(-PI, PI), dd = rng.uniform(-PI, PI);
            PauliSum s;
            s.add(a, PauliString::parse("XXY"));
            s.add(b, PauliString::parse("YYY"));
            s.add(c, PauliString::parse("ZZY"));
            s.add(dd, PauliString::parse("IIY"));
            worst = std::max(worst, frobenius_distance(simulate(emit_a_circuit(a, b, c, dd)),
                                                       exp_commuting_sum(s)));
        }
        push(out, "full commuting block circuit", worst, 1e-11);
    }

    // Z-pair block circuit.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; i++) {
            const double alpha = rng.uniform(-PI, PI), beta = rng.uniform(-PI, PI);
            PauliSum s;
            s.add(alpha, PauliString::parse("IZZ"));
            s.add(beta, PauliString::parse("ZIZ"));
            worst = std::max(worst, frobenius_distance(simulate(emit_a1_circuit(alpha, beta)),
                                                       exp_commuting_sum(s)));
        }
        push(out, "z-pair block circuit", worst, 1e-11);
    }

    // Conjugated-core identity: magic * core(a,b,c) * magic† * Ry3(d)
    // equals the full commuting block.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; i++) {
            const double a = rng.uniform(-PI, PI), b = rng.uniform(-PI, PI),
                         c = rng.uniform(-PI, PI), dd = rng.uniform(-PI, PI);
            Circuit chain(3);
            chain.append(Gate::ry(3, dd));
            chain.append(emit_magic_circuit(true));
            chain.append(emit_a_tilde_circuit(a, b, c));
            chain.append(emit_magic_circuit(false));
            PauliSum s;
            s.add(a, PauliString::parse("XXY"));
            s.add(b, PauliString::parse("YYY"));
            s.add(c, PauliString::parse("ZZY"));
            s.add(dd, PauliString::parse("IIY"));
            worst = std::max(worst,
                             frobenius_distance(simulate(chain), exp_commuting_sum(s)));
        }
        push(out, "conjugated core identity", worst, 1e-11);
    }

    return out;
}

bool print_identity_suite(std::ostream &out, bool flip_cnot_convention) {
    const auto reports = run_identity_suite(flip_cnot_convention);
    bool all = true;
    char buf[160];
    for (const auto &r : reports) {
        std::snprintf(buf, sizeof buf, "%-40s %s  residual %.3e (limit %.0e)", r.name.c_str(),
                      r.pass ? "pass" : "FAIL", r.residual, r.limit);
        out << buf << "\n";
        all = all && r.pass;
    }
    out << (all ? "all identities pass\n" : "identity failures present\n");
    return all;
}

} // namespace qortho
