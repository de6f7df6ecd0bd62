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

// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qortho/circuit.hpp"
#include "qortho/identities.hpp"
#include "qortho/kak.hpp"
#include "qortho/matrix_io.hpp"
#include "qortho/random.hpp"
#include "qortho/synth_three_qubit.hpp"
#include "qortho/synth_two_qubit.hpp"
#include "qortho/tool.hpp"
#include "support/oracles.hpp"

using namespace qortho;
using qortho::testing::random_circuit;
using qortho::testing::random_group_element;

namespace {

int failures = 0;

void report(int criterion, const std::string &label, bool pass, const std::string &detail) {
    std::printf("%s  criterion %d: %-34s %s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    if (!pass) {
        failures++;
    }
}

std::string fmt(const char *pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

// 1. 1000 Haar special orthogonal 4x4 gates: exact reconstruction < 1e-9,
//    counts <= (2, 6), and at least 99% land exactly on (2, 6).
void criterion1() {
    double max_err = 0.0;
    int exact = 0;
    bool bounds = true;
    const int n = 1000;
    for (int i = 0; i < n; i++) {
        const CMat x = haar_orthogonal(4, 100000 + static_cast<uint64_t>(i), 1);
        const Synth2Result r = synth_so4(x);
        max_err = std::max(max_err, r.reconstruction_error);
        bounds = bounds && r.gate_counts.cnot <= 2 && r.gate_counts.one_qubit <= 6;
        if (r.gate_counts.cnot == 2 && r.gate_counts.one_qubit == 6) {
            exact++;
        }
    }
    const bool pass = max_err < 1e-9 && bounds && exact >= n * 99 / 100;
    report(1, "two-qubit bound (2 cnot, 6 rot)", pass,
           fmt("max error %.2e, ", max_err) + std::to_string(exact) + "/1000 exact");
}

// 2. 500 determinant -1 orthogonal 4x4 gates: error < 1e-9, counts <= (3, 6).
void criterion2() {
    double max_err = 0.0;
    bool bounds = true;
    for (int i = 0; i < 500; i++) {
        const CMat x = haar_orthogonal(4, 200000 + static_cast<uint64_t>(i), -1);
        const Synth2Result r = synth_o4(x);
        max_err = std::max(max_err, r.reconstruction_error);
        bounds = bounds && r.gate_counts.cnot <= 3 && r.gate_counts.one_qubit <= 6;
    }
    report(2, "reflection bound (3 cnot, 6 rot)", max_err < 1e-9 && bounds,
           fmt("max error %.2e", max_err));
}

// 3. 200 Haar special orthogonal 8x8 gates: phase-aligned error < 1e-8,
//    global phase within 1e-8 of +/-1, counts <= (16, 36) after
//    optimization, raw assembly exactly (16 cnot, 40 rot), and the
//    optimizer removes exactly the four z-rotation merges.
void criterion3() {
    double max_err = 0.0, max_phase_dev = 0.0;
    bool raw_ok = true, opt_ok = true, merge_ok = true;
    for (int i = 0; i < 200; i++) {
        const CMat x = haar_orthogonal(8, 300000 + static_cast<uint64_t>(i), 1);
        const Synth3Result r = synth_so8(x);
        max_err = std::max(max_err, r.reconstruction_error);
        max_phase_dev = std::max(
            max_phase_dev, std::min(std::abs(r.global_phase - cdouble{1.0, 0.0}),
                                    std::abs(r.global_phase + cdouble{1.0, 0.0})));
        const GateCounts raw = counts(r.raw_circuit);
        raw_ok = raw_ok && raw.cnot == 16 && raw.one_qubit == 40;
        opt_ok = opt_ok && r.gate_counts.cnot <= 16 && r.gate_counts.one_qubit <= 36;
        merge_ok = merge_ok && r.gate_counts.one_qubit == 36 &&
                   r.gate_counts.by_axis.at('z') == 20;
    }
    const bool pass = max_err < 1e-8 && max_phase_dev < 1e-8 && raw_ok && opt_ok && merge_ok;
    report(3, "three-qubit bound (16 cnot, 36 rot)", pass,
           fmt("max error %.2e, ", max_err) + fmt("phase dev %.2e", max_phase_dev) +
               (raw_ok ? ", raw (16, 40)" : ", raw assembly off") +
               (merge_ok ? ", 4 merges" : ", merge count off"));
}

// 4. Fixed-block bookkeeping: magic block (1, 3); commuting block (6, 6);
//    z-pair block (4, 2); eight local triples carry 24 rotations before the
//    merges and 20 after.
void criterion4() {
    const GateCounts m = counts(emit_magic_circuit(false));
    const GateCounts a = counts(emit_a_circuit(0.1, 0.2, 0.3, 0.4));
    const GateCounts a1 = counts(emit_a1_circuit(0.1, 0.2));
    bool pass = m.cnot == 1 && m.one_qubit == 3;
    pass = pass && a.cnot == 6 && a.one_qubit == 6;
    pass = pass && a1.cnot == 4 && a1.one_qubit == 2;
    // Triple bookkeeping on a generic sample: the fixed blocks hold
    // 3+3+6+2+2 = 16 rotations, so the triples carry the rest.
    const Synth3Result r = synth_so8(haar_orthogonal(8, 444444, 1));
    const int raw_triples = counts(r.raw_circuit).one_qubit - 16;
    const int opt_triples = counts(r.circuit).one_qubit - 16;
    pass = pass && raw_triples == 24 && opt_triples == 20;
    report(4, "component bookkeeping", pass,
           "blocks (1,3)/(6,6)/(4,2), triples " + std::to_string(raw_triples) + "->" +
               std::to_string(opt_triples));
}

// 5 and 6. Circuit identities against the commuting exponential oracle and
// the algebraic property suite, via the built-in identity runner.
void criteria5and6() {
    const auto reports = run_identity_suite(false);
    auto find = [&](const std::string &name) {
        for (const auto &r : reports) {
            if (r.name == name) {
                return r.pass;
            }
        }
        return false;
    };
    const bool circuits = find("two-qubit entangling block template") &&
                          find("magic circuit matches magic matrix") &&
                          find("magic circuit phase") && find("single-axis core blocks") &&
                          find("combined core block") && find("core diagonal pattern") &&
                          find("full commuting block circuit") &&
                          find("z-pair block circuit") && find("conjugated core identity");
    report(5, "circuit identities at 1e-11", circuits,
           circuits ? "all templates match" : "template mismatch");
    const bool algebra = find("closure so4 split") && find("closure so8 split") &&
                         find("closure nested split") &&
                         find("product commutator expansion") &&
                         find("basis cardinalities and inclusions") &&
                         find("magic conjugation reality");
    report(6, "algebraic property suite", algebra,
           algebra ? "closures, cardinalities, reality" : "algebra failure");
}

// 7. KAK engine soundness: 500 forward-constructed K*A*K' inputs per
//    involution, reconstruction and structure residuals < 1e-9, plus
//    bit-determinism.
void criterion7() {
    struct SpecCase {
        const InvolutionSpec *inv;
        double scale;
        uint64_t seed;
    };
    const SpecCase cases[] = {
        {&InvolutionSpec::two_qubit(), 1.5, 71},
        {&InvolutionSpec::three_qubit_outer(), 0.8, 72},
        {&InvolutionSpec::three_qubit_inner(), 1.2, 73},
    };
    double worst = 0.0;
    bool pass = true;
    for (const auto &sc : cases) {
        RandomStream rng(sc.seed);
        for (int i = 0; i < 500; i++) {
            std::vector<double> coeffs;
            PauliSum s;
            for (const auto &el : sc.inv->a_basis().elements) {
                s.add(rng.uniform(-2.0, 2.0), el);
            }
            const CMat u = random_group_element(sc.inv->k_basis(), rng, sc.scale) *
                           exp_commuting_sum(s) *
                           random_group_element(sc.inv->k_basis(), rng, sc.scale);
            const KakResult r = kak_factor(u, *sc.inv);
            worst = std::max(worst, r.reconstruction_error);
            worst = std::max(worst, frobenius_distance(sc.inv->sigma() * r.k1 * sc.inv->sigma(),
                                                       r.k1));
            worst = std::max(worst, frobenius_distance(sc.inv->sigma() * r.k2 * sc.inv->sigma(),
                                                       r.k2));
            PauliSum fitted;
            for (int j = 0; j < sc.inv->a_basis().size(); j++) {
                fitted.add(r.params[static_cast<size_t>(j)],
                           sc.inv->a_basis().elements[static_cast<size_t>(j)]);
            }
            worst = std::max(worst, frobenius_distance(exp_commuting_sum(fitted), r.a));
            pass = pass && worst < 1e-9;
            if (!pass) {
                break;
            }
        }
    }
    // Determinism probe.
    {
        RandomStream rng(99);
        const auto &inv = InvolutionSpec::three_qubit_outer();
        PauliSum s;
        for (const auto &el : inv.a_basis().elements) {
            s.add(rng.uniform(-2.0, 2.0), el);
        }
        const CMat u = random_group_element(inv.k_basis(), rng, 0.8) * exp_commuting_sum(s) *
                       random_group_element(inv.k_basis(), rng, 0.8);
        const KakResult r1 = kak_factor(u, inv);
        const KakResult r2 = kak_factor(u, inv);
        for (int i = 0; i < 8 && pass; i++) {
            for (int j = 0; j < 8; j++) {
                pass = pass && r1.k1.at(i, j) == r2.k1.at(i, j) &&
                       r1.a.at(i, j) == r2.a.at(i, j) && r1.k2.at(i, j) == r2.k2.at(i, j);
            }
        }
        pass = pass && r1.params == r2.params;
    }
    report(7, "kak engine soundness (3 x 500)", pass && worst < 1e-9,
           fmt("worst residual %.2e", worst));
}

// 8. Tooling round trips: text export/import identity, synth-then-verify
//    over benchmark samples through the CLI layer, and a clean identity
//    self-check run.
void criterion8() {
    bool pass = true;
    RandomStream rng(81);
    for (int i = 0; i < 100; i++) {
        const Circuit c = random_circuit(3, 30, rng);
        pass = pass && import_text(export_text(c)) == c;
    }

    const auto dir = std::filesystem::temp_directory_path() / "qortho_acceptance";
    std::filesystem::create_directories(dir);
    int verified = 0;
    for (int qubits = 2; qubits <= 3; qubits++) {
        const int samples = qubits == 2 ? 25 : 10;
        for (int i = 0; i < samples; i++) {
            const auto mpath = dir / ("m" + std::to_string(qubits) + "_" + std::to_string(i));
            const auto cpath = dir / ("c" + std::to_string(qubits) + "_" + std::to_string(i));
            {
                std::ofstream f(mpath);
                f << write_matrix_plain(
                    haar_orthogonal(1 << qubits, 800000 + static_cast<uint64_t>(i), 1));
            }
            SynthOptions sopt;
            sopt.input_path = mpath.string();
            sopt.out_path = cpath.string();
            std::ostringstream out, err;
            pass = pass && cmd_synth(sopt, out, err) == EXIT_OK;
            VerifyOptions vopt;
            vopt.circuit_path = cpath.string();
            vopt.matrix_path = mpath.string();
            std::ostringstream vout, verr;
            pass = pass && cmd_verify(vopt, vout, verr) == EXIT_OK;
            verified++;
        }
    }
    // The bench loop re-imports every exported circuit and phase-checks it,
    // so a clean run covers verify over all of its samples.
    for (int qubits = 2; qubits <= 3; qubits++) {
        BenchOptions bopt;
        bopt.qubits = qubits;
        bopt.samples = qubits == 2 ? 1000 : 200;
        bopt.seed = 7;
        BenchReport rep;
        std::ostringstream bout, berr;
        pass = pass && cmd_bench(bopt, bout, berr, &rep) == EXIT_OK;
        pass = pass && rep.max_error < (qubits == 2 ? 1e-9 : 1e-8);
        pass = pass && rep.worst_case_counts.first <= (qubits == 2 ? 2 : 16);
        pass = pass && rep.worst_case_counts.second <= (qubits == 2 ? 6 : 36);
    }
    std::ostringstream checkout;
    pass = pass && cmd_check_paper(checkout) == EXIT_OK;
    report(8, "tooling round trips", pass,
           "100 text round trips, " + std::to_string(verified) + " synth+verify, bench, self-check");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criteria5and6();
    criterion7();
    criterion8();
    if (failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
