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

#include "qortho/tool.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qortho/circuit.hpp"
#include "qortho/identities.hpp"
#include "qortho/matrix_io.hpp"
#include "qortho/random.hpp"
#include "qortho/synth_three_qubit.hpp"
#include "qortho/synth_two_qubit.hpp"

namespace qortho {

namespace {

int exit_code_for(const Error &e) {
    return e.is_input_rejection() ? EXIT_INPUT_REJECTED : EXIT_INTERNAL_FAILURE;
}

void write_output(const std::optional<std::string> &path, const std::string &content,
                  std::ostream &out) {
    if (path) {
        std::ofstream f(*path);
        if (!f) {
            throw Error(Errc::ParseError, "cannot write '" + *path + "'");
        }
        f << content;
    } else {
        out << content;
    }
}

struct SynthOutcome {
    Circuit circuit;
    double error = 0.0;
    cdouble phase{1.0, 0.0};
    GateCounts gate_counts;
};

SynthOutcome run_synthesis(const CMat &m, bool run_optimizer) {
    SynthOutcome r;
    if (m.dim() == 4) {
        Synth2Result s = dispatch_2q(m, run_optimizer);
        r.circuit = s.circuit;
        r.error = s.reconstruction_error;
        r.gate_counts = s.gate_counts;
    } else if (m.dim() == 8) {
        Synth3Result s = synth_so8(m, run_optimizer);
        r.circuit = s.circuit;
        r.error = s.reconstruction_error;
        r.phase = s.global_phase;
        r.gate_counts = s.gate_counts;
    } else {
        throw Error(Errc::DimMismatch, "synthesis expects a 4x4 or 8x8 matrix");
    }
    return r;
}

} // namespace

int cmd_random(const RandomOptions &opt, std::ostream &out, std::ostream &err) {
    try {
        if (opt.qubits != 2 && opt.qubits != 3) {
            throw Error(Errc::UnsupportedMode, "random supports 2 or 3 qubits");
        }
        if (opt.qubits == 3 && opt.det_sign == -1) {
            throw Error(Errc::UnsupportedMode,
                        "three-qubit synthesis is unimodular only; det -1 is not generated");
        }
        const CMat m = haar_orthogonal(1 << opt.qubits, opt.seed, opt.det_sign);
        const std::string text =
            opt.format == "json" ? write_matrix_json(m) : write_matrix_plain(m);
        write_output(opt.out_path, text, out);
        return EXIT_OK;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_synth(const SynthOptions &opt, std::ostream &out, std::ostream &err) {
    try {
        const CMat m = read_matrix_file(opt.input_path);
        require_orthogonal_input(m, NumericContext{}.orthogonal_tol);
        const SynthOutcome r = run_synthesis(m, opt.optimize);

        std::string body;
        if (opt.format == "qasm") {
            body = export_qasm(r.circuit);
        } else if (opt.format == "json") {
            body = export_json(r.circuit);
        } else {
            body = export_text(r.circuit);
        }
        write_output(opt.out_path, body, out);

        char buf[192];
        std::snprintf(buf, sizeof buf,
                      "# synth: cnot %d, one-qubit %d, error %.3e, phase %+.6f%+.6fi\n",
                      r.gate_counts.cnot, r.gate_counts.one_qubit, r.error, r.phase.real(),
                      r.phase.imag());
        err << buf;
        return r.error <= opt.threshold ? EXIT_OK : EXIT_VERIFY_FAILED;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err) {
    try {
        std::ifstream in(opt.circuit_path);
        if (!in) {
            throw Error(Errc::ParseError, "cannot open '" + opt.circuit_path + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const Circuit c = import_text(buf.str());
        const CMat m = read_matrix_file(opt.matrix_path);
        if ((1 << c.n) != m.dim()) {
            throw Error(Errc::DimMismatch, "circuit width does not match matrix dimension");
        }
        const CMat sim = simulate(c);
        const double plain = frobenius_distance(sim, m);
        const PhaseDistance pd = phase_distance(sim, m);
        char line[192];
        std::snprintf(line, sizeof line,
                      "frobenius distance  %.6e\nphase-aligned       %.6e\naligning phase      "
                      "%+.9f%+.9fi\n",
                      plain, pd.distance, pd.phase.real(), pd.phase.imag());
        out << line;
        const bool pass = pd.distance <= opt.threshold;
        out << (pass ? "pass" : "fail") << " (threshold " << opt.threshold << ")\n";
        return pass ? EXIT_OK : EXIT_VERIFY_FAILED;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_bench(const BenchOptions &opt, std::ostream &out, std::ostream &err,
              BenchReport *report_out) {
    try {
        if (opt.samples < 1) {
            throw Error(Errc::InvalidArgument, "bench needs at least one sample");
        }
        if (opt.qubits != 2 && opt.qubits != 3) {
            throw Error(Errc::UnsupportedMode, "bench supports 2 or 3 qubits");
        }
        if (opt.qubits == 3 && opt.det_sign == -1) {
            throw Error(Errc::UnsupportedMode, "three-qubit det -1 is not supported");
        }
        BenchReport rep;
        rep.samples = opt.samples;
        rep.seed = opt.seed;
        const auto t0 = std::chrono::steady_clock::now();
        double err_sum = 0.0;
        for (int i = 0; i < opt.samples; i++) {
            const uint64_t sample_seed = opt.seed + static_cast<uint64_t>(i);
            try {
                const CMat m = haar_orthogonal(1 << opt.qubits, sample_seed, opt.det_sign);
                const SynthOutcome r = run_synthesis(m, true);
                // Independent check through the text round trip, the same
                // path `verify` uses.
                const Circuit reloaded = import_text(export_text(r.circuit));
                const double check = phase_distance(simulate(reloaded), m).distance;
                err_sum += check;
                rep.max_error = std::max(rep.max_error, check);
                const auto key = std::make_pair(r.gate_counts.cnot, r.gate_counts.one_qubit);
                rep.count_histogram[key]++;
                rep.worst_case_counts.first = std::max(rep.worst_case_counts.first, key.first);
                rep.worst_case_counts.second =
                    std::max(rep.worst_case_counts.second, key.second);
            } catch (const Error &e) {
                err << "sample with seed offset " << i << " (seed " << sample_seed
                    << ") failed: " << e.what() << "\n";
                throw;
            }
        }
        rep.mean_error = err_sum / opt.samples;
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        char buf[160];
        out << "samples " << rep.samples << ", base seed " << rep.seed << "\n";
        std::snprintf(buf, sizeof buf, "max error  %.6e\nmean error %.6e\n", rep.max_error,
                      rep.mean_error);
        out << buf;
        out << "counts (cnot, one-qubit) -> frequency\n";
        for (const auto &[key, freq] : rep.count_histogram) {
            std::snprintf(buf, sizeof buf, "  (%2d, %2d) -> %d\n", key.first, key.second, freq);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "worst-case counts (%d, %d)\nelapsed %.3f s\n",
                      rep.worst_case_counts.first, rep.worst_case_counts.second,
                      rep.elapsed_seconds);
        out << buf;

        if (opt.csv_path) {
            std::ofstream csv(*opt.csv_path);
            if (!csv) {
                throw Error(Errc::ParseError, "cannot write '" + *opt.csv_path + "'");
            }
            csv << "cnot,one_qubit,frequency\n";
            for (const auto &[key, freq] : rep.count_histogram) {
                csv << key.first << "," << key.second << "," << freq << "\n";
            }
        }
        if (report_out) {
            *report_out = rep;
        }
        return EXIT_OK;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_check_paper(std::ostream &out, bool flip_cnot_convention) {
    return print_identity_suite(out, flip_cnot_convention) ? EXIT_OK : EXIT_VERIFY_FAILED;
}

} // namespace qortho
