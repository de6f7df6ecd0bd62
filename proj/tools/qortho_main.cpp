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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qortho/tool.hpp"

int main(int argc, char **argv) {
    CLI::App app{"qortho: synthesis of two- and three-qubit orthogonal gates into CNOT + Ry/Rz circuits"};
    app.require_subcommand(1);

    qortho::RandomOptions random_opt;
    std::string random_det = "+1";
    auto *random_cmd = app.add_subcommand("random", "Generate a Haar-random orthogonal matrix");
    random_cmd->add_option("--qubits", random_opt.qubits, "Register size (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    random_cmd->add_option("--seed", random_opt.seed, "PRNG seed");
    random_cmd->add_option("--det", random_det, "Determinant sign (+1 or -1)")
        ->check(CLI::IsMember({"+1", "-1"}));
    random_cmd->add_option("--format", random_opt.format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}));
    random_cmd->add_option("--out", random_opt.out_path, "Output file (default stdout)");

    qortho::SynthOptions synth_opt;
    bool no_optimize = false;
    auto *synth_cmd = app.add_subcommand("synth", "Synthesize a circuit for an orthogonal matrix");
    synth_cmd->add_option("input", synth_opt.input_path, "Matrix file")->required();
    synth_cmd->add_option("--format", synth_opt.format, "Circuit output format")
        ->check(CLI::IsMember({"text", "qasm", "json"}));
    synth_cmd->add_flag("--no-optimize", no_optimize, "Skip the peephole optimizer");
    synth_cmd->add_option("--out", synth_opt.out_path, "Output file (default stdout)");
    synth_cmd->add_option("--threshold", synth_opt.threshold,
                          "Reconstruction error bound for exit status");

    qortho::VerifyOptions verify_opt;
    auto *verify_cmd = app.add_subcommand("verify", "Compare a circuit file against a matrix file");
    verify_cmd->add_option("circuit", verify_opt.circuit_path, "Circuit text file")->required();
    verify_cmd->add_option("matrix", verify_opt.matrix_path, "Matrix file")->required();
    verify_cmd->add_option("--threshold", verify_opt.threshold, "Pass/fail distance");

    qortho::BenchOptions bench_opt;
    std::string bench_det = "+1";
    auto *bench_cmd = app.add_subcommand("bench", "Random -> synth -> verify loop with statistics");
    bench_cmd->add_option("--qubits", bench_opt.qubits, "Register size (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    bench_cmd->add_option("--samples", bench_opt.samples, "Sample count")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_opt.seed, "Base PRNG seed");
    bench_cmd->add_option("--det", bench_det, "Determinant sign (+1 or -1)")
        ->check(CLI::IsMember({"+1", "-1"}));
    bench_cmd->add_option("--csv", bench_opt.csv_path, "Write the count histogram as CSV");

    bool flip_cnot = false;
    auto *check_cmd = app.add_subcommand("check-paper", "Run the built-in identity self-checks");
    check_cmd->add_flag("--debug-flip-cnot", flip_cnot,
                        "Transpose the CNOT convention in the two-qubit template (negative control)");

    CLI11_PARSE(app, argc, argv);

    if (random_cmd->parsed()) {
        random_opt.det_sign = random_det == "-1" ? -1 : 1;
        return qortho::cmd_random(random_opt, std::cout, std::cerr);
    }
    if (synth_cmd->parsed()) {
        synth_opt.optimize = !no_optimize;
        return qortho::cmd_synth(synth_opt, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) {
        return qortho::cmd_verify(verify_opt, std::cout, std::cerr);
    }
    if (bench_cmd->parsed()) {
        bench_opt.det_sign = bench_det == "-1" ? -1 : 1;
        return qortho::cmd_bench(bench_opt, std::cout, std::cerr);
    }
    if (check_cmd->parsed()) {
        return qortho::cmd_check_paper(std::cout, flip_cnot);
    }
    return 0;
}
