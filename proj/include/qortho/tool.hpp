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

#ifndef QORTHO_TOOL_HPP
#define QORTHO_TOOL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "qortho/matrix.hpp"

namespace qortho {

// Exit statuses shared by every command.
inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_VERIFY_FAILED = 1;
inline constexpr int EXIT_INPUT_REJECTED = 2;
inline constexpr int EXIT_INTERNAL_FAILURE = 3;

struct RandomOptions {
    int qubits = 2;
    uint64_t seed = 0;
    int det_sign = 1;
    std::string format = "plain"; // plain | json
    std::optional<std::string> out_path;
};

struct SynthOptions {
    std::string input_path;
    std::string format = "text"; // text | qasm | json
    bool optimize = true;
    std::optional<std::string> out_path;
    double threshold = 1e-8;
};

struct VerifyOptions {
    std::string circuit_path;
    std::string matrix_path;
    double threshold = 1e-8;
};

struct BenchOptions {
    int qubits = 2;
    int samples = 100;
    uint64_t seed = 0;
    int det_sign = 1;
    std::optional<std::string> csv_path;
};

struct BenchReport {
    int samples = 0;
    uint64_t seed = 0;
    double max_error = 0.0;
    double mean_error = 0.0;
    std::map<std::pair<int, int>, int> count_histogram; // (cnot, one_qubit) -> n
    std::pair<int, int> worst_case_counts{0, 0};
    double elapsed_seconds = 0.0;
};

int cmd_random(const RandomOptions &opt, std::ostream &out, std::ostream &err);
int cmd_synth(const SynthOptions &opt, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err);
int cmd_bench(const BenchOptions &opt, std::ostream &out, std::ostream &err,
              BenchReport *report_out = nullptr);
int cmd_check_paper(std::ostream &out, bool flip_cnot_convention = false);

} // namespace qortho

#endif
