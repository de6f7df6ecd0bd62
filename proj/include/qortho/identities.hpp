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

#ifndef QORTHO_IDENTITIES_HPP
#define QORTHO_IDENTITIES_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qortho {

struct IdentityReport {
    std::string name;
    double residual = 0.0;
    double limit = 0.0;
    bool pass = false;
};

/// The built-in algebra/circuit identity suite behind `check-paper`: basis
/// structure, commutation closures, the commutator product expansion,
/// magic-conjugation reality, and every fixed circuit template against its
/// commuting exponential. Fixed internal seeds make the output byte-stable.
/// `flip_cnot_convention` deliberately transposes the CNOT in the two-qubit
/// block template as a negative control.
std::vector<IdentityReport> run_identity_suite(bool flip_cnot_convention = false);

/// Print one line per identity; returns true iff all pass.
bool print_identity_suite(std::ostream &out, bool flip_cnot_convention = false);

} // namespace qortho

#endif
