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

#ifndef QORTHO_MATRIX_IO_HPP
#define QORTHO_MATRIX_IO_HPP

#include <string>

#include "qortho/matrix.hpp"

namespace qortho {

/// Matrix files come in two variants, sniffed by the first character:
///  - JSON: {"dim": n, "rows": [[...], ...]} with entries either reals or
///    [re, im] pairs;
///  - plain: the dimension followed by dim*dim whitespace-separated reals,
///    '#' to end of line is a comment.
CMat read_matrix_text(const std::string &text);
CMat read_matrix_file(const std::string &path);

std::string write_matrix_plain(const CMat &m);
std::string write_matrix_json(const CMat &m);

/// Orthogonality gate applied to parsed synthesis inputs: real entries and
/// row orthonormality within tol, with the worst deviation reported in the
/// error message.
void require_orthogonal_input(const CMat &m, double tol);

} // namespace qortho

#endif
