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

#include "qortho/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qortho {

namespace {

CMat read_matrix_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(Errc::ParseError, std::string("bad JSON matrix file: ") + e.what());
    }
    if (!doc.contains("dim") || !doc.contains("rows")) {
        throw Error(Errc::ParseError, "JSON matrix file needs 'dim' and 'rows'");
    }
    const int dim = doc["dim"].get<int>();
    if (dim < 1 || dim > 64) {
        throw Error(Errc::ParseError, "unreasonable matrix dimension");
    }
    const auto &rows = doc["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        throw Error(Errc::ParseError, "row count does not match dim");
    }
    CMat m(dim);
    for (int i = 0; i < dim; i++) {
        const auto &row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw Error(Errc::ParseError, "row " + std::to_string(i) + " has wrong length");
        }
        for (int j = 0; j < dim; j++) {
            const auto &e = row[static_cast<size_t>(j)];
            if (e.is_number()) {
                m.at(i, j) = e.get<double>();
            } else if (e.is_array() && e.size() == 2) {
                m.at(i, j) = cdouble{e[0].get<double>(), e[1].get<double>()};
            } else {
                throw Error(Errc::ParseError, "entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

CMat read_matrix_plain(const std::string &text) {
    std::istringstream in(text);
    std::string line, cleaned;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        cleaned += line + " ";
    }
    std::istringstream toks(cleaned);
    int dim = 0;
    if (!(toks >> dim) || dim < 1 || dim > 64) {
        throw Error(Errc::ParseError, "plain matrix file must start with its dimension");
    }
    CMat m(dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            double v = 0.0;
            if (!(toks >> v)) {
                throw Error(Errc::ParseError,
                            "expected " + std::to_string(dim * dim) + " entries");
            }
            m.at(i, j) = v;
        }
    }
    double extra = 0.0;
    if (toks >> extra) {
        throw Error(Errc::ParseError, "trailing entries after the matrix");
    }
    return m;
}

} // namespace

CMat read_matrix_text(const std::string &text) {
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        return c == '{' ? read_matrix_json(text) : read_matrix_plain(text);
    }
    throw Error(Errc::ParseError, "empty matrix file");
}

CMat read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_matrix_text(buf.str());
}

std::string write_matrix_plain(const CMat &m) {
    std::ostringstream out;
    out << m.dim() << "\n";
    char buf[64];
    for (int i = 0; i < m.dim(); i++) {
        for (int j = 0; j < m.dim(); j++) {
            std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j).real());
            out << buf << (j + 1 == m.dim() ? "\n" : " ");
        }
    }
    return out.str();
}

std::string write_matrix_json(const CMat &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); i++) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); j++) {
            const cdouble v = m.at(i, j);
            if (v.imag() == 0.0) {
                row.push_back(v.real());
            } else {
                row.push_back({v.real(), v.imag()});
            }
        }
        rows.push_back(row);
    }
    return nlohmann::json{{"dim", m.dim()}, {"rows", rows}}.dump(1) + "\n";
}

void require_orthogonal_input(const CMat &m, double tol) {
    if (!m.is_real(tol)) {
        throw Error(Errc::NotOrthogonal, "matrix has nonzero imaginary entries");
    }
    const CMat g = m * m.transpose();
    double worst = 0.0;
    for (int i = 0; i < m.dim(); i++) {
        for (int j = 0; j < m.dim(); j++) {
            const double want = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g.at(i, j).real() - want));
        }
    }
    if (worst > tol) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "rows are not orthonormal (max deviation %.3e)", worst);
        throw Error(Errc::NotOrthogonal, buf);
    }
}

} // namespace qortho
