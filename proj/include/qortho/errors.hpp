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

#ifndef QORTHO_ERRORS_HPP
#define QORTHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qortho {

enum class Errc {
    NotUnitary,
    NoConvergence,
    DimMismatch,
    NotHermitian,
    NonCommutingTerms,
    BadQubitIndex,
    ParseError,
    NotOrthogonal,
    WrongDeterminant,
    FactorizationResidual,
    NotInAbelianGroup,
    ProductRepairFailed,
    UnsupportedMode,
    InvalidArgument,
};

/// Library-wide exception. `code()` drives the CLI exit status:
/// input rejections map to 2, internal numerical failures to 3.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &message) : std::runtime_error(message), code_(code) {}
    Errc code() const { return code_; }

    /// True for errors caused by the caller's input rather than by the
    /// factorization machinery itself.
    bool is_input_rejection() const {
        switch (code_) {
            case Errc::ParseError:
            case Errc::NotOrthogonal:
            case Errc::WrongDeterminant:
            case Errc::DimMismatch:
            case Errc::BadQubitIndex:
            case Errc::UnsupportedMode:
            case Errc::InvalidArgument:
                return true;
            default:
                return false;
        }
    }

  private:
    Errc code_;
};

const char *errc_name(Errc code);

} // namespace qortho

#endif
