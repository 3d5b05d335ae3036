/*
   Copyright 2026 The linfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINFIELD_ERRORS_HPP
#define LINFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linfield {

/// Domain error codes. Every throwing precondition in the library maps to one
/// of these; the CLI reports the code name in its error payload.
enum class Errc {
    NotPrime,
    ReduciblePolynomial,
    DegreeZero,
    NotMonic,
    DivisionByZero,
    TowerMismatch,
    FieldTooLarge,
    NotADivisor,
    ScalarNotInBaseField,
    NotDickson,
    NotAPermutation,
    NotABasis,
    DivisionByZeroPoly,
    BothZero,
    WrongRank,
    NotSubfieldPoly,
    NotNormalBasis,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::NotMonic: return "NotMonic";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::TowerMismatch: return "TowerMismatch";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::ScalarNotInBaseField: return "ScalarNotInBaseField";
        case Errc::NotDickson: return "NotDickson";
        case Errc::NotAPermutation: return "NotAPermutation";
        case Errc::NotABasis: return "NotABasis";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::BothZero: return "BothZero";
        case Errc::WrongRank: return "WrongRank";
        case Errc::NotSubfieldPoly: return "NotSubfieldPoly";
        case Errc::NotNormalBasis: return "NotNormalBasis";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& msg) : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

   private:
    Errc code_;
};

}  // namespace linfield

#endif
