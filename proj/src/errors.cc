/*
 * Copyright 2026 The phicyclic Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "phicyclic/errors.hpp"

namespace phicyclic {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kReducible: return "Reducible";
    case Errc::kNotMonic: return "NotMonic";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kLeadingCoefficientNotUnit: return "LeadingCoefficientNotUnit";
    case Errc::kBothZero: return "BothZero";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kNotDivisor: return "NotDivisor";
    case Errc::kNotSeparable: return "NotSeparable";
    case Errc::kTrivialCode: return "TrivialCode";
    case Errc::kNotIrreducible: return "NotIrreducible";
    case Errc::kInternalMismatch: return "InternalMismatch";
    case Errc::kNotInvertibleModQ: return "NotInvertibleModQ";
    case Errc::kUndecidable: return "Undecidable";
    case Errc::kVerificationFailed: return "VerificationFailed";
    case Errc::kInvalidParams: return "Invalid";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kMaxRetriesExceeded: return "MaxRetriesExceeded";
    case Errc::kBadShape: return "BadShape";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::vector<std::string> details)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      details_(std::move(details)) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace phicyclic
