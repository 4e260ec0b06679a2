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

#ifndef PHICYCLIC_ERRORS_HPP_
#define PHICYCLIC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phicyclic {

enum class Errc {
  kNotPrime,
  kReducible,
  kNotMonic,
  kDivisionByZero,
  kFieldMismatch,
  kLeadingCoefficientNotUnit,
  kBothZero,
  kZeroPolynomial,
  kTooLarge,
  kInvalidArgument,
  kZeroConstantTerm,
  kDimensionMismatch,
  kNotDivisor,
  kNotSeparable,
  kTrivialCode,
  kNotIrreducible,
  kInternalMismatch,
  kNotInvertibleModQ,
  kUndecidable,
  kVerificationFailed,
  kInvalidParams,
  kInfeasible,
  kMaxRetriesExceeded,
  kBadShape,
  kParseError,
};

std::string_view errc_name(Errc code);

// Every failure in the library is reported through this type. `details`
// carries structured extra information, e.g. the list of violated
// parameter conditions or the failing verification clause.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::vector<std::string> details = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  Errc code_;
  std::vector<std::string> details_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace phicyclic

#endif  // PHICYCLIC_ERRORS_HPP_
