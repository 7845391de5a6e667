// Copyright 2026 The spdlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPDLAB_ERROR_H_
#define SPDLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spdlab {

enum class ErrorCode {
  kNotPrime,
  kNotPrimePower,
  kSearchOverflow,
  kDivisionByZero,
  kFieldMismatch,
  kArityMismatch,
  kZeroPolynomial,
  kExpansionTooLarge,
  kInfeasibleTarget,
  kNoGoodIndex,
  kFieldTooSmall,
  kMatrixTooLarge,
  kRangeViolation,
  kTooManyMonomials,
  kBlockTooSmall,
  kLengthExceedsField,
  kParseError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this one exception type; the
// code is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // Resource caps are distinguished from bad input by the CLI.
  bool is_resource_cap() const {
    return code_ == ErrorCode::kSearchOverflow || code_ == ErrorCode::kExpansionTooLarge ||
           code_ == ErrorCode::kMatrixTooLarge || code_ == ErrorCode::kTooManyMonomials;
  }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kSearchOverflow: return "SearchOverflow";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorCode::kInfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::kNoGoodIndex: return "NoGoodIndex";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kMatrixTooLarge: return "MatrixTooLarge";
    case ErrorCode::kRangeViolation: return "RangeViolation";
    case ErrorCode::kTooManyMonomials: return "TooManyMonomials";
    case ErrorCode::kBlockTooSmall: return "BlockTooSmall";
    case ErrorCode::kLengthExceedsField: return "LengthExceedsField";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace spdlab

#endif  // SPDLAB_ERROR_H_
