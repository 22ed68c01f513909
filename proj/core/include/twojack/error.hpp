// Copyright 2026 The twojack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOJACK_ERROR_HPP_
#define TWOJACK_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twojack {

enum class ErrorCode {
  kEmptySample,
  kNonFiniteValue,
  kTooFewObservations,
  kNonPositiveVariance,
  kBothVariancesZero,
  kUnbalancedDesign,
  kZeroDenominator,
  kInvalidArgument,
  kInvalidD,
  kStatisticEvaluation,
  kOutOfDomain,
  kInvalidModel,
  kUnknownDataset,
  kParseError,
  kMissingSample,
  kIoError,
};

// Coarse grouping used by the command-line tool to pick an exit code.
enum class ErrorCategory { kUsage, kData, kEstimator };

std::string_view error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

// Raised by resampling routines when the statistic cannot be evaluated on
// one resampled configuration. `index` names the left-out observation,
// left-out pair, subset or bootstrap replicate.
class StatisticEvaluationError : public Error {
 public:
  StatisticEvaluationError(std::size_t index, ErrorCode cause,
                           const std::string& detail);

  std::size_t index() const noexcept { return index_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  ErrorCode cause_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace twojack

#endif  // TWOJACK_ERROR_HPP_
