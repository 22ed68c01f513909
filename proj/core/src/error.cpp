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

#include "twojack/error.hpp"

namespace twojack {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kTooFewObservations: return "TooFewObservations";
    case ErrorCode::kNonPositiveVariance: return "NonPositiveVariance";
    case ErrorCode::kBothVariancesZero: return "BothVariancesZero";
    case ErrorCode::kUnbalancedDesign: return "UnbalancedDesign";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidD: return "InvalidD";
    case ErrorCode::kStatisticEvaluation: return "StatisticEvaluationError";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kUnknownDataset: return "UnknownDataset";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingSample: return "MissingSample";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidD:
    case ErrorCode::kOutOfDomain:
    case ErrorCode::kInvalidModel:
      return ErrorCategory::kUsage;
    case ErrorCode::kEmptySample:
    case ErrorCode::kNonFiniteValue:
    case ErrorCode::kTooFewObservations:
    case ErrorCode::kUnknownDataset:
    case ErrorCode::kParseError:
    case ErrorCode::kMissingSample:
    case ErrorCode::kIoError:
      return ErrorCategory::kData;
    case ErrorCode::kNonPositiveVariance:
    case ErrorCode::kBothVariancesZero:
    case ErrorCode::kUnbalancedDesign:
    case ErrorCode::kZeroDenominator:
    case ErrorCode::kStatisticEvaluation:
      return ErrorCategory::kEstimator;
  }
  return ErrorCategory::kUsage;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

StatisticEvaluationError::StatisticEvaluationError(std::size_t index,
                                                   ErrorCode cause,
                                                   const std::string& detail)
    : Error(ErrorCode::kStatisticEvaluation,
            "statistic failed at resample index " + std::to_string(index) +
                " (" + std::string(error_code_name(cause)) + "): " + detail),
      index_(index),
      cause_(cause) {}

ParseError::ParseError(std::size_t line, const std::string& detail)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ": " + detail),
      line_(line) {}

}  // namespace twojack
