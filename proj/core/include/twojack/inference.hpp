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

#ifndef TWOJACK_INFERENCE_HPP_
#define TWOJACK_INFERENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "twojack/estimators.hpp"
#include "twojack/resampling.hpp"

namespace twojack {

/// Which plug-in variances enter the CLT variance estimate.
enum class CltVariant {
  // gamma^2 S~1^2/n1 + (1-gamma)^2 S~2^2/n2 with the estimator's own weight.
  kUnbiased,
  // The displayed formula read literally: biased S_i^2 both inside the
  // weight function and in the variance, branch still chosen by S~1^2 <= S~2^2.
  kLiteral,
};

struct CltVarianceResult {
  double variance = 0.0;
  double sd = 0.0;
  double gamma_hat = 0.0;
  Branch branch = Branch::kOrdered;
};

CltVarianceResult clt_variance(const TwoSampleData& data,
                               const EstimatorSpec& spec,
                               CltVariant variant = CltVariant::kUnbiased);

/// Population side of the parameter vector.
struct PopulationParams {
  double lambda1 = 0.5;
  double lambda2 = 0.5;
  double sigma1_sq = 1.0;
  double sigma2_sq = 1.0;
  double mu = 0.0;
};

void validate(const PopulationParams& params);

/// sigma^2(gamma) = gamma^2 sigma1^2 / lambda1 + (1-gamma)^2 sigma2^2 / lambda2
double asymptotic_variance_formula(double gamma, const PopulationParams& params);

/// The gamma minimizing asymptotic_variance_formula.
double optimal_weight(const PopulationParams& params);

/// Inverse standard normal CDF (Wichura AS241, ~1e-16 relative accuracy).
/// Error(kOutOfDomain) unless 0 < p < 1.
double normal_quantile(double p);

enum class ZStyle {
  kExact,  // true quantile, 1.959964 at 95%
  kPaper,  // quantile rounded to two decimals, 1.96 at 95%
};

/// Two-sided critical value for `level`.
double critical_value(double level, ZStyle style);

struct JackknifeUnequalMethod {
  Norming norming = Norming::kUnbiased;
  Centering centering = Centering::kStratified;
};
struct JackknifePairedMethod {
  Norming norming = Norming::kUnbiased;
};
struct DeleteDMethod {
  std::size_t d = 1;
  std::size_t enumeration_limit = 100000;
  std::uint64_t seed = 0;
};
struct CltMethod {
  CltVariant variant = CltVariant::kUnbiased;
};
struct BootstrapMethod {
  std::size_t replicates = 1000;
  std::uint64_t seed = 0;
};

using VarianceMethod = std::variant<JackknifeUnequalMethod, JackknifePairedMethod,
                                    DeleteDMethod, CltMethod, BootstrapMethod>;

/// Human-readable method label, e.g. "jackknife-paired", "bootstrap:1000".
std::string method_label(const VarianceMethod& method);

struct VarianceEstimate {
  double variance = 0.0;
  double sd = 0.0;
  std::size_t evaluations = 0;  // statistic evaluations spent
  std::size_t retries = 0;      // bootstrap only
};

/// Variance of the common-mean estimator by the given method.
VarianceEstimate estimate_variance(const EstimatorSpec& spec,
                                   const TwoSampleData& data,
                                   const VarianceMethod& method,
                                   unsigned workers = 1);

struct ConfidenceInterval {
  double center = 0.0;
  double sd = 0.0;
  double level = 0.95;
  double lower = 0.0;
  double upper = 0.0;
  double z = 0.0;
  VarianceMethod method = CltMethod{};

  double width() const noexcept { return upper - lower; }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// center -/+ z sd. Error(kInvalidArgument) if sd < 0 or level outside (0,1).
ConfidenceInterval confidence_interval(double center, double sd, double level,
                                       ZStyle style,
                                       VarianceMethod method = CltMethod{});

}  // namespace twojack

#endif  // TWOJACK_INFERENCE_HPP_
