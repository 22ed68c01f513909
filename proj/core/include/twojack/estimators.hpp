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

#ifndef TWOJACK_ESTIMATORS_HPP_
#define TWOJACK_ESTIMATORS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include "twojack/core_stats.hpp"
#include "twojack/statistic.hpp"

namespace twojack {

// Common-mean estimators of the form
//
//   mu_hat = gamma * mean1 + (1 - gamma) * mean2
//
// where the weight gamma is a function of the sample fractions, the unbiased
// variances and the sample means. All weight rules read only a GammaInputs
// record, so they can be evaluated on leave-one-out summaries directly.

/// Argument vector of a weight rule.
struct GammaInputs {
  double frac1 = 0.5;  // n1 / n
  double frac2 = 0.5;  // n2 / n
  double var1 = 0.0;   // unbiased variance of sample 1
  double var2 = 0.0;
  double mean1 = 0.0;
  double mean2 = 0.0;
};

/// Builds inputs from two summaries (n_i >= 2 required).
GammaInputs make_gamma_inputs(const SummaryStats& s1, const SummaryStats& s2);

/// Checks fraction ranges and frac1 + frac2 = 1.
void validate_gamma_inputs(const GammaInputs& inputs);

enum class Branch {
  kOrdered,    // var1 <= var2 (ties land here)
  kUnordered,  // var1 > var2
};

inline Branch branch_of(const GammaInputs& inputs) noexcept {
  return inputs.var1 <= inputs.var2 ? Branch::kOrdered : Branch::kUnordered;
}

enum class WeightRule {
  kKnownVariance,
  kGraybillDeal,
  kElfessiUnbalanced,
  kElfessiBalanced,
  kFixedWeight,
  kKubokawa,
  kChangPlus,
};

std::string_view weight_rule_name(WeightRule rule);
std::string_view branch_name(Branch branch);

struct GammaWeight {
  double value = 0.0;
  Branch branch = Branch::kOrdered;
  WeightRule rule = WeightRule::kGraybillDeal;
  // Set when value lies outside [0, 1]; only Kubokawa and Chang-Reflect
  // weights can do that.
  bool out_of_range = false;
};

enum class TildeRule {
  kFloor,     // gamma~ = n1/n
  kReflect,   // gamma~ = 2 n1/n - gamma
  kMidpoint,  // gamma~ = 1.5 n1/n - 0.5 gamma
};

std::string_view tilde_rule_name(TildeRule rule);

/// psi(var1, var2, (mean1 - mean2)^2); must be positive.
using PsiFunction = std::function<double(double, double, double)>;

struct KnownVariance {
  double sigma1_sq = 1.0;
  double sigma2_sq = 1.0;
};
struct GraybillDeal {};
struct ElfessiUnbalanced {};
struct ElfessiBalanced {};
struct FixedWeight {
  double gamma = 0.5;
};
struct Kubokawa {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  PsiFunction psi;  // empty means psi == 1
  bool clamp = false;
};

class EstimatorSpec;

struct ChangPlus {
  std::shared_ptr<const EstimatorSpec> base;
  TildeRule tilde = TildeRule::kFloor;
};

/// Identifies one weight rule plus its parameters.
class EstimatorSpec {
 public:
  using Kind = std::variant<KnownVariance, GraybillDeal, ElfessiUnbalanced,
                            ElfessiBalanced, FixedWeight, Kubokawa, ChangPlus>;

  explicit EstimatorSpec(Kind kind);

  // Implicit from any one alternative, e.g. `EstimatorSpec s = GraybillDeal{};`.
  template <class T>
    requires(!std::is_same_v<std::remove_cvref_t<T>, EstimatorSpec> &&
             !std::is_same_v<std::remove_cvref_t<T>, Kind> &&
             std::is_constructible_v<Kind, T &&>)
  EstimatorSpec(T&& alternative)  // NOLINT(google-explicit-constructor)
      : EstimatorSpec(Kind(std::forward<T>(alternative))) {}

  static EstimatorSpec known_variance(double sigma1_sq, double sigma2_sq) {
    return KnownVariance{sigma1_sq, sigma2_sq};
  }
  static EstimatorSpec graybill_deal() { return GraybillDeal{}; }
  static EstimatorSpec elfessi_unbalanced() { return ElfessiUnbalanced{}; }
  /// Alias used in applied work for the unbalanced Elfessi estimator.
  static EstimatorSpec nair() { return ElfessiUnbalanced{}; }
  static EstimatorSpec elfessi_balanced() { return ElfessiBalanced{}; }
  static EstimatorSpec fixed_weight(double gamma) { return FixedWeight{gamma}; }
  static EstimatorSpec kubokawa(double a, double b, double c,
                                PsiFunction psi = {}, bool clamp = false) {
    return Kubokawa{a, b, c, std::move(psi), clamp};
  }
  static EstimatorSpec chang_plus(EstimatorSpec base,
                                  TildeRule tilde = TildeRule::kFloor);

  const Kind& kind() const noexcept { return kind_; }
  WeightRule rule() const noexcept;

  /// Short identifier such as "gd", "fixed:0.5" or "chang:gd:floor".
  std::string name() const;

 private:
  Kind kind_;
};

struct CommonMeanEstimate {
  double value = 0.0;
  GammaWeight gamma;
  GammaInputs inputs;
};

/// gamma = n1 s2 / (n1 s2 + n2 s1) with known variances s1, s2 > 0.
GammaWeight gamma_known_variance(const GammaInputs& inputs, double sigma1_sq,
                                 double sigma2_sq);
CommonMeanEstimate estimate_known_variance(const GammaInputs& inputs,
                                           double sigma1_sq, double sigma2_sq);

/// Graybill-Deal weight: the known-variance weight with unbiased variance
/// estimates plugged in. Error(kBothVariancesZero) when 0/0.
GammaWeight gamma_graybill_deal(const GammaInputs& inputs);

/// Graybill-Deal on the ordered branch, n1/n on the unordered branch.
GammaWeight gamma_elfessi_unbalanced(const GammaInputs& inputs);

/// Graybill-Deal on the ordered branch, var1 / (var1 + var2) on the
/// unordered branch. Requires n1 = n2.
GammaWeight gamma_elfessi_balanced(const GammaInputs& inputs);

/// Kubokawa class: gamma = 1 - a / (b R psi), R = (b var2 + c d^2) / var1,
/// d = mean1 - mean2. Not clamped; `out_of_range` flags values outside [0,1].
GammaWeight gamma_kubokawa(const GammaInputs& inputs, double a, double b,
                           double c, const PsiFunction& psi);

/// Chang-type improvement: keep gamma when gamma >= n1/n, otherwise replace it
/// by gamma~ from `tilde`. Every rule satisfies n1/n <= gamma~ <= 2 n1/n - gamma.
GammaWeight gamma_chang_plus(const GammaWeight& gamma_n, double frac1,
                             TildeRule tilde);

/// Dispatches to the rule named by `spec`.
GammaWeight compute_gamma(const EstimatorSpec& spec, const GammaInputs& inputs);

CommonMeanEstimate estimate_from_summaries(const SummaryStats& s1,
                                           const SummaryStats& s2,
                                           const EstimatorSpec& spec);

/// Error(kTooFewObservations) if either sample has fewer than 2 values.
CommonMeanEstimate estimate_common_mean(const TwoSampleData& data,
                                        const EstimatorSpec& spec);

/// The estimator as a two-sample statistic (with summary form).
TwoSampleStatistic make_statistic(const EstimatorSpec& spec);

}  // namespace twojack

#endif  // TWOJACK_ESTIMATORS_HPP_
