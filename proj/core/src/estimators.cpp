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

#include "twojack/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "twojack/error.hpp"
#include "twojack/format.hpp"

namespace twojack {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool in_unit_interval(double g) { return g >= 0.0 && g <= 1.0; }

GammaWeight make_weight(double value, const GammaInputs& inputs,
                        WeightRule rule) {
  return {value, branch_of(inputs), rule, !in_unit_interval(value)};
}

// frac1 * v2 / (frac1 * v2 + frac2 * v1), equal to n1 v2 / (n1 v2 + n2 v1).
double inverse_variance_weight(double frac1, double frac2, double v1,
                               double v2) {
  return frac1 * v2 / (frac1 * v2 + frac2 * v1);
}

void require_balanced(const GammaInputs& inputs) {
  if (std::abs(inputs.frac1 - inputs.frac2) > 1e-12) {
    throw Error(ErrorCode::kUnbalancedDesign,
                "balanced Elfessi weight requires n1 = n2");
  }
}

}  // namespace

std::string_view weight_rule_name(WeightRule rule) {
  switch (rule) {
    case WeightRule::kKnownVariance: return "known-variance";
    case WeightRule::kGraybillDeal: return "graybill-deal";
    case WeightRule::kElfessiUnbalanced: return "elfessi-unbalanced";
    case WeightRule::kElfessiBalanced: return "elfessi-balanced";
    case WeightRule::kFixedWeight: return "fixed-weight";
    case WeightRule::kKubokawa: return "kubokawa";
    case WeightRule::kChangPlus: return "chang-plus";
  }
  return "unknown";
}

std::string_view branch_name(Branch branch) {
  return branch == Branch::kOrdered ? "ordered" : "unordered";
}

std::string_view tilde_rule_name(TildeRule rule) {
  switch (rule) {
    case TildeRule::kFloor: return "floor";
    case TildeRule::kReflect: return "reflect";
    case TildeRule::kMidpoint: return "midpoint";
  }
  return "unknown";
}

GammaInputs make_gamma_inputs(const SummaryStats& s1, const SummaryStats& s2) {
  if (s1.n < 2 || s2.n < 2) {
    throw Error(ErrorCode::kTooFewObservations,
                "variance-based weights need at least 2 observations per "
                "sample (got " + std::to_string(s1.n) + " and " +
                    std::to_string(s2.n) + ")");
  }
  const auto n = static_cast<double>(s1.n + s2.n);
  GammaInputs in;
  in.frac1 = static_cast<double>(s1.n) / n;
  in.frac2 = static_cast<double>(s2.n) / n;
  in.var1 = s1.var_unbiased;
  in.var2 = s2.var_unbiased;
  in.mean1 = s1.mean;
  in.mean2 = s2.mean;
  return in;
}

void validate_gamma_inputs(const GammaInputs& in) {
  if (!(in.frac1 > 0.0 && in.frac1 < 1.0 && in.frac2 > 0.0 && in.frac2 < 1.0) ||
      std::abs(in.frac1 + in.frac2 - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample fractions must lie in (0,1) and sum to 1");
  }
  if (!(in.var1 >= 0.0) || !(in.var2 >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "variances must be non-negative");
  }
}

GammaWeight gamma_known_variance(const GammaInputs& inputs, double sigma1_sq,
                                 double sigma2_sq) {
  if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0)) {
    throw Error(ErrorCode::kNonPositiveVariance,
                "known variances must be positive");
  }
  return make_weight(
      inverse_variance_weight(inputs.frac1, inputs.frac2, sigma1_sq, sigma2_sq),
      inputs, WeightRule::kKnownVariance);
}

CommonMeanEstimate estimate_known_variance(const GammaInputs& inputs,
                                           double sigma1_sq, double sigma2_sq) {
  const auto w = gamma_known_variance(inputs, sigma1_sq, sigma2_sq);
  return {w.value * inputs.mean1 + (1.0 - w.value) * inputs.mean2, w, inputs};
}

GammaWeight gamma_graybill_deal(const GammaInputs& inputs) {
  if (inputs.var1 == 0.0 && inputs.var2 == 0.0) {
    throw Error(ErrorCode::kBothVariancesZero,
                "Graybill-Deal weight is 0/0 when both variances vanish");
  }
  return make_weight(inverse_variance_weight(inputs.frac1, inputs.frac2,
                                             inputs.var1, inputs.var2),
                     inputs, WeightRule::kGraybillDeal);
}

GammaWeight gamma_elfessi_unbalanced(const GammaInputs& inputs) {
  if (branch_of(inputs) == Branch::kOrdered) {
    auto w = gamma_graybill_deal(inputs);
    w.rule = WeightRule::kElfessiUnbalanced;
    return w;
  }
  return make_weight(inputs.frac1, inputs, WeightRule::kElfessiUnbalanced);
}

GammaWeight gamma_elfessi_balanced(const GammaInputs& inputs) {
  require_balanced(inputs);
  if (branch_of(inputs) == Branch::kOrdered) {
    auto w = gamma_graybill_deal(inputs);
    w.rule = WeightRule::kElfessiBalanced;
    return w;
  }
  // Unordered implies var1 > var2 >= 0, so the denominator is positive.
  return make_weight(inputs.var1 / (inputs.var1 + inputs.var2), inputs,
                     WeightRule::kElfessiBalanced);
}

GammaWeight gamma_kubokawa(const GammaInputs& inputs, double a, double b,
                           double c, const PsiFunction& psi) {
  if (!(a >= 0.0) || !(b > 0.0) || !(c >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Kubokawa constants need a >= 0, b > 0, c >= 0");
  }
  if (a == 0.0) return make_weight(1.0, inputs, WeightRule::kKubokawa);
  if (inputs.var1 == 0.0) {
    throw Error(ErrorCode::kZeroDenominator, "R is undefined when var1 = 0");
  }
  const double diff = inputs.mean1 - inputs.mean2;
  const double d2 = diff * diff;
  const double r = (b * inputs.var2 + c * d2) / inputs.var1;
  const double p = psi ? psi(inputs.var1, inputs.var2, d2) : 1.0;
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "psi must be positive and finite, got " + format_double(p));
  }
  const double denom = b * r * p;
  if (denom == 0.0) {
    throw Error(ErrorCode::kZeroDenominator, "b * R * psi is zero");
  }
  return make_weight(1.0 - a / denom, inputs, WeightRule::kKubokawa);
}

GammaWeight gamma_chang_plus(const GammaWeight& gamma_n, double frac1,
                             TildeRule tilde) {
  if (!(frac1 > 0.0 && frac1 < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "n1/n must lie in (0,1)");
  }
  GammaWeight out = gamma_n;
  out.rule = WeightRule::kChangPlus;
  if (gamma_n.value >= frac1) return out;

  const double g = gamma_n.value;
  switch (tilde) {
    case TildeRule::kFloor: out.value = frac1; break;
    case TildeRule::kReflect: out.value = 2.0 * frac1 - g; break;
    case TildeRule::kMidpoint: out.value = 1.5 * frac1 - 0.5 * g; break;
  }
  // n1/n <= gamma~ <= 2 n1/n - gamma holds by construction for g < n1/n.
  if (!(out.value >= frac1 && out.value <= 2.0 * frac1 - g + 1e-15)) {
    throw Error(ErrorCode::kInvalidArgument, "Chang constraint violated");
  }
  out.out_of_range = !in_unit_interval(out.value);
  return out;
}

EstimatorSpec::EstimatorSpec(Kind kind) : kind_(std::move(kind)) {
  if (const auto* f = std::get_if<FixedWeight>(&kind_)) {
    if (!in_unit_interval(f->gamma)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fixed weight must lie in [0,1], got " + format_double(f->gamma));
    }
  }
  if (const auto* k = std::get_if<Kubokawa>(&kind_)) {
    if (!(k->a >= 0.0) || !(k->b > 0.0) || !(k->c >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "Kubokawa constants need a >= 0, b > 0, c >= 0");
    }
  }
  if (const auto* c = std::get_if<ChangPlus>(&kind_)) {
    if (!c->base) throw Error(ErrorCode::kInvalidArgument, "Chang base is null");
  }
}

EstimatorSpec EstimatorSpec::chang_plus(EstimatorSpec base, TildeRule tilde) {
  return ChangPlus{std::make_shared<const EstimatorSpec>(std::move(base)), tilde};
}

WeightRule EstimatorSpec::rule() const noexcept {
  return std::visit(
      Overloaded{
          [](const KnownVariance&) { return WeightRule::kKnownVariance; },
          [](const GraybillDeal&) { return WeightRule::kGraybillDeal; },
          [](const ElfessiUnbalanced&) { return WeightRule::kElfessiUnbalanced; },
          [](const ElfessiBalanced&) { return WeightRule::kElfessiBalanced; },
          [](const FixedWeight&) { return WeightRule::kFixedWeight; },
          [](const Kubokawa&) { return WeightRule::kKubokawa; },
          [](const ChangPlus&) { return WeightRule::kChangPlus; },
      },
      kind_);
}

std::string EstimatorSpec::name() const {
  return std::visit(
      Overloaded{
          [](const KnownVariance& k) {
            return "known:" + format_double(k.sigma1_sq) + "," +
                   format_double(k.sigma2_sq);
          },
          [](const GraybillDeal&) { return std::string("gd"); },
          [](const ElfessiUnbalanced&) { return std::string("nair"); },
          [](const ElfessiBalanced&) { return std::string("elfessi3"); },
          [](const FixedWeight& f) { return "fixed:" + format_double(f.gamma); },
          [](const Kubokawa& k) {
            return "kubokawa:" + format_double(k.a) + "," + format_double(k.b) +
                   "," + format_double(k.c);
          },
          [](const ChangPlus& c) {
            return "chang:" + c.base->name() + ":" +
                   std::string(tilde_rule_name(c.tilde));
          },
      },
      kind_);
}

GammaWeight compute_gamma(const EstimatorSpec& spec, const GammaInputs& inputs) {
  return std::visit(
      Overloaded{
          [&](const KnownVariance& k) {
            return gamma_known_variance(inputs, k.sigma1_sq, k.sigma2_sq);
          },
          [&](const GraybillDeal&) { return gamma_graybill_deal(inputs); },
          [&](const ElfessiUnbalanced&) { return gamma_elfessi_unbalanced(inputs); },
          [&](const ElfessiBalanced&) { return gamma_elfessi_balanced(inputs); },
          [&](const FixedWeight& f) {
            return make_weight(f.gamma, inputs, WeightRule::kFixedWeight);
          },
          [&](const Kubokawa& k) {
            auto w = gamma_kubokawa(inputs, k.a, k.b, k.c, k.psi);
            if (k.clamp && w.out_of_range) {
              w.value = std::clamp(w.value, 0.0, 1.0);
              w.out_of_range = false;
            }
            return w;
          },
          [&](const ChangPlus& c) {
            return gamma_chang_plus(compute_gamma(*c.base, inputs), inputs.frac1,
                                    c.tilde);
          },
      },
      spec.kind());
}

CommonMeanEstimate estimate_from_summaries(const SummaryStats& s1,
                                           const SummaryStats& s2,
                                           const EstimatorSpec& spec) {
  const auto inputs = make_gamma_inputs(s1, s2);
  const auto w = compute_gamma(spec, inputs);
  return {w.value * inputs.mean1 + (1.0 - w.value) * inputs.mean2, w, inputs};
}

CommonMeanEstimate estimate_common_mean(const TwoSampleData& data,
                                        const EstimatorSpec& spec) {
  return estimate_from_summaries(summarize(data.sample1()),
                                 summarize(data.sample2()), spec);
}

TwoSampleStatistic make_statistic(const EstimatorSpec& spec) {
  return TwoSampleStatistic::from_summaries(
      spec.name(), [spec](const SummaryStats& a, const SummaryStats& b) {
        return estimate_from_summaries(a, b, spec).value;
      });
}

}  // namespace twojack
