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

#include "twojack/inference.hpp"

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

// Weight with the ordered/unordered branch fixed by the caller. Only the
// Elfessi rules branch on the variances.
GammaWeight gamma_on_branch(const EstimatorSpec& spec, const GammaInputs& in,
                            Branch branch) {
  const bool unbalanced = std::holds_alternative<ElfessiUnbalanced>(spec.kind());
  const bool balanced = std::holds_alternative<ElfessiBalanced>(spec.kind());
  if (const auto* c = std::get_if<ChangPlus>(&spec.kind())) {
    return gamma_chang_plus(gamma_on_branch(*c->base, in, branch), in.frac1,
                            c->tilde);
  }
  GammaWeight w;
  if ((unbalanced || balanced) && branch == Branch::kOrdered) {
    w = gamma_graybill_deal(in);
  } else if (unbalanced) {
    w.value = in.frac1;
  } else if (balanced) {
    if (std::abs(in.frac1 - in.frac2) > 1e-12) {
      throw Error(ErrorCode::kUnbalancedDesign,
                  "balanced Elfessi weight requires n1 = n2");
    }
    w.value = in.var1 / (in.var1 + in.var2);
  } else {
    w = compute_gamma(spec, in);
  }
  w.rule = spec.rule();
  w.branch = branch;
  w.out_of_range = !(w.value >= 0.0 && w.value <= 1.0);
  return w;
}

// Coefficients of Wichura's AS241 (PPND16).
double as241(double p) {
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                 67265.770927008700853) * r + 45921.953931549871457) * r +
               13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((r * 5226.495278852545925 + 28729.085735721942674) * r +
                 39307.89580009271061) * r + 21213.794301586595867) * r +
               5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                0.24178072517745061177) * r + 1.27045825245236838258) * r +
              3.64784832476320460504) * r + 5.7694972214606914055) * r +
            4.6303378461565452959) * r + 1.42343711074968357734) /
          (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                0.0151986665636164571966) * r + 0.14810397642748007459) * r +
              0.68976733498510000455) * r + 1.6763848301838038494) * r +
            2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                0.0012426609473880784386) * r + 0.026532189526576123093) * r +
              0.29656057182850489123) * r + 1.7848265399172913358) * r +
            5.4637849111641143699) * r + 6.6579046435011037772) /
          (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
              0.0148753612908506148525) * r + 0.13692988092273580531) * r +
            0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -val : val;
}

}  // namespace

CltVarianceResult clt_variance(const TwoSampleData& data,
                               const EstimatorSpec& spec, CltVariant variant) {
  const auto s1 = summarize(data.sample1());
  const auto s2 = summarize(data.sample2());
  const auto inputs = make_gamma_inputs(s1, s2);
  const auto n1 = static_cast<double>(s1.n);
  const auto n2 = static_cast<double>(s2.n);

  CltVarianceResult out;
  double v1 = s1.var_unbiased;
  double v2 = s2.var_unbiased;
  if (variant == CltVariant::kUnbiased) {
    const auto w = compute_gamma(spec, inputs);
    out.gamma_hat = w.value;
    out.branch = w.branch;
  } else {
    auto biased = inputs;
    biased.var1 = s1.var_biased;
    biased.var2 = s2.var_biased;
    const auto w = gamma_on_branch(spec, biased, branch_of(inputs));
    out.gamma_hat = w.value;
    out.branch = w.branch;
    v1 = s1.var_biased;
    v2 = s2.var_biased;
  }
  const double g = out.gamma_hat;
  out.variance = g * g * v1 / n1 + (1.0 - g) * (1.0 - g) * v2 / n2;
  out.sd = std::sqrt(out.variance);
  return out;
}

void validate(const PopulationParams& p) {
  if (!(p.lambda1 > 0.0 && p.lambda1 < 1.0 && p.lambda2 > 0.0 && p.lambda2 < 1.0) ||
      std::abs(p.lambda1 + p.lambda2 - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda1, lambda2 must lie in (0,1) and sum to 1");
  }
  if (!(p.sigma1_sq > 0.0) || !(p.sigma2_sq > 0.0)) {
    throw Error(ErrorCode::kNonPositiveVariance,
                "population variances must be positive");
  }
}

double asymptotic_variance_formula(double gamma, const PopulationParams& p) {
  validate(p);
  return gamma * gamma * p.sigma1_sq / p.lambda1 +
         (1.0 - gamma) * (1.0 - gamma) * p.sigma2_sq / p.lambda2;
}

double optimal_weight(const PopulationParams& p) {
  validate(p);
  const double a = p.sigma1_sq / p.lambda1;
  const double b = p.sigma2_sq / p.lambda2;
  return b / (a + b);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kOutOfDomain,
                "normal quantile needs 0 < p < 1, got " + format_double(p));
  }
  return as241(p);
}

double critical_value(double level, ZStyle style) {
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "confidence level must lie in (0,1), got " + format_double(level));
  }
  const double z = normal_quantile(0.5 + 0.5 * level);
  return style == ZStyle::kExact ? z : std::round(z * 100.0) / 100.0;
}

std::string method_label(const VarianceMethod& method) {
  return std::visit(
      Overloaded{
          [](const JackknifeUnequalMethod& m) {
            std::string s = "jackknife-unequal";
            if (m.centering == Centering::kPooled) s += "-pooled";
            if (m.norming == Norming::kPlugin) s += "-plugin";
            return s;
          },
          [](const JackknifePairedMethod& m) {
            std::string s = "jackknife-paired";
            if (m.norming == Norming::kPlugin) s += "-plugin";
            return s;
          },
          [](const DeleteDMethod& m) { return "delete-d:" + std::to_string(m.d); },
          [](const CltMethod& m) {
            return std::string(m.variant == CltVariant::kUnbiased ? "clt"
                                                                  : "clt-literal");
          },
          [](const BootstrapMethod& m) {
            return "bootstrap:" + std::to_string(m.replicates);
          },
      },
      method);
}

VarianceEstimate estimate_variance(const EstimatorSpec& spec,
                                   const TwoSampleData& data,
                                   const VarianceMethod& method,
                                   unsigned workers) {
  return std::visit(
      Overloaded{
          [&](const JackknifeUnequalMethod& m) {
            JackknifeOptions o;
            o.norming = m.norming;
            o.centering = m.centering;
            o.workers = workers;
            const auto r = jackknife_unequal(make_statistic(spec), data, o);
            return VarianceEstimate{r.variance, r.sd, r.evaluations, 0};
          },
          [&](const JackknifePairedMethod& m) {
            JackknifeOptions o;
            o.norming = m.norming;
            o.workers = workers;
            const auto r = jackknife_paired(make_statistic(spec), data, o);
            return VarianceEstimate{r.variance, r.sd, r.evaluations, 0};
          },
          [&](const DeleteDMethod& m) {
            const auto r = delete_d_jackknife(
                make_statistic(spec), data,
                {m.d, m.enumeration_limit, m.seed, workers});
            return VarianceEstimate{r.variance, r.sd, r.evaluations, 0};
          },
          [&](const CltMethod& m) {
            const auto r = clt_variance(data, spec, m.variant);
            return VarianceEstimate{r.variance, r.sd, 1, 0};
          },
          [&](const BootstrapMethod& m) {
            BootstrapOptions o;
            o.replicates = m.replicates;
            o.seed = m.seed;
            o.workers = workers;
            const auto r = bootstrap_variance(make_statistic(spec), data, o);
            return VarianceEstimate{r.variance, r.sd, m.replicates + r.retries,
                                    r.retries};
          },
      },
      method);
}

ConfidenceInterval confidence_interval(double center, double sd, double level,
                                       ZStyle style, VarianceMethod method) {
  if (!(sd >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "standard deviation must be >= 0");
  }
  ConfidenceInterval ci;
  ci.center = center;
  ci.sd = sd;
  ci.level = level;
  ci.z = critical_value(level, style);
  const double half = ci.z * sd;
  ci.lower = center - half;
  ci.upper = center + half;
  ci.method = std::move(method);
  return ci;
}

}  // namespace twojack
