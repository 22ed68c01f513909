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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Criteria 1-6 run end to end through the CLI; the
// statistical criteria call the library directly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twojack/twojack.hpp"
#include "twojack_cli/cli.hpp"
#include "unit/property.hpp"

namespace twojack::acceptance {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double x, int digits = 7) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

bool within_abs(double got, double want, double tol) { return std::abs(got - want) <= tol; }

bool within_rel(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

// Runs the CLI and returns the TSV rows keyed by column name.
std::vector<std::map<std::string, double>> analyze(std::vector<std::string> args) {
  args.insert(args.begin(), "analyze");
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run_cli(args, in, out, err) != 0) {
    throw std::runtime_error("analyze failed: " + err.str());
  }
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    std::string cell;
    while (std::getline(h, cell, '\t')) header.push_back(cell);
  }
  std::vector<std::map<std::string, double>> rows;
  while (std::getline(lines, line)) {
    std::istringstream r(line);
    std::string cell;
    std::map<std::string, double> row;
    for (const auto& key : header) {
      std::getline(r, cell, '\t');
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() && *end == '\0') row[key] = v;
    }
    rows.push_back(row);
  }
  return rows;
}

Outcome ac1() {
  const auto rows = analyze({"--builtin", "gravity", "--estimator", "gd", "--method", "clt"});
  const double est = rows.at(0).at("estimate");
  return {within_abs(est, 80.26123, 1e-4), "estimate " + num(est, 10) + " (want 80.26123 +/- 1e-4)"};
}

Outcome ac2() {
  const auto r = analyze({"--builtin", "gravity", "--estimator", "gd", "--method", "clt",
                          "--z-style", "paper"})
                     .at(0);
  const bool ok = within_abs(r.at("sd"), 0.8455307, 1e-4) &&
                  within_abs(r.at("ci_lower"), 78.60399, 1e-3) &&
                  within_abs(r.at("ci_upper"), 81.91847, 1e-3) &&
                  within_abs(r.at("width"), 3.31448, 1e-3);
  return {ok, "sd " + num(r.at("sd")) + ", CI [" + num(r.at("ci_lower")) + ", " +
                  num(r.at("ci_upper")) + "], width " + num(r.at("width"))};
}

// Pinned: unbiased norming with the n pseudo-values pooled about one mean.
Outcome ac3() {
  const auto r = analyze({"--builtin", "gravity", "--estimator", "gd", "--method",
                          "jackknife-unequal", "--norming", "unbiased", "--centering",
                          "pooled"})
                     .at(0);
  return {within_rel(r.at("sd"), 0.8492987, 1e-3),
          "sd " + num(r.at("sd")) + " (want 0.8492987 within 0.1%; unbiased, pooled)"};
}

Outcome ac4() {
  const auto r = analyze({"--builtin", "gravity", "--estimator", "nair", "--method",
                          "jackknife-unequal", "--norming", "unbiased", "--centering",
                          "pooled", "--z-style", "paper"})
                     .at(0);
  const bool ok = within_rel(r.at("sd"), 0.9752919, 1e-3) &&
                  within_abs(r.at("ci_lower"), 77.91451, 1e-3);
  return {ok, "sd " + num(r.at("sd")) + ", CI lower " + num(r.at("ci_lower"))};
}

Outcome ac5() {
  const auto rows = analyze({"--builtin", "child-girls-first", "--estimator", "gd",
                             "--method", "clt", "--method", "jackknife-paired",
                             "--z-style", "paper"});
  const auto& clt = rows.at(0);
  const auto& jack = rows.at(1);
  const bool ok = within_abs(clt.at("estimate"), 54.34878, 1e-3) &&
                  within_abs(clt.at("sd"), 0.3921168, 1e-4) &&
                  within_rel(jack.at("sd"), 0.6874476, 1e-3) &&
                  within_abs(jack.at("ci_lower"), 53.00139, 1e-3);
  return {ok, "estimate " + num(clt.at("estimate")) + ", CLT sd " + num(clt.at("sd")) +
                  ", jackknife sd " + num(jack.at("sd")) + ", CI lower " +
                  num(jack.at("ci_lower"))};
}

Outcome ac6() {
  const auto r = analyze({"--builtin", "child-girls-first", "--estimator", "nair",
                          "--method", "jackknife-paired", "--z-style", "paper"})
                     .at(0);
  const bool ok = within_rel(r.at("sd"), 0.5593932, 1e-3) &&
                  within_abs(r.at("ci_lower"), 53.42288, 1e-3);
  return {ok, "sd " + num(r.at("sd")) + ", CI lower " + num(r.at("ci_lower"))};
}

Outcome ac7a() {
  CoverageConfig cfg;
  cfg.model = SimulationModel::make(1);
  cfg.n = 50;
  cfg.reps = 20000;
  cfg.methods = {JackknifePairedMethod{}};
  cfg.seed = 71;
  const auto r = coverage_experiment(cfg).at(0);
  const bool ok = r.coverage >= 0.94 && r.coverage <= 0.96 && r.failures == 0;
  return {ok, "coverage " + num(r.coverage, 5) + " over " + std::to_string(r.reps) +
                  " reps, failures " + std::to_string(r.failures)};
}

Outcome ac7b() {
  bool ok = true;
  std::string detail;
  for (int model : {1, 2, 3}) {
    for (std::size_t n : {25u, 50u}) {
      CoverageConfig cfg;
      cfg.model = SimulationModel::make(model);
      cfg.n = n;
      cfg.reps = 5000;
      cfg.methods = {JackknifePairedMethod{}, BootstrapMethod{100, 0},
                     BootstrapMethod{1000, 0}};
      cfg.seed = derive_key(72, {static_cast<std::uint64_t>(model), n});
      const auto res = coverage_experiment(cfg);
      detail += " m" + std::to_string(model) + "/N" + std::to_string(n) + ": J " +
                num(res[0].coverage, 4);
      for (std::size_t k = 1; k < res.size(); ++k) {
        const auto cmp = paired_coverage_test(res[0], res[k]);
        const bool lower = cmp.p_value < 0.01;
        ok = ok && !lower && res[0].failures == 0;
        detail += " " + res[k].label + " " + num(res[k].coverage, 4) + " p=" +
                  num(cmp.p_value, 3) + (lower ? "(!)" : "");
      }
      detail += ";";
    }
  }
  return {ok, "jackknife vs bootstrap (one-sided sign test, alpha 0.01):" + detail};
}

Outcome ac8() {
  using testing::case_rng;
  using testing::kPropertyCases;
  using testing::scale_of;
  std::size_t bad_identity = 0, bad_constant = 0, bad_linear = 0, bad_norming = 0,
              bad_ci = 0, bad_equivariance = 0, bad_permutation = 0;
  const auto gd = make_statistic(EstimatorSpec::graybill_deal());
  const std::vector<EstimatorSpec> family = {EstimatorSpec::graybill_deal(),
                                             EstimatorSpec::nair(),
                                             EstimatorSpec::elfessi_balanced(),
                                             EstimatorSpec::fixed_weight(0.4)};
  for (std::size_t c = 0; c < kPropertyCases; ++c) {
    auto g = case_rng(800, c);
    // Continuous draws: GD leave-outs must keep a positive variance.
    const auto data = testing::random_balanced(g, 3, 25, false);
    const auto unbalanced = testing::random_data(g, 3, 25, false);

    // Pooled-mean pseudo-values reproduce the observations.
    const auto pm = jackknife_unequal(pooled_mean_statistic(), unbalanced);
    std::vector<double> all(unbalanced.sample1().values().begin(),
                            unbalanced.sample1().values().end());
    all.insert(all.end(), unbalanced.sample2().values().begin(),
               unbalanced.sample2().values().end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (std::abs(pm.pseudo.values[i] - all[i]) > 1e-10 * scale_of({all[i], pm.statistic})) {
        ++bad_identity;
        break;
      }
    }

    // Constant statistic: zero variance everywhere.
    const auto k = constant_statistic(std::uniform_real_distribution<double>(-5, 5)(g));
    if (jackknife_unequal(k, unbalanced).variance != 0.0 ||
        jackknife_paired(k, data).variance != 0.0 ||
        bootstrap_variance(k, unbalanced, {.replicates = 10, .seed = c}).variance != 0.0) {
      ++bad_constant;
    }

    // Sample-variance linearization identity.
    {
      const auto xs = testing::random_values(g, testing::random_size(g, 1, 40));
      const auto s = summarize(xs);
      const double mu = s.mean + std::normal_distribution<double>(0, 2)(g);
      const double sigma2 = std::abs(std::normal_distribution<double>(0, 2)(g));
      const auto lin = linearization_decomposition(xs, mu, sigma2);
      const double scale = scale_of({s.var_biased, sigma2, lin.linear_part, lin.remainder});
      if (std::abs((s.var_biased - sigma2) - (lin.linear_part - lin.remainder)) > 1e-12 * scale) {
        ++bad_linear;
      }
    }

    // Norming variants differ by exact factors.
    {
      const auto u = jackknife_unequal(gd, unbalanced, {Norming::kUnbiased});
      const auto p = jackknife_unequal(gd, unbalanced, {Norming::kPlugin});
      const double n1 = unbalanced.n1();
      const double n2 = unbalanced.n2();
      const auto pu = jackknife_paired(gd, data, {Norming::kUnbiased});
      const auto pp = jackknife_paired(gd, data, {Norming::kPlugin});
      const double big_n = data.n1();
      if (!within_rel(p.tau1_sq * n1 / (n1 - 1), u.tau1_sq, 1e-12) ||
          !within_rel(*p.tau2_sq * n2 / (n2 - 1), *u.tau2_sq, 1e-12) ||
          !within_rel(pp.variance, pu.variance * (big_n - 1) / big_n, 1e-12)) {
        ++bad_norming;
      }
    }

    // Interval geometry.
    {
      const double center = std::uniform_real_distribution<double>(-1e3, 1e3)(g);
      const double sd = std::uniform_real_distribution<double>(0, 20)(g);
      const double level = std::uniform_real_distribution<double>(0.5, 0.99)(g);
      const auto a = confidence_interval(center, sd, level, ZStyle::kExact);
      const auto b = confidence_interval(center, sd, std::min(0.999, level + 0.005),
                                         ZStyle::kExact);
      const double tol = 1e-12 * scale_of({center, sd});
      if (std::abs((a.upper - center) - (center - a.lower)) > tol ||
          std::abs(a.width() - 2 * a.z * sd) > 4 * tol || b.width() < a.width()) {
        ++bad_ci;
      }
    }

    // Location and scale equivariance, and within-sample permutation
    // invariance, of the GD family.
    {
      const double shift = std::uniform_real_distribution<double>(-50, 50)(g);
      const double mul = std::exp(std::uniform_real_distribution<double>(-2, 2)(g));
      auto map = [](const Sample& s, double a, double b) {
        std::vector<double> v(s.values().begin(), s.values().end());
        for (auto& x : v) x = b * x + a;
        return Sample(std::move(v));
      };
      std::vector<double> p1(data.sample1().values().begin(), data.sample1().values().end());
      std::vector<double> p2(data.sample2().values().begin(), data.sample2().values().end());
      std::shuffle(p1.begin(), p1.end(), g);
      std::shuffle(p2.begin(), p2.end(), g);
      const TwoSampleData shifted(map(data.sample1(), shift, 1), map(data.sample2(), shift, 1));
      const TwoSampleData scaled(map(data.sample1(), 0, mul), map(data.sample2(), 0, mul));
      const TwoSampleData shuffled(Sample(std::move(p1)), Sample(std::move(p2)));
      for (const auto& spec : family) {
        const double base = estimate_common_mean(data, spec).value;
        const double sc = scale_of({base, shift, base * mul});
        if (std::abs(estimate_common_mean(shifted, spec).value - (base + shift)) > 1e-10 * sc ||
            std::abs(estimate_common_mean(scaled, spec).value - base * mul) > 1e-10 * sc) {
          ++bad_equivariance;
        }
        if (std::abs(estimate_common_mean(shuffled, spec).value - base) >
            1e-12 * scale_of({base})) {
          ++bad_permutation;
        }
      }
    }
  }
  const std::size_t total = bad_identity + bad_constant + bad_linear + bad_norming + bad_ci +
                            bad_equivariance + bad_permutation;
  return {total == 0,
          std::to_string(kPropertyCases) + " cases each; violations: pseudo-identity " +
              std::to_string(bad_identity) + ", constant " + std::to_string(bad_constant) +
              ", linearization " + std::to_string(bad_linear) + ", norming " +
              std::to_string(bad_norming) + ", CI " + std::to_string(bad_ci) +
              ", equivariance " + std::to_string(bad_equivariance) + ", permutation " +
              std::to_string(bad_permutation)};
}

Outcome ac9() {
  const TwoSampleData data(Sample({3.1, -0.4, 2.2, 5.0, 1.7, 0.9}),
                           Sample({2.6, 4.1, -1.3, 0.2, 3.3, 1.1}));
  const auto stat = pair_mean_statistic();
  const auto rep = delete_d_jackknife(stat, data, {.d = 2});
  // Brute force over all 6-bit masks with exactly two bits set.
  const double full = stat.evaluate(data);
  double ss = 0.0;
  int subsets = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 2) continue;
    std::vector<double> a, b;
    for (unsigned i = 0; i < 6; ++i) {
      if (mask & (1u << i)) continue;
      a.push_back(data.sample1()[i]);
      b.push_back(data.sample2()[i]);
    }
    const double t = stat.evaluate(a, b);
    ss += (t - full) * (t - full);
    ++subsets;
  }
  const double want = 4.0 / (2.0 * subsets) * ss;
  const bool ok = rep.enumerated && rep.subsets == 15 && subsets == 15 &&
                  std::abs(rep.variance - want) <= 1e-12;
  return {ok, "module " + num(rep.variance, 17) + ", brute force " + num(want, 17) + " over " +
                  std::to_string(subsets) + " subsets"};
}

Outcome ac10() {
  const auto model = SimulationModel::make(1);
  const std::size_t n = 2000;
  const std::size_t reps = 200;
  const PopulationParams params{0.5, 0.5, 1.0, 4.0, model.mu};
  const double gamma = 1.0 / (1.0 + 1.0 / 4.0);  // ordered-branch GD weight at theta
  const double sigma2 = asymptotic_variance_formula(gamma, params);
  const auto stat = make_statistic(EstimatorSpec::graybill_deal());
  std::vector<double> ratio(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    auto r1 = Rng::substream(10, {r, 1});
    auto r2 = Rng::substream(10, {r, 2});
    const TwoSampleData data(draw_sample(model, Population::kFirst, n, r1),
                             draw_sample(model, Population::kSecond, n, r2));
    const auto rep = jackknife_unequal(stat, data);
    ratio[r] = static_cast<double>(data.n()) * rep.variance / sigma2;
  }
  double mean = 0.0;
  for (double x : ratio) mean += x;
  mean /= static_cast<double>(reps);
  return {mean >= 0.9 && mean <= 1.1,
          "mean n*Var_jack/sigma^2(gamma) = " + num(mean, 5) + " (sigma^2 = " + num(sigma2) +
              ", gamma = " + num(gamma) + ")"};
}

Outcome ac11() {
  const auto model = SimulationModel::make(1);
  const std::size_t reps = 20000;
  std::vector<double> p;
  for (std::size_t n : {10u, 40u, 160u}) p.push_back(misordering_probability(model, n, reps, 11));
  bool ok = true;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const double se = std::sqrt((p[k] * (1 - p[k]) + p[k + 1] * (1 - p[k + 1])) / reps);
    ok = ok && p[k + 1] <= p[k] + 3 * se;
  }
  return {ok, "P(S1^2 > S2^2) at N = 10, 40, 160: " + num(p[0], 5) + ", " + num(p[1], 5) +
                  ", " + num(p[2], 5)};
}

Outcome ac12() {
  const std::vector<std::string> base = {"coverage", "--model", "1,2,4", "--n", "15,30",
                                         "--reps", "400", "--bootstrap-b", "100,200",
                                         "--seed", "12"};
  auto capture = [&](const std::string& workers) {
    auto args = base;
    args.insert(args.end(), {"--workers", workers});
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, in, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = capture("1");
  const auto b = capture("1");
  const auto c = capture("4");
  const bool ok = a.first == 0 && !a.second.empty() && a == b && a == c;
  return {ok, std::to_string(a.second.size()) + " bytes; repeat identical: " +
                  (a == b ? "yes" : "no") + ", 1 vs 4 workers identical: " +
                  (a == c ? "yes" : "no")};
}

}  // namespace
}  // namespace twojack::acceptance

int main() {
  using namespace twojack::acceptance;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  gravity GD estimate", ac1},
      {"AC2  gravity GD asymptotic sd and interval", ac2},
      {"AC3  gravity GD jackknife sd", ac3},
      {"AC4  gravity Nair jackknife sd and lower endpoint", ac4},
      {"AC5  child GD estimate, sds and lower endpoint", ac5},
      {"AC6  child Nair jackknife sd and lower endpoint", ac6},
      {"AC7a model 1 jackknife coverage near 0.95", ac7a},
      {"AC7b jackknife coverage not below bootstrap", ac7b},
      {"AC8  exactness properties", ac8},
      {"AC9  delete-d enumeration equals brute force", ac9},
      {"AC10 jackknife consistency at N = 2000", ac10},
      {"AC11 misordering probability decays", ac11},
      {"AC12 coverage output is deterministic", ac12},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
