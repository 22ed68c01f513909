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

#ifndef TWOJACK_SIMULATION_HPP_
#define TWOJACK_SIMULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twojack/core_stats.hpp"
#include "twojack/estimators.hpp"
#include "twojack/inference.hpp"
#include "twojack/rng.hpp"

namespace twojack {

// Monte Carlo coverage study for common-mean confidence intervals.
//
// Models (population i has scale sigma_i):
//   1  mu + sigma_i Z,                Z ~ N(0,1)
//   2  mu + sigma_i T / sqrt(5/3),    T ~ t(5)
//   3  mu + sigma_i U / sqrt(25/3),   U ~ U(-5,5)
//   4  mu + sigma_i (G - a sigma_i),  G ~ Gamma(shape a = 1.5, scale sigma_i)
//   5  as model 4 with a = 2.5
// Models 1-3 have variance sigma_i^2; models 4-5 have variance a sigma_i^4.

enum class Population { kFirst = 1, kSecond = 2 };

struct SimulationModel {
  int id = 1;
  double mu = 10.0;
  double sigma1 = 1.0;
  double sigma2 = 2.0;
  double shape = 0.0;  // gamma shape; 0 picks the model default

  static SimulationModel make(int id, double sigma1 = 1.0, double sigma2 = 2.0,
                              double mu = 10.0);

  double sigma(Population p) const noexcept {
    return p == Population::kFirst ? sigma1 : sigma2;
  }
  /// 1.5 for model 4, 2.5 for model 5 unless overridden; 0 otherwise.
  double gamma_shape() const noexcept;
};

/// Error(kInvalidModel) for an unknown id, non-positive sigma or
/// sigma1 > sigma2.
void validate(const SimulationModel& model);

double population_variance(const SimulationModel& model, Population p);

Sample draw_sample(const SimulationModel& model, Population population,
                   std::size_t n, Rng& rng);

struct CoverageConfig {
  SimulationModel model;
  std::size_t n = 50;  // per sample (balanced design)
  std::size_t reps = 1000;
  std::vector<VarianceMethod> methods;
  EstimatorSpec estimator = EstimatorSpec::graybill_deal();
  std::uint64_t seed = 0;
  double level = 0.95;
  ZStyle z_style = ZStyle::kExact;
  unsigned workers = 1;
};

// Per-replication outcome codes in CoverageResult::hits.
inline constexpr std::uint8_t kMissed = 0;
inline constexpr std::uint8_t kCovered = 1;
inline constexpr std::uint8_t kFailed = 2;

struct CoverageResult {
  int model = 1;
  std::size_t n = 0;
  VarianceMethod method;
  std::string label;
  double coverage = 0.0;  // covered / (reps - failures)
  std::size_t reps = 0;
  std::size_t covered = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  double mean_ci_width = 0.0;
  std::size_t evaluations = 0;     // statistic evaluations, all replications
  std::vector<std::uint8_t> hits;  // one outcome code per replication
};

/// Replication r draws both samples from substreams keyed by (seed, r), so
/// every method sees the same data and results do not depend on `workers`.
std::vector<CoverageResult> coverage_experiment(const CoverageConfig& config);

/// Empirical P(S~1^2 > S~2^2) over `reps` balanced draws of size n.
double misordering_probability(const SimulationModel& model, std::size_t n,
                               std::size_t reps, std::uint64_t seed,
                               unsigned workers = 1);

/// P(X >= k) for X ~ Binomial(trials, p).
double binomial_upper_tail(std::size_t k, std::size_t trials, double p);

/// Exact one-sided sign test on paired coverage outcomes.
struct PairedComparison {
  std::size_t only_first = 0;   // first covered, second missed
  std::size_t only_second = 0;  // second covered, first missed
  // P(only_second >= observed | discordant pairs split 50/50); small values
  // are evidence that the first method covers less often than the second.
  double p_value = 1.0;
};

PairedComparison paired_coverage_test(const CoverageResult& first,
                                      const CoverageResult& second);

}  // namespace twojack

#endif  // TWOJACK_SIMULATION_HPP_
