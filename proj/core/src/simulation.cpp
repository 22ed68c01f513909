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

#include "twojack/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "twojack/error.hpp"
#include "twojack/parallel.hpp"

namespace twojack {

namespace {

constexpr std::uint64_t kDataStream = 1;
constexpr std::uint64_t kMethodStream = 2;
constexpr std::uint64_t kMisorderStream = 3;

std::vector<double> draw_values(const SimulationModel& model,
                                Population population, std::size_t n, Rng& rng) {
  const double s = model.sigma(population);
  std::vector<double> out(n);
  switch (model.id) {
    case 1: {
      std::normal_distribution<double> dist(0.0, 1.0);
      for (auto& x : out) x = model.mu + s * dist(rng);
      break;
    }
    case 2: {
      std::student_t_distribution<double> dist(5.0);
      const double scale = s / std::sqrt(5.0 / 3.0);
      for (auto& x : out) x = model.mu + scale * dist(rng);
      break;
    }
    case 3: {
      std::uniform_real_distribution<double> dist(-5.0, 5.0);
      const double scale = s / std::sqrt(25.0 / 3.0);
      for (auto& x : out) x = model.mu + scale * dist(rng);
      break;
    }
    default: {
      const double a = model.gamma_shape();
      std::gamma_distribution<double> dist(a, s);
      for (auto& x : out) x = model.mu + s * (dist(rng) - a * s);
      break;
    }
  }
  return out;
}

}  // namespace

SimulationModel SimulationModel::make(int id, double sigma1, double sigma2,
                                      double mu) {
  SimulationModel m;
  m.id = id;
  m.sigma1 = sigma1;
  m.sigma2 = sigma2;
  m.mu = mu;
  validate(m);
  return m;
}

double SimulationModel::gamma_shape() const noexcept {
  if (shape > 0.0) return shape;
  if (id == 4) return 1.5;
  if (id == 5) return 2.5;
  return 0.0;
}

void validate(const SimulationModel& model) {
  if (model.id < 1 || model.id > 5) {
    throw Error(ErrorCode::kInvalidModel,
                "model id must be 1..5, got " + std::to_string(model.id));
  }
  if (!(model.sigma1 > 0.0) || !(model.sigma2 > 0.0) ||
      !std::isfinite(model.sigma1) || !std::isfinite(model.sigma2)) {
    throw Error(ErrorCode::kInvalidModel, "sigma1 and sigma2 must be positive");
  }
  if (model.sigma1 > model.sigma2) {
    throw Error(ErrorCode::kInvalidModel,
                "models are ordered: sigma1 must not exceed sigma2");
  }
  if (!std::isfinite(model.mu)) {
    throw Error(ErrorCode::kInvalidModel, "mu must be finite");
  }
}

double population_variance(const SimulationModel& model, Population p) {
  const double s = model.sigma(p);
  if (model.id >= 4) return model.gamma_shape() * s * s * s * s;
  return s * s;
}

Sample draw_sample(const SimulationModel& model, Population population,
                   std::size_t n, Rng& rng) {
  validate(model);
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "sample size must be >= 1");
  return Sample(draw_values(model, population, n, rng));
}

std::vector<CoverageResult> coverage_experiment(const CoverageConfig& config) {
  validate(config.model);
  if (config.reps < 1) throw Error(ErrorCode::kInvalidArgument, "reps must be >= 1");
  if (config.n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "coverage needs n >= 3 per sample");
  }
  const auto methods = config.methods.size();
  const double z = critical_value(config.level, config.z_style);
  const double mu = config.model.mu;

  // Row-major [rep][method].
  std::vector<std::uint8_t> hits(config.reps * methods, kFailed);
  std::vector<double> widths(config.reps * methods, 0.0);
  std::vector<std::size_t> evals(config.reps * methods, 0);

  parallel_for(config.reps, config.workers, [&](std::size_t r) {
    Rng rng1 = Rng::substream(config.seed, {kDataStream, r, 1});
    Rng rng2 = Rng::substream(config.seed, {kDataStream, r, 2});
    const TwoSampleData data(
        Sample(draw_values(config.model, Population::kFirst, config.n, rng1)),
        Sample(draw_values(config.model, Population::kSecond, config.n, rng2)));
    double center = 0.0;
    try {
      center = estimate_common_mean(data, config.estimator).value;
    } catch (const Error&) {
      return;  // every method stays kFailed
    }
    for (std::size_t m = 0; m < methods; ++m) {
      VarianceMethod method = config.methods[m];
      const auto key = derive_key(config.seed, {kMethodStream, r, m});
      if (auto* b = std::get_if<BootstrapMethod>(&method)) b->seed = key;
      if (auto* d = std::get_if<DeleteDMethod>(&method)) d->seed = key;
      try {
        const auto v = estimate_variance(config.estimator, data, method);
        const double half = z * v.sd;
        const auto slot = r * methods + m;
        hits[slot] = (center - half <= mu && mu <= center + half) ? kCovered : kMissed;
        widths[slot] = 2.0 * half;
        evals[slot] = v.evaluations;
      } catch (const Error&) {
      }
    }
  });

  std::vector<CoverageResult> out;
  out.reserve(methods);
  for (std::size_t m = 0; m < methods; ++m) {
    CoverageResult res;
    res.model = config.model.id;
    res.n = config.n;
    res.method = config.methods[m];
    res.label = method_label(config.methods[m]);
    res.reps = config.reps;
    res.seed = config.seed;
    res.hits.resize(config.reps);
    double width_sum = 0.0;
    for (std::size_t r = 0; r < config.reps; ++r) {
      const auto slot = r * methods + m;
      res.hits[r] = hits[slot];
      res.evaluations += evals[slot];
      if (hits[slot] == kFailed) {
        ++res.failures;
        continue;
      }
      if (hits[slot] == kCovered) ++res.covered;
      width_sum += widths[slot];
    }
    const auto used = res.reps - res.failures;
    if (used > 0) {
      res.coverage = static_cast<double>(res.covered) / static_cast<double>(used);
      res.mean_ci_width = width_sum / static_cast<double>(used);
    }
    out.push_back(std::move(res));
  }
  return out;
}

double misordering_probability(const SimulationModel& model, std::size_t n,
                               std::size_t reps, std::uint64_t seed,
                               unsigned workers) {
  validate(model);
  if (n < 2) throw Error(ErrorCode::kTooFewObservations, "need n >= 2");
  if (reps < 1) throw Error(ErrorCode::kInvalidArgument, "reps must be >= 1");
  std::vector<std::uint8_t> flips(reps, 0);
  parallel_for(reps, workers, [&](std::size_t r) {
    Rng rng1 = Rng::substream(seed, {kMisorderStream, r, 1});
    Rng rng2 = Rng::substream(seed, {kMisorderStream, r, 2});
    const auto a = summarize(draw_values(model, Population::kFirst, n, rng1));
    const auto b = summarize(draw_values(model, Population::kSecond, n, rng2));
    flips[r] = a.var_unbiased > b.var_unbiased ? 1 : 0;
  });
  std::size_t count = 0;
  for (auto f : flips) count += f;
  return static_cast<double>(count) / static_cast<double>(reps);
}

double binomial_upper_tail(std::size_t k, std::size_t trials, double p) {
  if (k == 0) return 1.0;
  if (k > trials || p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const auto nd = static_cast<double>(trials);
  double tail = 0.0;
  for (std::size_t i = k; i <= trials; ++i) {
    const auto id = static_cast<double>(i);
    const double log_pmf = std::lgamma(nd + 1.0) - std::lgamma(id + 1.0) -
                           std::lgamma(nd - id + 1.0) + id * std::log(p) +
                           (nd - id) * std::log1p(-p);
    tail += std::exp(log_pmf);
  }
  return std::min(tail, 1.0);
}

PairedComparison paired_coverage_test(const CoverageResult& first,
                                      const CoverageResult& second) {
  if (first.hits.size() != second.hits.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "paired comparison needs the same replications");
  }
  PairedComparison out;
  for (std::size_t r = 0; r < first.hits.size(); ++r) {
    const auto a = first.hits[r];
    const auto b = second.hits[r];
    if (a == kFailed || b == kFailed) continue;
    if (a == kCovered && b == kMissed) ++out.only_first;
    if (a == kMissed && b == kCovered) ++out.only_second;
  }
  out.p_value = binomial_upper_tail(out.only_second,
                                    out.only_first + out.only_second, 0.5);
  return out;
}

}  // namespace twojack
