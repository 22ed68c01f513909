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

#include "twojack/core_stats.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "twojack/error.hpp"

namespace twojack {

namespace {

void validate(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptySample, "sample has no values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "value at position " + std::to_string(i) + " is not finite");
    }
  }
}

SummaryStats from_moments(std::size_t n, double mean, double m2,
                          bool degenerate) {
  SummaryStats s;
  s.n = n;
  s.mean = mean;
  s.var_biased = m2 / static_cast<double>(n);
  s.var_unbiased = n > 1 ? m2 / static_cast<double>(n - 1)
                         : std::numeric_limits<double>::quiet_NaN();
  s.degenerate = degenerate;
  return s;
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  validate(values_);
}

Sample::Sample(std::initializer_list<double> values)
    : Sample(std::vector<double>(values)) {}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptySample, "sample has no values");
  const auto n = values.size();
  double sum = 0.0;
  for (double x : values) sum += x;
  const double mean = sum / static_cast<double>(n);

  // Second pass with the usual correction term for the rounded mean.
  double m2 = 0.0;
  double drift = 0.0;
  bool degenerate = true;
  for (double x : values) {
    const double d = x - mean;
    m2 += d * d;
    drift += d;
    if (x != values[0]) degenerate = false;
  }
  m2 -= drift * drift / static_cast<double>(n);
  if (degenerate || m2 < 0.0) m2 = 0.0;
  return from_moments(n, mean, m2, degenerate);
}

SummaryStats summarize_without(std::span<const double> values,
                               const SummaryStats& full, std::size_t index) {
  const auto n = full.n;
  if (n < 2) {
    throw Error(ErrorCode::kTooFewObservations,
                "cannot remove an observation from a sample of size " +
                    std::to_string(n));
  }
  const double x = values[index];
  const double m = static_cast<double>(n - 1);
  const double mean = full.mean + (full.mean - x) / m;
  const double m2_full = full.var_biased * static_cast<double>(n);
  const double m2 = m2_full - (x - full.mean) * (x - mean);

  // Cancellation guard: exact recomputation when the result is tiny relative
  // to the terms that produced it.
  const double scale = m2_full + (x - full.mean) * (x - full.mean);
  if (full.degenerate || m2 <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    std::vector<double> rest;
    rest.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != index) rest.push_back(values[i]);
    }
    return summarize(rest);
  }
  return from_moments(n - 1, mean, m2, false);
}

Linearization linearization_decomposition(std::span<const double> values,
                                          double mu, double sigma2) {
  if (values.empty()) throw Error(ErrorCode::kEmptySample, "sample has no values");
  const auto n = static_cast<double>(values.size());
  double sum_sq = 0.0;
  double sum = 0.0;
  for (double x : values) {
    const double d = x - mu;
    sum_sq += d * d;
    sum += d;
  }
  const double centered_mean = sum / n;
  return {sum_sq / n - sigma2, centered_mean * centered_mean};
}

}  // namespace twojack
