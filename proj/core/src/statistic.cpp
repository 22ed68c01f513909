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

#include "twojack/statistic.hpp"

#include "twojack/error.hpp"

namespace twojack {

TwoSampleStatistic::TwoSampleStatistic(std::string name, RawFn raw,
                                       SummaryFn summary)
    : name_(std::move(name)), raw_(std::move(raw)), summary_(std::move(summary)) {
  if (!raw_) throw Error(ErrorCode::kInvalidArgument, "statistic has no raw form");
}

TwoSampleStatistic TwoSampleStatistic::from_summaries(std::string name,
                                                      SummaryFn summary) {
  auto raw = [summary](std::span<const double> a, std::span<const double> b) {
    return summary(summarize(a), summarize(b));
  };
  return TwoSampleStatistic(std::move(name), std::move(raw), std::move(summary));
}

double TwoSampleStatistic::evaluate_summaries(const SummaryStats& s1,
                                              const SummaryStats& s2) const {
  if (!summary_) {
    throw Error(ErrorCode::kInvalidArgument,
                "statistic '" + name_ + "' has no summary form");
  }
  return summary_(s1, s2);
}

TwoSampleStatistic pooled_mean_statistic() {
  return TwoSampleStatistic::from_summaries(
      "pooled-mean", [](const SummaryStats& a, const SummaryStats& b) {
        const auto n1 = static_cast<double>(a.n);
        const auto n2 = static_cast<double>(b.n);
        return (n1 * a.mean + n2 * b.mean) / (n1 + n2);
      });
}

TwoSampleStatistic pair_mean_statistic() {
  return TwoSampleStatistic::from_summaries(
      "pair-mean", [](const SummaryStats& a, const SummaryStats& b) {
        return 0.5 * (a.mean + b.mean);
      });
}

TwoSampleStatistic constant_statistic(double value) {
  return TwoSampleStatistic(
      "constant",
      [value](std::span<const double>, std::span<const double>) { return value; },
      [value](const SummaryStats&, const SummaryStats&) { return value; });
}

}  // namespace twojack
