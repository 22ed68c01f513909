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

#ifndef TWOJACK_STATISTIC_HPP_
#define TWOJACK_STATISTIC_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "twojack/core_stats.hpp"

namespace twojack {

/// Raw measurements of the two populations.
class TwoSampleData {
 public:
  TwoSampleData(Sample sample1, Sample sample2)
      : sample1_(std::move(sample1)), sample2_(std::move(sample2)) {}

  const Sample& sample1() const noexcept { return sample1_; }
  const Sample& sample2() const noexcept { return sample2_; }
  std::size_t n1() const noexcept { return sample1_.size(); }
  std::size_t n2() const noexcept { return sample2_.size(); }
  std::size_t n() const noexcept { return n1() + n2(); }
  bool balanced() const noexcept { return n1() == n2(); }

  friend bool operator==(const TwoSampleData&, const TwoSampleData&) = default;

 private:
  Sample sample1_;
  Sample sample2_;
};

/// A real-valued statistic of two samples, symmetric within each sample.
///
/// Every statistic has a raw form evaluated on the two value lists. Statistics
/// that depend on the data only through per-sample summaries (all common-mean
/// estimators) also carry a summary form; resampling routines use it to get
/// leave-one-out values from cached summaries instead of copying samples.
class TwoSampleStatistic {
 public:
  using RawFn =
      std::function<double(std::span<const double>, std::span<const double>)>;
  using SummaryFn =
      std::function<double(const SummaryStats&, const SummaryStats&)>;

  TwoSampleStatistic(std::string name, RawFn raw, SummaryFn summary = {});

  /// Builds a statistic whose raw form summarizes both samples first.
  static TwoSampleStatistic from_summaries(std::string name, SummaryFn summary);

  const std::string& name() const noexcept { return name_; }
  bool has_summary_form() const noexcept { return static_cast<bool>(summary_); }

  double evaluate(std::span<const double> sample1,
                  std::span<const double> sample2) const {
    return raw_(sample1, sample2);
  }
  double evaluate(const TwoSampleData& data) const {
    return raw_(data.sample1().values(), data.sample2().values());
  }
  double evaluate_summaries(const SummaryStats& s1, const SummaryStats& s2) const;

 private:
  std::string name_;
  RawFn raw_;
  SummaryFn summary_;
};

/// (n1 * mean1 + n2 * mean2) / n, the mean of the pooled observations.
TwoSampleStatistic pooled_mean_statistic();

/// (mean1 + mean2) / 2; for balanced data the mean of the pair averages.
TwoSampleStatistic pair_mean_statistic();

TwoSampleStatistic constant_statistic(double value);

}  // namespace twojack

#endif  // TWOJACK_STATISTIC_HPP_
