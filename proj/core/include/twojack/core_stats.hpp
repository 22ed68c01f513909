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

#ifndef TWOJACK_CORE_STATS_HPP_
#define TWOJACK_CORE_STATS_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace twojack {

/// An ordered, non-empty list of finite measurements.
class Sample {
 public:
  /// Throws Error(kEmptySample) or Error(kNonFiniteValue).
  explicit Sample(std::vector<double> values);
  Sample(std::initializer_list<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const Sample&, const Sample&) = default;

 private:
  std::vector<double> values_;
};

/// Mean and both variance conventions of one sample.
///
/// `var_biased` uses divisor n, `var_unbiased` divisor n - 1. For a single
/// observation the unbiased variance is undefined and reported as NaN.
/// `degenerate` is set when every value is identical (variance exactly 0);
/// this is a flag, not an error, so that weight rules decide what to do.
struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double var_biased = 0.0;
  double var_unbiased = 0.0;
  bool degenerate = false;
};

/// Two-pass summary. Throws Error(kEmptySample) on an empty span.
SummaryStats summarize(std::span<const double> values);
inline SummaryStats summarize(const Sample& sample) {
  return summarize(sample.values());
}

/// Summary of `values` with element `index` removed, computed in O(1) from
/// `full` (the summary of all of `values`). Falls back to an exact two-pass
/// recomputation when the downdated sum of squares has lost most of its
/// significant digits, so degenerate leave-outs are reported exactly.
SummaryStats summarize_without(std::span<const double> values,
                               const SummaryStats& full, std::size_t index);

struct Linearization {
  double linear_part = 0.0;
  double remainder = 0.0;
};

/// Exact decomposition of the biased sample variance around (mu, sigma2):
///
///   var_biased - sigma2 = linear_part - remainder
///   linear_part = mean((x_i - mu)^2) - sigma2
///   remainder   = (mean(x_i - mu))^2
///
/// The identity is algebraic and holds for every input up to roundoff.
Linearization linearization_decomposition(std::span<const double> values,
                                          double mu, double sigma2);

}  // namespace twojack

#endif  // TWOJACK_CORE_STATS_HPP_
