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

#ifndef TWOJACK_RESAMPLING_HPP_
#define TWOJACK_RESAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "twojack/statistic.hpp"

namespace twojack {

// Jackknife and bootstrap variance estimators for two-sample statistics.
//
// Leave-one-out (unequal sizes):
//   xi_i   = n T_n - (n - 1) T_{n,-i}            i = 1..n
//   tau_k^2 = sample variance of the xi_i from sample k
//   sigma^2 = (n1/n) tau_1^2 + (n2/n) tau_2^2,   Var(T_n) = sigma^2 / n
//
// Leave-one-pair-out (n1 = n2 = N):
//   Var(T_N) = f_N * sum_i (T_{N,-i} - mean_j T_{N,-j})^2,  sigma^2 = N Var
//   f_N = (N-1)/N (unbiased) or ((N-1)/N)^2 (plug-in)
//
// Delete-d (n1 = n2 = N, r = N - d retained pairs):
//   Var = r / (d C(N,d)) * sum_s (T^(s) - T_N)^2

enum class Norming {
  kUnbiased,  // divisor n_i - 1 on pseudo-values
  kPlugin,    // divisor n_i
};

/// How pseudo-values of the unequal-size jackknife are centered.
enum class Centering {
  kStratified,  // per-sample means, weighted by n_i / n
  kPooled,      // one grand mean over all n pseudo-values
};

enum class JackknifeMode { kUnequal, kPaired, kDeleteD };

/// Leave-out evaluation strategy. kAuto uses cached per-sample summaries when
/// the statistic has a summary form; kRecompute always copies the reduced
/// samples and calls the raw form (the O(n^2) reference path).
enum class LeaveOutPath { kAuto, kRecompute };

std::string_view norming_name(Norming norming);
std::string_view centering_name(Centering centering);
std::string_view jackknife_mode_name(JackknifeMode mode);

struct PseudoValues {
  std::vector<double> values;
  // Unequal mode: the first n1 values come from sample 1. Paired mode: N.
  std::size_t n1 = 0;
};

struct JackknifeReport {
  JackknifeMode mode = JackknifeMode::kUnequal;
  Norming norming = Norming::kUnbiased;
  Centering centering = Centering::kStratified;
  std::size_t d = 0;

  double statistic = 0.0;  // T on the full data
  double tau1_sq = 0.0;
  std::optional<double> tau2_sq;  // absent in paired / delete-d mode
  double sigma_sq = 0.0;          // asymptotic variance estimate
  double variance = 0.0;          // estimate of Var(T)
  double sd = 0.0;

  PseudoValues pseudo;
  std::vector<double> leave_out;  // T_{n,-i}, T_{N,-i} or T^(s)
  std::size_t subsets = 0;        // delete-d: subsets evaluated
  bool enumerated = true;         // delete-d: exact enumeration
  std::size_t evaluations = 0;    // statistic evaluations incl. full data
};

struct JackknifeOptions {
  Norming norming = Norming::kUnbiased;
  Centering centering = Centering::kStratified;
  LeaveOutPath path = LeaveOutPath::kAuto;
  unsigned workers = 1;
};

JackknifeReport jackknife_unequal(const TwoSampleStatistic& statistic,
                                  const TwoSampleData& data,
                                  const JackknifeOptions& options = {});

/// Error(kUnbalancedDesign) unless n1 = n2.
JackknifeReport jackknife_paired(const TwoSampleStatistic& statistic,
                                 const TwoSampleData& data,
                                 const JackknifeOptions& options = {});

struct DeleteDOptions {
  std::size_t d = 1;
  std::size_t enumeration_limit = 100000;
  std::uint64_t seed = 0;  // used only when sampling subsets
  unsigned workers = 1;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_coefficient(std::size_t n, std::size_t k);

/// Enumerates all C(N,d) subsets when that count fits `enumeration_limit`,
/// otherwise averages over `enumeration_limit` distinct subsets drawn
/// uniformly without replacement.
JackknifeReport delete_d_jackknife(const TwoSampleStatistic& statistic,
                                   const TwoSampleData& data,
                                   const DeleteDOptions& options);

struct BootstrapOptions {
  std::size_t replicates = 1000;
  std::uint64_t seed = 0;
  std::size_t retry_cap = 100;
  unsigned workers = 1;
};

struct BootstrapResult {
  double variance = 0.0;
  double sd = 0.0;
  std::vector<double> replicates;
  std::size_t retries = 0;
  std::uint64_t seed = 0;
};

/// Nonparametric two-sample bootstrap. Replicate b draws n1 indices into
/// sample 1 and then n2 indices into sample 2 from substream (seed, b); a
/// replicate whose statistic fails is redrawn from the same substream up to
/// `retry_cap` times.
BootstrapResult bootstrap_variance(const TwoSampleStatistic& statistic,
                                   const TwoSampleData& data,
                                   const BootstrapOptions& options);

}  // namespace twojack

#endif  // TWOJACK_RESAMPLING_HPP_
