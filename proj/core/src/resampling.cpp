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

#include "twojack/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <string>

#include "twojack/error.hpp"
#include "twojack/parallel.hpp"
#include "twojack/rng.hpp"

namespace twojack {

namespace {

// Substream tag for delete-d subset sampling.
constexpr std::uint64_t kDeleteDStream = 0xDE1E7EDULL;

// Deviations are taken about the first element before averaging, so a
// constant vector yields exactly zero and large offsets do not cancel.
double sum_sq_dev(std::span<const double> v) {
  const double origin = v.front();
  double s = 0.0;
  for (double x : v) s += x - origin;
  const double m = s / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) {
    const double d = (x - origin) - m;
    ss += d * d;
  }
  return ss;
}

double variance_of(std::span<const double> v, Norming norming) {
  const auto n = v.size();
  const double divisor = norming == Norming::kUnbiased
                             ? static_cast<double>(n - 1)
                             : static_cast<double>(n);
  return sum_sq_dev(v) / divisor;
}

// Evaluates fn(), turning a library error into an indexed evaluation error.
template <class Fn>
double guarded(std::size_t index, Fn&& fn) {
  try {
    return fn();
  } catch (const StatisticEvaluationError&) {
    throw;
  } catch (const Error& e) {
    throw StatisticEvaluationError(index, e.code(), e.what());
  }
}

std::vector<double> without(std::span<const double> values, std::size_t index) {
  std::vector<double> out;
  out.reserve(values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != index) out.push_back(values[i]);
  }
  return out;
}

bool use_summaries(const TwoSampleStatistic& statistic, LeaveOutPath path) {
  return path == LeaveOutPath::kAuto && statistic.has_summary_form();
}

void finish(JackknifeReport& r, double n_for_variance) {
  r.variance = r.sigma_sq / n_for_variance;
  r.sd = std::sqrt(r.variance);
}

}  // namespace

std::string_view norming_name(Norming norming) {
  return norming == Norming::kUnbiased ? "unbiased" : "plugin";
}

std::string_view centering_name(Centering centering) {
  return centering == Centering::kStratified ? "stratified" : "pooled";
}

std::string_view jackknife_mode_name(JackknifeMode mode) {
  switch (mode) {
    case JackknifeMode::kUnequal: return "unequal";
    case JackknifeMode::kPaired: return "paired";
    case JackknifeMode::kDeleteD: return "delete-d";
  }
  return "unknown";
}

JackknifeReport jackknife_unequal(const TwoSampleStatistic& statistic,
                                  const TwoSampleData& data,
                                  const JackknifeOptions& options) {
  const auto n1 = data.n1();
  const auto n2 = data.n2();
  const auto n = n1 + n2;
  if (n1 < 2 || n2 < 2) {
    throw Error(ErrorCode::kTooFewObservations,
                "leave-one-out jackknife needs at least 2 observations per sample");
  }
  const auto x1 = data.sample1().values();
  const auto x2 = data.sample2().values();

  JackknifeReport r;
  r.mode = JackknifeMode::kUnequal;
  r.norming = options.norming;
  r.centering = options.centering;
  r.statistic = statistic.evaluate(x1, x2);
  r.leave_out.assign(n, 0.0);

  if (use_summaries(statistic, options.path)) {
    const auto s1 = summarize(x1);
    const auto s2 = summarize(x2);
    parallel_for(n, options.workers, [&](std::size_t i) {
      r.leave_out[i] = guarded(i, [&] {
        return i < n1 ? statistic.evaluate_summaries(summarize_without(x1, s1, i), s2)
                      : statistic.evaluate_summaries(
                            s1, summarize_without(x2, s2, i - n1));
      });
    });
  } else {
    parallel_for(n, options.workers, [&](std::size_t i) {
      r.leave_out[i] = guarded(i, [&] {
        if (i < n1) {
          const auto reduced = without(x1, i);
          return statistic.evaluate(reduced, x2);
        }
        const auto reduced = without(x2, i - n1);
        return statistic.evaluate(x1, reduced);
      });
    });
  }
  r.evaluations = n + 1;

  const auto nd = static_cast<double>(n);
  r.pseudo.n1 = n1;
  r.pseudo.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.pseudo.values[i] = nd * r.statistic - (nd - 1.0) * r.leave_out[i];
  }
  const std::span<const double> all(r.pseudo.values);
  r.tau1_sq = variance_of(all.first(n1), options.norming);
  r.tau2_sq = variance_of(all.subspan(n1), options.norming);
  if (options.centering == Centering::kStratified) {
    r.sigma_sq = (static_cast<double>(n1) / nd) * r.tau1_sq +
                 (static_cast<double>(n2) / nd) * *r.tau2_sq;
  } else {
    r.sigma_sq = variance_of(all, options.norming);
  }
  finish(r, nd);
  return r;
}

JackknifeReport jackknife_paired(const TwoSampleStatistic& statistic,
                                 const TwoSampleData& data,
                                 const JackknifeOptions& options) {
  if (!data.balanced()) {
    throw Error(ErrorCode::kUnbalancedDesign,
                "leave-one-pair-out jackknife needs n1 = n2 (got " +
                    std::to_string(data.n1()) + " and " +
                    std::to_string(data.n2()) + ")");
  }
  const auto big_n = data.n1();
  if (big_n < 2) {
    throw Error(ErrorCode::kTooFewObservations,
                "leave-one-pair-out jackknife needs at least 2 pairs");
  }
  const auto x1 = data.sample1().values();
  const auto x2 = data.sample2().values();

  JackknifeReport r;
  r.mode = JackknifeMode::kPaired;
  r.norming = options.norming;
  r.statistic = statistic.evaluate(x1, x2);
  r.leave_out.assign(big_n, 0.0);

  if (use_summaries(statistic, options.path)) {
    const auto s1 = summarize(x1);
    const auto s2 = summarize(x2);
    parallel_for(big_n, options.workers, [&](std::size_t i) {
      r.leave_out[i] = guarded(i, [&] {
        return statistic.evaluate_summaries(summarize_without(x1, s1, i),
                                            summarize_without(x2, s2, i));
      });
    });
  } else {
    parallel_for(big_n, options.workers, [&](std::size_t i) {
      r.leave_out[i] = guarded(i, [&] {
        const auto a = without(x1, i);
        const auto b = without(x2, i);
        return statistic.evaluate(a, b);
      });
    });
  }
  r.evaluations = big_n + 1;

  const auto nd = static_cast<double>(big_n);
  r.pseudo.n1 = big_n;
  r.pseudo.values.resize(big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    r.pseudo.values[i] = nd * r.statistic - (nd - 1.0) * r.leave_out[i];
  }
  const double ss = sum_sq_dev(r.leave_out);
  const double ratio = (nd - 1.0) / nd;
  const double factor = options.norming == Norming::kUnbiased ? ratio : ratio * ratio;
  r.variance = factor * ss;
  r.sigma_sq = nd * r.variance;
  r.tau1_sq = r.sigma_sq;
  r.sd = std::sqrt(r.variance);
  return r;
}

std::uint64_t binomial_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // c * (n - k + i) / i is exact at every step.
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

JackknifeReport delete_d_jackknife(const TwoSampleStatistic& statistic,
                                   const TwoSampleData& data,
                                   const DeleteDOptions& options) {
  if (!data.balanced()) {
    throw Error(ErrorCode::kUnbalancedDesign, "delete-d jackknife needs n1 = n2");
  }
  const auto big_n = data.n1();
  const auto d = options.d;
  if (big_n < 3) {
    throw Error(ErrorCode::kTooFewObservations,
                "delete-d jackknife needs at least 3 pairs");
  }
  if (d < 1 || d + 2 > big_n) {
    throw Error(ErrorCode::kInvalidD, "d must satisfy 1 <= d <= N - 2 (d = " +
                                          std::to_string(d) + ", N = " +
                                          std::to_string(big_n) + ")");
  }
  if (options.enumeration_limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "enumeration limit must be >= 1");
  }
  const auto x1 = data.sample1().values();
  const auto x2 = data.sample2().values();

  // Deleted index sets, d entries per subset.
  std::vector<std::uint32_t> deleted;
  const auto total = binomial_coefficient(big_n, d);
  JackknifeReport r;
  r.mode = JackknifeMode::kDeleteD;
  r.d = d;
  if (total <= options.enumeration_limit) {
    r.enumerated = true;
    std::vector<std::uint32_t> comb(d);
    std::iota(comb.begin(), comb.end(), 0U);
    deleted.reserve(static_cast<std::size_t>(total) * d);
    while (true) {
      deleted.insert(deleted.end(), comb.begin(), comb.end());
      std::size_t k = d;
      while (k > 0 && comb[k - 1] == big_n - d + k - 1) --k;
      if (k == 0) break;
      ++comb[k - 1];
      for (std::size_t j = k; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
  } else {
    r.enumerated = false;
    Rng rng = Rng::substream(options.seed, {kDeleteDStream, d});
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> perm(big_n);
    while (seen.size() < options.enumeration_limit) {
      std::iota(perm.begin(), perm.end(), 0U);
      for (std::size_t j = 0; j < d; ++j) {
        const auto pick = j + rng.below(big_n - j);
        std::swap(perm[j], perm[pick]);
      }
      std::vector<std::uint32_t> subset(perm.begin(), perm.begin() + d);
      std::sort(subset.begin(), subset.end());
      if (seen.insert(subset).second) {
        deleted.insert(deleted.end(), subset.begin(), subset.end());
      }
    }
  }
  const std::size_t count = deleted.size() / d;
  r.subsets = count;
  r.statistic = statistic.evaluate(x1, x2);
  r.leave_out.assign(count, 0.0);

  parallel_for(count, options.workers, [&](std::size_t s) {
    const std::span<const std::uint32_t> drop(deleted.data() + s * d, d);
    std::vector<double> a;
    std::vector<double> b;
    a.reserve(big_n - d);
    b.reserve(big_n - d);
    std::size_t k = 0;
    for (std::size_t i = 0; i < big_n; ++i) {
      if (k < d && drop[k] == i) {
        ++k;
        continue;
      }
      a.push_back(x1[i]);
      b.push_back(x2[i]);
    }
    r.leave_out[s] = guarded(s, [&] { return statistic.evaluate(a, b); });
  });
  r.evaluations = count + 1;

  double ss = 0.0;
  for (double t : r.leave_out) ss += (t - r.statistic) * (t - r.statistic);
  const auto retained = static_cast<double>(big_n - d);
  r.variance = retained / (static_cast<double>(d) * static_cast<double>(count)) * ss;
  r.sigma_sq = static_cast<double>(big_n) * r.variance;
  r.tau1_sq = r.sigma_sq;
  r.sd = std::sqrt(r.variance);
  return r;
}

BootstrapResult bootstrap_variance(const TwoSampleStatistic& statistic,
                                   const TwoSampleData& data,
                                   const BootstrapOptions& options) {
  if (options.replicates < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bootstrap needs B >= 2");
  }
  const auto x1 = data.sample1().values();
  const auto x2 = data.sample2().values();
  const auto n1 = x1.size();
  const auto n2 = x2.size();

  BootstrapResult out;
  out.seed = options.seed;
  out.replicates.assign(options.replicates, 0.0);
  std::vector<std::size_t> retries(options.replicates, 0);

  parallel_for(options.replicates, options.workers, [&](std::size_t b) {
    Rng rng = Rng::substream(options.seed, {b});
    std::vector<double> r1(n1);
    std::vector<double> r2(n2);
    for (std::size_t attempt = 0;; ++attempt) {
      for (auto& v : r1) v = x1[rng.below(n1)];
      for (auto& v : r2) v = x2[rng.below(n2)];
      try {
        out.replicates[b] = statistic.evaluate(r1, r2);
        retries[b] = attempt;
        return;
      } catch (const Error& e) {
        if (attempt >= options.retry_cap) {
          throw StatisticEvaluationError(
              b, e.code(),
              "retry cap of " + std::to_string(options.retry_cap) +
                  " reached: " + e.what());
        }
      }
    }
  });

  out.retries = std::accumulate(retries.begin(), retries.end(), std::size_t{0});
  out.variance = variance_of(out.replicates, Norming::kUnbiased);
  out.sd = std::sqrt(out.variance);
  return out;
}

}  // namespace twojack
