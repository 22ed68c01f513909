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

#ifndef TWOJACK_TOOLS_COMMANDS_HPP_
#define TWOJACK_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twojack/inference.hpp"

namespace twojack::cli {

inline constexpr std::uint64_t kDefaultSeed = 20261018;
inline constexpr const char* kSeedEnv = "TWOJACK_SEED";

struct AnalyzeOptions {
  std::string data;
  std::string data1;
  std::string data2;
  std::string builtin;
  std::string estimator = "gd";
  std::vector<std::string> methods;
  double level = 0.95;
  std::string z_style = "exact";
  std::string norming = "unbiased";
  std::string centering = "pooled";
  std::optional<std::uint64_t> seed;
  std::string format = "tsv";
};

struct CoverageOptions {
  std::string models = "1";
  std::string n = "25,50,75";
  std::size_t reps = 1000;
  std::string bootstrap_b = "100..1000:100";
  std::optional<std::uint64_t> seed;
  double sigma1 = 1.0;
  double sigma2 = 2.0;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::string estimator = "gd";
  double level = 0.95;
  std::string z_style = "exact";
  std::string format = "tsv";
};

struct DatasetsOptions {
  std::string name;  // empty for `list`
  std::string format;
};

struct SimulateOptions {
  int model = 1;
  std::size_t n = 50;
  std::optional<std::size_t> n2;
  std::optional<std::uint64_t> seed;
  double sigma1 = 1.0;
  double sigma2 = 2.0;
};

// Each command throws twojack::Error on failure; run_cli maps the error
// category to an exit code.
void run_analyze(const AnalyzeOptions& options, std::istream& in, std::ostream& out);
void run_coverage(const CoverageOptions& options, std::ostream& out);
void run_datasets_list(const DatasetsOptions& options, std::ostream& out);
void run_datasets_show(const DatasetsOptions& options, std::ostream& out);
void run_simulate(const SimulateOptions& options, std::ostream& out);

/// The flag if given, else $TWOJACK_SEED, else kDefaultSeed.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag);

ZStyle parse_z_style(std::string_view text);

double parse_real(std::string_view text, std::string_view what);
std::uint64_t parse_count(std::string_view text, std::string_view what);

}  // namespace twojack::cli

#endif  // TWOJACK_TOOLS_COMMANDS_HPP_
