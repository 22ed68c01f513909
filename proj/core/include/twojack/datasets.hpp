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

#ifndef TWOJACK_DATASETS_HPP_
#define TWOJACK_DATASETS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twojack/statistic.hpp"

namespace twojack {

struct NamedDataset {
  std::string name;
  TwoSampleData data;
  std::string description;
  std::string source;
};

/// Published summary of a dataset whose raw values are not available.
struct SummaryRecord {
  std::string name;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double sd1 = 0.0;
  double sd2 = 0.0;
  std::string description;
  std::string source;
};

struct DatasetInfo {
  std::string name;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::string source;
  std::string description;
  bool summary_only = false;
};

/// All builtin entries, raw and summary-only, in a stable order.
std::vector<DatasetInfo> list_builtins();

/// "gravity", "child-girls-first" or "child-boys-first".
/// Error(kUnknownDataset) otherwise, including for summary-only entries.
NamedDataset load_builtin(std::string_view name);

/// Summary-only entries ("chip"); nullopt for unknown names.
std::optional<SummaryRecord> builtin_summary(std::string_view name);

// CSV ingestion.
//
// Two-column form (header required):
//     sample,value
//     1,78
//     2,84
// Blank lines and lines starting with '#' are ignored. Values keep input order.
//
// Two-file form: one value per line in each file, same comment rules.

TwoSampleData read_csv(std::istream& in);
TwoSampleData read_csv(const std::filesystem::path& path);
TwoSampleData read_value_files(const std::filesystem::path& sample1,
                               const std::filesystem::path& sample2);

/// Writes the two-column form; values use the shortest exact decimal form.
void write_csv(std::ostream& out, const TwoSampleData& data);

}  // namespace twojack

#endif  // TWOJACK_DATASETS_HPP_
