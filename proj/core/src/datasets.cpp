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

#include "twojack/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "twojack/error.hpp"
#include "twojack/format.hpp"

namespace twojack {

namespace {

// Heyl and Cook acceleration-of-gravity measurements, deviations from
// 980,060 x 10^3 cm/s^2.
const std::vector<double> kGravity1 = {78, 78, 78, 86, 87, 81, 73, 67, 75, 82, 83};
const std::vector<double> kGravity2 = {84, 86, 85, 82, 77, 76, 80, 83, 81, 78, 78, 78};

// Strength of eight-year-old children, seven prefectures of northern Japan.
const std::vector<double> kChildBoys = {52.55, 54.08, 54.25, 52.92,
                                        56.31, 53.63, 52.52};
const std::vector<double> kChildGirls = {52.95, 55.72, 56.14, 54.24,
                                         58.19, 55.32, 54.45};

const SummaryRecord kChip = {
    "chip",
    240,
    240,
    6.293254,
    6.292667,
    0.003785844,
    0.004962341,
    "chip widths from two cutting saws; summary-only, raw data unavailable",
    "technology: chip production"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#';
}

double parse_value(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(line, "cannot parse value '" + std::string(text) + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(line, "value '" + std::string(text) + "' is not finite");
  }
  return v;
}

TwoSampleData make_data(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kMissingSample,
                std::string("sample ") + (a.empty() ? "1" : "2") + " has no values");
  }
  return TwoSampleData(Sample(std::move(a)), Sample(std::move(b)));
}

std::vector<double> read_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<double> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto t = trim(raw);
    if (skippable(t)) continue;
    out.push_back(parse_value(t, line));
  }
  return out;
}

}  // namespace

std::vector<DatasetInfo> list_builtins() {
  return {
      {"gravity", kGravity1.size(), kGravity2.size(), "physics: Heyl and Cook measurements",
       "Heyl and Cook gravity measurements, two series", false},
      {"child-girls-first", kChildGirls.size(), kChildBoys.size(), "social: Japanese child strength survey",
       "Japanese child strength data, girls as sample 1", false},
      {"child-boys-first", kChildBoys.size(), kChildGirls.size(), "social: Japanese child strength survey",
       "Japanese child strength data, boys as sample 1", false},
      {kChip.name, kChip.n1, kChip.n2, kChip.source, kChip.description, true},
  };
}

NamedDataset load_builtin(std::string_view name) {
  if (name == "gravity") {
    return {"gravity", TwoSampleData(Sample(kGravity1), Sample(kGravity2)),
            "Heyl and Cook gravity measurements, two series", "physics: Heyl and Cook measurements"};
  }
  if (name == "child-girls-first") {
    return {"child-girls-first",
            TwoSampleData(Sample(kChildGirls), Sample(kChildBoys)),
            "Japanese child strength data, girls as sample 1", "social: Japanese child strength survey"};
  }
  if (name == "child-boys-first") {
    return {"child-boys-first",
            TwoSampleData(Sample(kChildBoys), Sample(kChildGirls)),
            "Japanese child strength data, boys as sample 1", "social: Japanese child strength survey"};
  }
  if (name == kChip.name) {
    throw Error(ErrorCode::kUnknownDataset,
                "'chip' is summary-only; raw data unavailable");
  }
  throw Error(ErrorCode::kUnknownDataset,
              "no builtin dataset named '" + std::string(name) + "'");
}

std::optional<SummaryRecord> builtin_summary(std::string_view name) {
  if (name == kChip.name) return kChip;
  return std::nullopt;
}

TwoSampleData read_csv(std::istream& in) {
  std::vector<double> a;
  std::vector<double> b;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto t = trim(raw);
    if (skippable(t)) continue;
    if (!header) {
      std::string lowered(t);
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      lowered.erase(std::remove(lowered.begin(), lowered.end(), ' '), lowered.end());
      if (lowered != "sample,value") {
        throw ParseError(line, "expected header 'sample,value'");
      }
      header = true;
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line, "expected 'sample,value'");
    }
    const auto id = trim(t.substr(0, comma));
    const double value = parse_value(trim(t.substr(comma + 1)), line);
    if (id == "1") {
      a.push_back(value);
    } else if (id == "2") {
      b.push_back(value);
    } else {
      throw ParseError(line, "sample id must be 1 or 2, got '" + std::string(id) + "'");
    }
  }
  if (!header) throw ParseError(line, "missing header 'sample,value'");
  return make_data(std::move(a), std::move(b));
}

TwoSampleData read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return read_csv(in);
}

TwoSampleData read_value_files(const std::filesystem::path& sample1,
                               const std::filesystem::path& sample2) {
  return make_data(read_values(sample1), read_values(sample2));
}

void write_csv(std::ostream& out, const TwoSampleData& data) {
  out << "sample,value\n";
  for (double v : data.sample1().values()) out << "1," << format_double(v) << '\n';
  for (double v : data.sample2().values()) out << "2," << format_double(v) << '\n';
}

}  // namespace twojack
