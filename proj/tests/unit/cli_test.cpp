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

#include "twojack_cli/cli.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twojack/error.hpp"

namespace twojack::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  EXPECT_EQ(ec, std::errc());
  EXPECT_EQ(ptr, s.data() + s.size());
  return v;
}

// Parses a TSV table into one column-name -> cell map per row.
std::vector<std::map<std::string, std::string>> table(const std::string& text) {
  std::vector<std::string> lines;
  for (auto& line : split(text, '\n')) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  std::vector<std::map<std::string, std::string>> rows;
  if (lines.empty()) return rows;
  const auto header = split(lines[0], '\t');
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], '\t');
    EXPECT_EQ(cells.size(), header.size());
    std::map<std::string, std::string> row;
    for (std::size_t k = 0; k < header.size() && k < cells.size(); ++k) {
      row[header[k]] = cells[k];
    }
    rows.push_back(row);
  }
  return rows;
}

TEST(AnalyzeTest, GravityGraybillDealTable) {
  const auto r = run({"analyze", "--builtin", "gravity", "--estimator", "gd", "--method",
                      "clt", "--method", "jackknife", "--z-style", "paper"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = table(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(to_double(rows[0].at("estimate")), 80.26123, 1e-4);
  EXPECT_NEAR(to_double(rows[0].at("sd")), 0.8455307, 1e-4);
  EXPECT_NEAR(to_double(rows[0].at("ci_lower")), 78.60399, 1e-4);
  EXPECT_NEAR(to_double(rows[0].at("ci_upper")), 81.91847, 1e-4);
  EXPECT_EQ(rows[1].at("method"), "jackknife-unequal-pooled");
  EXPECT_NEAR(to_double(rows[1].at("sd")), 0.8492987, 0.8492987e-3);
}

TEST(AnalyzeTest, ChildNairTable) {
  const auto r = run({"analyze", "--builtin", "child-girls-first", "--estimator", "nair",
                      "--method", "jackknife", "--z-style", "paper"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = table(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("method"), "jackknife-paired");
  EXPECT_NEAR(to_double(rows[0].at("sd")), 0.5593932, 0.5593932e-3);
  EXPECT_NEAR(to_double(rows[0].at("ci_lower")), 53.42288, 1e-3);
}

TEST(AnalyzeTest, FixedWeightOneCollapsesToFirstSample) {
  const auto r = run({"analyze", "--builtin", "gravity", "--estimator", "fixed:1",
                      "--method", "clt"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = table(r.out);
  EXPECT_NEAR(to_double(rows[0].at("estimate")), 868.0 / 11.0, 1e-12);
  EXPECT_NEAR(to_double(rows[0].at("sd")), std::sqrt(34.0909090909 / 11.0), 1e-9);
}

TEST(AnalyzeTest, WidthIsUpperMinusLower) {
  const auto r = run({"analyze", "--builtin", "gravity", "--method", "clt", "--method",
                      "jackknife", "--method", "bootstrap:200", "--method",
                      "jackknife-unequal"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : table(r.out)) {
    EXPECT_EQ(to_double(row.at("width")),
              to_double(row.at("ci_upper")) - to_double(row.at("ci_lower")));
  }
}

TEST(AnalyzeTest, JsonAndTsvCarryIdenticalNumbers) {
  const std::vector<std::string> base = {"analyze", "--builtin", "child-girls-first",
                                         "--method", "clt", "--method", "jackknife",
                                         "--method", "bootstrap:300", "--method",
                                         "delete-d:2", "--seed", "11"};
  auto tsv_args = base;
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto tsv = run(tsv_args);
  const auto json = run(json_args);
  ASSERT_EQ(tsv.code, 0) << tsv.err;
  ASSERT_EQ(json.code, 0) << json.err;
  const auto rows = table(tsv.out);
  const auto j = nlohmann::json::parse(json.out);
  ASSERT_EQ(rows.size(), j["rows"].size());
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 11u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& jr = j["rows"][i];
    EXPECT_EQ(rows[i].at("method"), jr["method"].get<std::string>());
    EXPECT_EQ(to_double(rows[i].at("estimate")), j["estimate"].get<double>());
    EXPECT_EQ(to_double(rows[i].at("gamma")), j["gamma"].get<double>());
    for (const char* key : {"variance", "sd", "z", "ci_lower", "ci_upper", "width"}) {
      EXPECT_EQ(to_double(rows[i].at(key)), jr[key].get<double>()) << key;
    }
  }
}

TEST(AnalyzeTest, PrintsAtLeastSevenSignificantDigits) {
  const auto r = run({"analyze", "--builtin", "gravity", "--method", "clt"});
  const auto rows = table(r.out);
  EXPECT_GE(rows[0].at("sd").size(), 9u);  // "0." plus seven digits
}

TEST(AnalyzeTest, StdinPipelineMatchesBuiltin) {
  const auto shown = run({"datasets", "show", "gravity"});
  ASSERT_EQ(shown.code, 0);
  const auto piped = run({"analyze", "--data", "-", "--estimator", "gd", "--method", "clt"},
                         shown.out);
  const auto direct =
      run({"analyze", "--builtin", "gravity", "--estimator", "gd", "--method", "clt"});
  ASSERT_EQ(piped.code, 0) << piped.err;
  auto a = table(piped.out);
  auto b = table(direct.out);
  a[0].erase("dataset");
  b[0].erase("dataset");
  EXPECT_EQ(a, b);
}

TEST(AnalyzeTest, SeedFlagOverridesEnvironment) {
  const std::vector<std::string> args = {"analyze", "--builtin", "gravity", "--method",
                                         "bootstrap:100"};
  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--seed", "7"});
  ::setenv("TWOJACK_SEED", "7", 1);
  const auto env_only = run(args);
  ::setenv("TWOJACK_SEED", "8", 1);
  const auto env_other = run(args);
  const auto flag = run(with_flag);
  ::unsetenv("TWOJACK_SEED");
  EXPECT_EQ(env_only.out, flag.out);
  EXPECT_NE(env_other.out, flag.out);
}

TEST(ExitCodeTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--builtin", "gravity", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--builtin", "gravity", "--estimator", "median"}).code,
            kExitUsage);
  EXPECT_EQ(run({"analyze", "--builtin", "gravity", "--method", "bootstrap:x"}).code,
            kExitUsage);
  EXPECT_EQ(run({"analyze", "--builtin", "gravity", "--level", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--builtin", "child-girls-first", "--method", "delete-d:6"}).code,
            kExitUsage);
  const auto model9 = run({"coverage", "--model", "9"});
  EXPECT_EQ(model9.code, kExitUsage);
  EXPECT_FALSE(model9.err.empty());
  EXPECT_TRUE(model9.out.empty());
}

TEST(ExitCodeTest, DataErrors) {
  EXPECT_EQ(run({"analyze", "--builtin", "nope"}).code, kExitData);
  EXPECT_EQ(run({"datasets", "show", "nope"}).code, kExitData);
  EXPECT_EQ(run({"analyze", "--builtin", "chip"}).code, kExitData);
  EXPECT_EQ(run({"analyze", "--data", "-"}, "sample,value\n1,x\n").code, kExitData);
  EXPECT_EQ(run({"analyze", "--data", "/nonexistent/file.csv"}).code, kExitData);
}

TEST(ExitCodeTest, EstimatorErrors) {
  EXPECT_EQ(run({"analyze", "--builtin", "gravity", "--estimator", "elfessi3"}).code,
            kExitEstimator);
  EXPECT_EQ(run({"analyze", "--builtin", "gravity", "--method", "jackknife-paired"}).code,
            kExitEstimator);
  EXPECT_EQ(run({"analyze", "--data", "-"}, "sample,value\n1,1\n1,1\n2,1\n2,1\n").code,
            kExitEstimator);
}

TEST(ExitCodeTest, HelpAndVersionSucceed) {
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("analyze"), std::string::npos);
  const auto version = run({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_NE(version.out.find("twojack"), std::string::npos);
}

TEST(DatasetsTest, ListAndChip) {
  const auto list = run({"datasets", "list"});
  ASSERT_EQ(list.code, 0);
  for (const char* name : {"gravity", "child-girls-first", "child-boys-first", "chip"}) {
    EXPECT_NE(list.out.find(name), std::string::npos) << name;
  }
  const auto rows = table(list.out);
  EXPECT_EQ(rows[0].at("n1"), "11");
  EXPECT_EQ(rows[0].at("n2"), "12");
  EXPECT_FALSE(rows[0].at("source").empty());
  const auto chip = run({"datasets", "show", "chip"});
  EXPECT_EQ(chip.code, 0);
  EXPECT_NE(chip.out.find("raw data unavailable"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"datasets", "show", "chip", "--format", "json"}).out);
  EXPECT_EQ(j["raw_data"], "unavailable");
}

TEST(CoverageCliTest, ByteIdenticalAcrossRunsAndWorkers) {
  const std::vector<std::string> base = {"coverage", "--model", "1,4", "--n", "10",
                                         "--reps", "60", "--bootstrap-b", "20,40",
                                         "--seed", "42"};
  auto w1 = base;
  w1.insert(w1.end(), {"--workers", "1"});
  auto w3 = base;
  w3.insert(w3.end(), {"--workers", "3"});
  const auto a = run(w1);
  const auto b = run(w1);
  const auto c = run(w3);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto rows = table(a.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].at("model"), "4");
  EXPECT_TRUE(rows[0].count("Jack") && rows[0].count("20") && rows[0].count("40"));
  EXPECT_NE(a.out.find("xoshiro256**"), std::string::npos);
}

TEST(SimulateCliTest, OutputFeedsAnalyze) {
  const auto sim = run({"simulate", "--model", "2", "--n", "30", "--seed", "3"});
  ASSERT_EQ(sim.code, 0) << sim.err;
  const auto r = run({"analyze", "--data", "-"}, sim.out);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(table(r.out).size(), 2u);
}

TEST(ParseTest, Estimators) {
  EXPECT_EQ(parse_estimator("gd").name(), "gd");
  EXPECT_EQ(parse_estimator("elfessi2").name(), "nair");
  EXPECT_EQ(parse_estimator("fixed:0.25").name(), "fixed:0.25");
  EXPECT_EQ(parse_estimator("chang:nair:reflect").name(), "chang:nair:reflect");
  EXPECT_EQ(parse_estimator("chang:fixed:0.3").name(), "chang:fixed:0.3:floor");
  EXPECT_EQ(parse_estimator("kubokawa:1,1,0").rule(), WeightRule::kKubokawa);
  EXPECT_EQ(parse_estimator("known:2,3").rule(), WeightRule::kKnownVariance);
  for (const char* bad : {"", "fixed:2", "fixed:", "kubokawa:1,2", "known:1", "chang:chang:gd",
                          "gd2"}) {
    EXPECT_THROW(parse_estimator(bad), Error) << bad;
  }
}

TEST(ParseTest, SizeLists) {
  EXPECT_EQ(parse_size_list("25,50,75"), (std::vector<std::size_t>{25, 50, 75}));
  EXPECT_EQ(parse_size_list("100..1000:300"), (std::vector<std::size_t>{100, 400, 700, 1000}));
  EXPECT_EQ(parse_size_list("1..3"), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_THROW(parse_size_list("5..1"), Error);
  EXPECT_THROW(parse_size_list("a,b"), Error);
}

}  // namespace
}  // namespace twojack::cli
