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

#include <algorithm>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "twojack/error.hpp"
#include "twojack/format.hpp"
#include "twojack/twojack.hpp"
#include "twojack_cli/cli.hpp"

namespace twojack::cli {

namespace {

struct CoverageRow {
  int model = 1;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<CoverageResult> results;  // jackknife first, then one per B
};

std::size_t failures_of(const CoverageRow& row) {
  std::size_t f = 0;
  for (const auto& r : row.results) f = std::max(f, r.failures);
  return f;
}

}  // namespace

void run_coverage(const CoverageOptions& o, std::ostream& out) {
  const auto spec = parse_estimator(o.estimator);
  const auto style = parse_z_style(o.z_style);
  if (!(o.level > 0.0 && o.level < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "--level must lie in (0, 1)");
  }
  if (o.reps < 1) throw Error(ErrorCode::kInvalidArgument, "--reps must be >= 1");
  std::vector<int> models;
  for (auto id : parse_size_list(o.models)) {
    models.push_back(static_cast<int>(std::min<std::size_t>(id, 1000)));
    SimulationModel::make(models.back(), o.sigma1, o.sigma2);
  }
  const auto sizes = parse_size_list(o.n);
  for (auto n : sizes) {
    if (n < 3) throw Error(ErrorCode::kInvalidArgument, "--n values must be >= 3");
  }
  const auto bs = parse_size_list(o.bootstrap_b);
  for (auto b : bs) {
    if (b < 2) throw Error(ErrorCode::kInvalidArgument, "bootstrap B must be >= 2");
  }
  const auto seed = resolve_seed(o.seed);
  const unsigned workers =
      o.workers > 0 ? o.workers : std::max(1u, std::thread::hardware_concurrency());

  std::vector<CoverageRow> rows;
  for (int id : models) {
    for (auto n : sizes) {
      CoverageConfig cfg;
      cfg.model = SimulationModel::make(id, o.sigma1, o.sigma2);
      cfg.n = n;
      cfg.reps = o.reps;
      cfg.methods.push_back(JackknifePairedMethod{});
      for (auto b : bs) cfg.methods.push_back(BootstrapMethod{b, 0});
      cfg.estimator = spec;
      cfg.seed = derive_key(seed, {static_cast<std::uint64_t>(id), n});
      cfg.level = o.level;
      cfg.z_style = style;
      cfg.workers = workers;
      rows.push_back({id, n, cfg.seed, coverage_experiment(cfg)});
    }
  }

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["tool"] = "twojack";
    j["version"] = std::string(kVersion);
    j["generator"] = std::string(kGeneratorId);
    j["seed"] = seed;
    j["reps"] = o.reps;
    j["estimator"] = spec.name();
    j["level"] = o.level;
    j["sigma1"] = o.sigma1;
    j["sigma2"] = o.sigma2;
    auto& arr = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json boot = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < bs.size(); ++k) {
        boot[std::to_string(bs[k])] = row.results[k + 1].coverage;
      }
      arr.push_back({{"model", row.model},
                     {"n", row.n},
                     {"seed", row.seed},
                     {"jack", row.results[0].coverage},
                     {"bootstrap", boot},
                     {"failures", failures_of(row)}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# twojack " << kVersion << " coverage; generator " << kGeneratorId
      << "; seed " << seed << "; reps " << o.reps << "; estimator " << spec.name()
      << "; level " << format_double(o.level) << "; sigma1 " << format_double(o.sigma1)
      << "; sigma2 " << format_double(o.sigma2) << '\n';
  out << "model\tN\tJack";
  for (auto b : bs) out << '\t' << b;
  out << "\tfailures\n";
  for (const auto& row : rows) {
    out << row.model << '\t' << row.n;
    for (const auto& r : row.results) out << '\t' << format_double(r.coverage);
    out << '\t' << failures_of(row) << '\n';
  }
}

}  // namespace twojack::cli
