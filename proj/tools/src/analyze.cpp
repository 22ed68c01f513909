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

#include <cstdlib>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "twojack/datasets.hpp"
#include "twojack/error.hpp"
#include "twojack/format.hpp"
#include "twojack/twojack.hpp"
#include "twojack_cli/cli.hpp"

namespace twojack::cli {

namespace {

struct LoadedData {
  std::string name;
  TwoSampleData data;
};

LoadedData load(const AnalyzeOptions& o, std::istream& in) {
  const int sources = !o.data.empty() + !o.builtin.empty() +
                      (!o.data1.empty() || !o.data2.empty());
  if (sources != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --data, --builtin or --data1/--data2");
  }
  if (!o.builtin.empty()) return {o.builtin, load_builtin(o.builtin).data};
  if (o.data == "-") return {"stdin", read_csv(in)};
  if (!o.data.empty()) return {o.data, read_csv(std::filesystem::path(o.data))};
  if (o.data1.empty() || o.data2.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--data1 and --data2 go together");
  }
  return {o.data1 + "," + o.data2, read_value_files(o.data1, o.data2)};
}

bool uses_seed(const VarianceMethod& m) {
  return std::holds_alternative<BootstrapMethod>(m) ||
         std::holds_alternative<DeleteDMethod>(m);
}

struct Row {
  std::string method;
  VarianceEstimate variance;
  ConfidenceInterval ci;
};

}  // namespace

ZStyle parse_z_style(std::string_view s) {
  if (s == "exact") return ZStyle::kExact;
  if (s == "paper") return ZStyle::kPaper;
  throw Error(ErrorCode::kInvalidArgument, "unknown z-style '" + std::string(s) + "'");
}
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    return parse_count(env, kSeedEnv);
  }
  return kDefaultSeed;
}

void run_analyze(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const auto spec = parse_estimator(o.estimator);
  const auto style = parse_z_style(o.z_style);
  if (!(o.level > 0.0 && o.level < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "--level must lie in (0, 1)");
  }
  const auto norming = o.norming == "plugin" ? Norming::kPlugin : Norming::kUnbiased;
  const auto centering =
      o.centering == "stratified" ? Centering::kStratified : Centering::kPooled;
  const auto seed = resolve_seed(o.seed);
  const std::vector<std::string> names =
      o.methods.empty() ? std::vector<std::string>{"clt", "jackknife"} : o.methods;
  std::vector<MethodRequest> requests;
  for (const auto& name : names) {
    requests.push_back(parse_method(name, norming, centering, seed));
  }

  const auto loaded = load(o, in);
  const auto& data = loaded.data;
  const auto estimate = estimate_common_mean(data, spec);

  std::vector<Row> rows;
  bool seeded = false;
  for (const auto& req : requests) {
    VarianceMethod method = req.method;
    if (req.kind == MethodRequest::Kind::kJackknifeAuto && data.balanced()) {
      method = JackknifePairedMethod{norming};
    }
    seeded = seeded || uses_seed(method);
    const auto v = estimate_variance(spec, data, method);
    rows.push_back({method_label(method), v,
                    confidence_interval(estimate.value, v.sd, o.level, style, method)});
  }

  if (o.format == "json") {
    const auto s1 = summarize(data.sample1());
    const auto s2 = summarize(data.sample2());
    nlohmann::ordered_json j;
    j["tool"] = "twojack";
    j["version"] = std::string(kVersion);
    j["dataset"] = {{"name", loaded.name},
                    {"n1", data.n1()},
                    {"n2", data.n2()},
                    {"mean1", s1.mean},
                    {"mean2", s2.mean},
                    {"var1", s1.var_unbiased},
                    {"var2", s2.var_unbiased}};
    j["estimator"] = spec.name();
    j["gamma"] = estimate.gamma.value;
    j["branch"] = std::string(branch_name(estimate.gamma.branch));
    j["estimate"] = estimate.value;
    j["level"] = o.level;
    j["z_style"] = o.z_style;
    j["seed"] = seeded ? nlohmann::ordered_json(seed) : nlohmann::ordered_json();
    auto& arr = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"method", r.method},
                     {"variance", r.variance.variance},
                     {"sd", r.variance.sd},
                     {"z", r.ci.z},
                     {"ci_lower", r.ci.lower},
                     {"ci_upper", r.ci.upper},
                     {"width", r.ci.width()}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "dataset\testimator\tgamma\testimate\tmethod\tvariance\tsd\tz\tci_lower"
         "\tci_upper\twidth\n";
  for (const auto& r : rows) {
    out << loaded.name << '\t' << spec.name() << '\t'
        << format_double(estimate.gamma.value) << '\t' << format_double(estimate.value)
        << '\t' << r.method << '\t' << format_double(r.variance.variance) << '\t'
        << format_double(r.variance.sd) << '\t' << format_double(r.ci.z) << '\t'
        << format_double(r.ci.lower) << '\t' << format_double(r.ci.upper) << '\t'
        << format_double(r.ci.width()) << '\n';
  }
}

}  // namespace twojack::cli
