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

#include <ostream>
#include <string>

#include <json.hpp>

#include "commands.hpp"
#include "twojack/datasets.hpp"
#include "twojack/error.hpp"
#include "twojack/format.hpp"

namespace twojack::cli {

void run_datasets_list(const DatasetsOptions& o, std::ostream& out) {
  const auto list = list_builtins();
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : list) {
      arr.push_back({{"name", d.name},
                     {"n1", d.n1},
                     {"n2", d.n2},
                     {"kind", d.summary_only ? "summary-only" : "raw"},
                     {"source", d.source},
                     {"description", d.description}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "name\tn1\tn2\tkind\tsource\tdescription\n";
  for (const auto& d : list) {
    out << d.name << '\t' << d.n1 << '\t' << d.n2 << '\t'
        << (d.summary_only ? "summary-only" : "raw") << '\t' << d.source << '\t'
        << d.description << '\n';
  }
}

void run_datasets_show(const DatasetsOptions& o, std::ostream& out) {
  if (const auto s = builtin_summary(o.name)) {
    if (o.format == "json") {
      nlohmann::ordered_json j = {{"name", s->name},
                                  {"kind", "summary-only"},
                                  {"raw_data", "unavailable"},
                                  {"n1", s->n1},
                                  {"n2", s->n2},
                                  {"mean1", s->mean1},
                                  {"mean2", s->mean2},
                                  {"sd1", s->sd1},
                                  {"sd2", s->sd2},
                                  {"source", s->source},
                                  {"description", s->description}};
      out << j.dump(2) << '\n';
      return;
    }
    out << "# " << s->name << ": summary-only, raw data unavailable\n"
        << "# source: " << s->source << '\n'
        << "statistic,sample1,sample2\n"
        << "n," << s->n1 << ',' << s->n2 << '\n'
        << "mean," << format_double(s->mean1) << ',' << format_double(s->mean2) << '\n'
        << "sd," << format_double(s->sd1) << ',' << format_double(s->sd2) << '\n';
    return;
  }
  const auto d = load_builtin(o.name);
  if (o.format == "json") {
    const auto v1 = d.data.sample1().values();
    const auto v2 = d.data.sample2().values();
    nlohmann::ordered_json j = {{"name", d.name},
                                {"kind", "raw"},
                                {"source", d.source},
                                {"description", d.description},
                                {"sample1", std::vector<double>(v1.begin(), v1.end())},
                                {"sample2", std::vector<double>(v2.begin(), v2.end())}};
    out << j.dump(2) << '\n';
    return;
  }
  write_csv(out, d.data);
}

}  // namespace twojack::cli
