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

#include <CLI11.hpp>

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "twojack/error.hpp"
#include "twojack/twojack.hpp"

namespace twojack::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::kUsage: return kExitUsage;
    case ErrorCategory::kData: return kExitData;
    case ErrorCategory::kEstimator: return kExitEstimator;
  }
  return kExitEstimator;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Jackknife and bootstrap inference for two-sample common-mean estimators",
               "twojack"};
  app.set_version_flag("--version", std::string("twojack ") + kVersion);
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Estimate the common mean with standard errors and intervals");
  a->add_option("--data", analyze.data, "CSV file with columns sample,value ('-' reads stdin)");
  a->add_option("--data1", analyze.data1, "File with one value per line for sample 1");
  a->add_option("--data2", analyze.data2, "File with one value per line for sample 2");
  a->add_option("--builtin", analyze.builtin, "Builtin dataset name");
  a->add_option("--estimator", analyze.estimator,
                "gd|nair|elfessi3|fixed:<g>|kubokawa:<a,b,c>|chang:<base>[:rule]|known:<s1,s2>")
      ->capture_default_str();
  a->add_option("--method", analyze.methods,
                "clt|clt-literal|jackknife|jackknife-unequal|jackknife-paired|"
                "bootstrap:<B>|delete-d:<d> (repeatable; default clt and jackknife)");
  a->add_option("--level", analyze.level, "Confidence level")->capture_default_str();
  a->add_option("--z-style", analyze.z_style, "exact or paper (two-decimal z)")
      ->check(CLI::IsMember({"exact", "paper"}))
      ->capture_default_str();
  a->add_option("--norming", analyze.norming, "Jackknife norming")
      ->check(CLI::IsMember({"unbiased", "plugin"}))
      ->capture_default_str();
  a->add_option("--centering", analyze.centering, "Unequal-size jackknife centering")
      ->check(CLI::IsMember({"pooled", "stratified"}))
      ->capture_default_str();
  a->add_option("--seed", analyze.seed, "Seed for bootstrap and sampled delete-d");
  a->add_option("--format", analyze.format)
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  CoverageOptions coverage;
  auto* c = app.add_subcommand("coverage", "Monte Carlo coverage of jackknife and bootstrap intervals");
  c->add_option("--model", coverage.models, "Model ids 1..5 (list or range)")
      ->capture_default_str();
  c->add_option("--n", coverage.n, "Per-sample sizes (list or range)")->capture_default_str();
  c->add_option("--reps", coverage.reps, "Replications")->capture_default_str();
  c->add_option("--bootstrap-b", coverage.bootstrap_b, "Bootstrap sizes (list or a..b:step)")
      ->capture_default_str();
  c->add_option("--seed", coverage.seed);
  c->add_option("--sigma1", coverage.sigma1)->capture_default_str();
  c->add_option("--sigma2", coverage.sigma2)->capture_default_str();
  c->add_option("--workers", coverage.workers, "Threads (0 = all cores); output does not depend on it")
      ->capture_default_str();
  c->add_option("--estimator", coverage.estimator)->capture_default_str();
  c->add_option("--level", coverage.level)->capture_default_str();
  c->add_option("--z-style", coverage.z_style)
      ->check(CLI::IsMember({"exact", "paper"}))
      ->capture_default_str();
  c->add_option("--format", coverage.format)
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  DatasetsOptions datasets;
  auto* d = app.add_subcommand("datasets", "List or print builtin datasets");
  d->require_subcommand(1);
  auto* dl = d->add_subcommand("list", "List builtin datasets");
  dl->add_option("--format", datasets.format)->check(CLI::IsMember({"tsv", "json"}));
  auto* ds = d->add_subcommand("show", "Print a builtin dataset");
  ds->add_option("name", datasets.name)->required();
  ds->add_option("--format", datasets.format)->check(CLI::IsMember({"csv", "json"}));

  SimulateOptions simulate;
  auto* s = app.add_subcommand("simulate", "Draw a two-sample dataset from a simulation model");
  s->add_option("--model", simulate.model)->capture_default_str();
  s->add_option("--n", simulate.n, "Size of sample 1 (and 2 unless --n2)")->capture_default_str();
  s->add_option("--n2", simulate.n2);
  s->add_option("--seed", simulate.seed);
  s->add_option("--sigma1", simulate.sigma1)->capture_default_str();
  s->add_option("--sigma2", simulate.sigma2)->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("twojack");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& arg : storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help and version requests print to `out` and exit 0.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*a) {
      run_analyze(analyze, in, out);
    } else if (*c) {
      run_coverage(coverage, out);
    } else if (*dl) {
      run_datasets_list(datasets, out);
    } else if (*ds) {
      run_datasets_show(datasets, out);
    } else if (*s) {
      run_simulate(simulate, out);
    }
  } catch (const Error& e) {
    err << "twojack: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "twojack: internal error: " << e.what() << '\n';
    return kExitEstimator;
  }
  return kExitOk;
}

}  // namespace twojack::cli
