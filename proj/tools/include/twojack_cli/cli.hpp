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

#ifndef TWOJACK_CLI_CLI_HPP_
#define TWOJACK_CLI_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twojack/estimators.hpp"
#include "twojack/inference.hpp"

namespace twojack::cli {

/// Process exit codes of the `twojack` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,      // bad flags, values out of range, unknown model
  kExitData = 3,       // unreadable or malformed input, unknown dataset
  kExitEstimator = 4,  // the estimator or a variance method failed on the data
};

/// Runs one invocation; `args` excludes the program name. Reads `-` data
/// from `in`, writes results to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

/// "gd", "nair", "elfessi2", "elfessi3", "fixed:<g>", "kubokawa:<a,b,c>",
/// "chang:<base>[:floor|reflect|midpoint]", "known:<s1,s2>".
/// Throws Error(kInvalidArgument) on anything else.
EstimatorSpec parse_estimator(std::string_view text);

/// A method as given on the command line. `jackknife` stays unresolved until
/// the data is known: paired when n1 = n2, otherwise unequal.
struct MethodRequest {
  enum class Kind { kJackknifeAuto, kResolved };
  Kind kind = Kind::kResolved;
  VarianceMethod method = CltMethod{};
};

/// "clt", "clt-literal", "jackknife", "jackknife-unequal", "jackknife-paired",
/// "bootstrap:<B>", "delete-d:<d>". Jackknife flavours take `norming` and
/// `centering`; bootstrap and delete-d take `seed`.
MethodRequest parse_method(std::string_view text, Norming norming,
                           Centering centering, std::uint64_t seed);

/// Comma list of integers or an inclusive range "a..b[:step]".
std::vector<std::size_t> parse_size_list(std::string_view text);

}  // namespace twojack::cli

#endif  // TWOJACK_CLI_CLI_HPP_
