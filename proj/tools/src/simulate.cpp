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
#include <utility>

#include "commands.hpp"
#include "twojack/datasets.hpp"
#include "twojack/error.hpp"
#include "twojack/simulation.hpp"

namespace twojack::cli {

// Draws from the same substreams as replication 0 of a library coverage run
// with this seed.
void run_simulate(const SimulateOptions& o, std::ostream& out) {
  const auto model = SimulationModel::make(o.model, o.sigma1, o.sigma2);
  const auto n2 = o.n2.value_or(o.n);
  if (o.n < 1 || n2 < 1) throw Error(ErrorCode::kInvalidArgument, "--n must be >= 1");
  const auto seed = resolve_seed(o.seed);
  auto r1 = Rng::substream(seed, {1, 0, 1});
  auto r2 = Rng::substream(seed, {1, 0, 2});
  auto s1 = draw_sample(model, Population::kFirst, o.n, r1);
  auto s2 = draw_sample(model, Population::kSecond, n2, r2);
  write_csv(out, TwoSampleData(std::move(s1), std::move(s2)));
}

}  // namespace twojack::cli
