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

#ifndef TWOJACK_TWOJACK_HPP_
#define TWOJACK_TWOJACK_HPP_

#include "twojack/core_stats.hpp"
#include "twojack/datasets.hpp"
#include "twojack/error.hpp"
#include "twojack/estimators.hpp"
#include "twojack/format.hpp"
#include "twojack/inference.hpp"
#include "twojack/resampling.hpp"
#include "twojack/rng.hpp"
#include "twojack/simulation.hpp"
#include "twojack/statistic.hpp"

namespace twojack {

inline constexpr const char* kVersion = TWOJACK_VERSION_STRING;

}  // namespace twojack

#endif  // TWOJACK_TWOJACK_HPP_
