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

#ifndef TWOJACK_TESTS_FIXTURES_HPP_
#define TWOJACK_TESTS_FIXTURES_HPP_

// Published measurement series used as fixtures. Kept separate from the
// library tables so a transcription error there shows up as a mismatch.

#include <vector>

#include "twojack/statistic.hpp"

namespace twojack::testing {

inline const std::vector<double> kGravityA = {78, 78, 78, 86, 87, 81,
                                              73, 67, 75, 82, 83};
inline const std::vector<double> kGravityB = {84, 86, 85, 82, 77, 76,
                                              80, 83, 81, 78, 78, 78};
inline const std::vector<double> kGirls = {52.95, 55.72, 56.14, 54.24,
                                           58.19, 55.32, 54.45};
inline const std::vector<double> kBoys = {52.55, 54.08, 54.25, 52.92,
                                          56.31, 53.63, 52.52};

inline TwoSampleData gravity() {
  return TwoSampleData(Sample(kGravityA), Sample(kGravityB));
}

inline TwoSampleData child_girls_first() {
  return TwoSampleData(Sample(kGirls), Sample(kBoys));
}

}  // namespace twojack::testing

#endif  // TWOJACK_TESTS_FIXTURES_HPP_
