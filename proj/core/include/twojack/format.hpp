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

#ifndef TWOJACK_FORMAT_HPP_
#define TWOJACK_FORMAT_HPP_

#include <array>
#include <charconv>
#include <string>

namespace twojack {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), end);
}

}  // namespace twojack

#endif  // TWOJACK_FORMAT_HPP_
