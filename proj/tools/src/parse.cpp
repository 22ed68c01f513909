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

#include <charconv>
#include <optional>
#include <string>
#include <system_error>

#include "commands.hpp"
#include "twojack/error.hpp"
#include "twojack_cli/cli.hpp"

namespace twojack::cli {

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument,
              std::string(what) + ": '" + std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

bool starts_with(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

std::optional<TildeRule> tilde_from(std::string_view text) {
  if (text == "floor") return TildeRule::kFloor;
  if (text == "reflect") return TildeRule::kReflect;
  if (text == "midpoint") return TildeRule::kMidpoint;
  return std::nullopt;
}

}  // namespace

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) bad(what, text);
  return v;
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) bad(what, text);
  return v;
}

EstimatorSpec parse_estimator(std::string_view text) {
  if (text == "gd") return EstimatorSpec::graybill_deal();
  if (text == "nair" || text == "elfessi2") return EstimatorSpec::nair();
  if (text == "elfessi3") return EstimatorSpec::elfessi_balanced();
  if (starts_with(text, "fixed:")) {
    const double g = parse_real(text.substr(6), "fixed weight");
    if (!(g >= 0.0 && g <= 1.0)) bad("fixed weight must lie in [0, 1]", text);
    return EstimatorSpec::fixed_weight(g);
  }
  if (starts_with(text, "known:")) {
    const auto parts = split(text.substr(6), ',');
    if (parts.size() != 2) bad("expected known:<s1,s2>", text);
    return EstimatorSpec::known_variance(parse_real(parts[0], "variance"),
                                         parse_real(parts[1], "variance"));
  }
  if (starts_with(text, "kubokawa:")) {
    const auto parts = split(text.substr(9), ',');
    if (parts.size() != 3) bad("expected kubokawa:<a,b,c>", text);
    const double a = parse_real(parts[0], "kubokawa a");
    const double b = parse_real(parts[1], "kubokawa b");
    const double c = parse_real(parts[2], "kubokawa c");
    if (a < 0 || b <= 0 || c < 0) bad("kubokawa needs a >= 0, b > 0, c >= 0", text);
    return EstimatorSpec::kubokawa(a, b, c);
  }
  if (starts_with(text, "chang:")) {
    auto base = text.substr(6);
    auto rule = TildeRule::kFloor;
    if (const auto colon = base.rfind(':'); colon != std::string_view::npos) {
      if (const auto t = tilde_from(base.substr(colon + 1))) {
        rule = *t;
        base = base.substr(0, colon);
      }
    }
    if (starts_with(base, "chang:")) bad("chang cannot wrap itself", text);
    return EstimatorSpec::chang_plus(parse_estimator(base), rule);
  }
  bad("unknown estimator", text);
}

MethodRequest parse_method(std::string_view text, Norming norming,
                           Centering centering, std::uint64_t seed) {
  if (text == "clt") return {MethodRequest::Kind::kResolved, CltMethod{}};
  if (text == "clt-literal") {
    return {MethodRequest::Kind::kResolved, CltMethod{CltVariant::kLiteral}};
  }
  if (text == "jackknife") {
    return {MethodRequest::Kind::kJackknifeAuto,
            JackknifeUnequalMethod{norming, centering}};
  }
  if (text == "jackknife-unequal") {
    return {MethodRequest::Kind::kResolved, JackknifeUnequalMethod{norming, centering}};
  }
  if (text == "jackknife-paired") {
    return {MethodRequest::Kind::kResolved, JackknifePairedMethod{norming}};
  }
  if (starts_with(text, "bootstrap:")) {
    const auto b = parse_count(text.substr(10), "bootstrap replicates");
    if (b < 2) bad("bootstrap needs at least 2 replicates", text);
    return {MethodRequest::Kind::kResolved, BootstrapMethod{b, seed}};
  }
  if (starts_with(text, "delete-d:")) {
    const auto d = parse_count(text.substr(9), "delete-d size");
    return {MethodRequest::Kind::kResolved, DeleteDMethod{d, 100000, seed}};
  }
  bad("unknown method", text);
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    auto rest = text.substr(dots + 2);
    std::uint64_t step = 1;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      step = parse_count(rest.substr(colon + 1), "range step");
      rest = rest.substr(0, colon);
    }
    const auto lo = parse_count(text.substr(0, dots), "range start");
    const auto hi = parse_count(rest, "range end");
    if (step == 0 || lo > hi) bad("invalid range", text);
    for (auto v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  for (auto part : split(text, ',')) out.push_back(parse_count(part, "count"));
  return out;
}

}  // namespace twojack::cli
