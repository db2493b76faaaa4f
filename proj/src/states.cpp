// Copyright 2026 The qkolkata Authors
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

#include "qkolkata/states.hpp"

#include <cmath>
#include <numbers>

namespace qk {

Fidelity::Fidelity(double f) : f_(f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw ContractViolation("fidelity must lie in [0, 1], got " +
                            std::to_string(f));
  }
}

void validate(const EntanglementParams& p) {
  constexpr double kPi = std::numbers::pi;
  if (!(p.vartheta >= 0.0 && p.vartheta <= kPi)) {
    throw ContractViolation("vartheta outside [0, pi]");
  }
  if (!(p.varphi >= 0.0 && p.varphi <= 2 * kPi)) {
    throw ContractViolation("varphi outside [0, 2pi]");
  }
}

namespace {

double parse_double(std::string_view text) {
  // from_chars for double is missing on older libstdc++.
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ContractViolation("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ContractViolation("not a number: '" + s + "'");
  return v;
}

}  // namespace

Register state_by_name(std::string_view name) {
  if (name == "ghz") return ghz_state();
  if (name == "aharonov") return aharonov_state();
  if (name == "product000") return product_state_000();
  constexpr std::string_view kTunable = "tunable:";
  if (name.substr(0, kTunable.size()) == kTunable) {
    const std::string_view rest = name.substr(kTunable.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ContractViolation("tunable state needs 'tunable:<vartheta>,<varphi>'");
    }
    EntanglementParams p{parse_double(rest.substr(0, comma)),
                         parse_double(rest.substr(comma + 1))};
    return tunable_state(p);
  }
  throw ContractViolation("unknown state '" + std::string(name) + "'");
}

}  // namespace qk
