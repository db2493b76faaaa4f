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

#include "qkolkata/su3.hpp"

#include <cmath>

namespace qk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_range(double v, double hi, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > hi) {
    throw ContractViolation(std::string("angle ") + name + " = " +
                            std::to_string(v) + " outside [0, " +
                            std::to_string(hi) + "]");
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kFullSU3: return "FULL_SU3";
    case Family::kReduced6: return "REDUCED6";
    case Family::kSO3: return "SO3";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "FULL_SU3") return Family::kFullSU3;
  if (name == "REDUCED6") return Family::kReduced6;
  if (name == "SO3") return Family::kSO3;
  return std::nullopt;
}

int family_dimension(Family f) {
  switch (f) {
    case Family::kFullSU3: return 8;
    case Family::kReduced6: return 6;
    case Family::kSO3: return 3;
  }
  return 0;
}

StrategyParams StrategyParams::full(double phi, double theta, double chi,
                                    double alpha1, double alpha2,
                                    double alpha3, double beta1,
                                    double beta2) {
  StrategyParams p{Family::kFullSU3, phi,    theta, chi,  alpha1,
                   alpha2,           alpha3, beta1, beta2};
  p.validate();
  return p;
}

StrategyParams StrategyParams::reduced(double phi, double theta, double chi,
                                       double alpha, double beta1,
                                       double beta2) {
  StrategyParams p{Family::kReduced6, phi, theta, chi, 0.0, 0.0,
                   alpha,             beta1, beta2};
  p.validate();
  return p;
}

StrategyParams StrategyParams::orthogonal(double phi, double theta,
                                          double chi) {
  StrategyParams p{Family::kSO3, phi, theta, chi, 0, 0, 0, 0, 0};
  p.validate();
  return p;
}

void StrategyParams::validate() const {
  check_range(phi, kPi / 2, "phi");
  check_range(theta, kPi / 2, "theta");
  check_range(chi, kPi / 2, "chi");
  check_range(alpha1, kTwoPi, "alpha1");
  check_range(alpha2, kTwoPi, "alpha2");
  check_range(alpha3, kTwoPi, "alpha3");
  check_range(beta1, kTwoPi, "beta1");
  check_range(beta2, kTwoPi, "beta2");
  if (family == Family::kReduced6 && (alpha1 != 0.0 || alpha2 != 0.0)) {
    throw ContractViolation("REDUCED6 requires alpha1 = alpha2 = 0");
  }
  if (family == Family::kSO3 &&
      (alpha1 != 0.0 || alpha2 != 0.0 || alpha3 != 0.0 || beta1 != 0.0 ||
       beta2 != 0.0)) {
    throw ContractViolation("SO3 requires every phase to be 0");
  }
}

std::vector<double> StrategyParams::free_angles() const {
  switch (family) {
    case Family::kFullSU3:
      return {phi, theta, chi, alpha1, alpha2, alpha3, beta1, beta2};
    case Family::kReduced6:
      return {phi, theta, chi, alpha3, beta1, beta2};
    case Family::kSO3:
      return {phi, theta, chi};
  }
  return {};
}

StrategyParams StrategyParams::from_free_angles(
    Family family, const std::vector<double>& a) {
  if (static_cast<int>(a.size()) != family_dimension(family)) {
    throw ContractViolation("wrong number of angles for family");
  }
  switch (family) {
    case Family::kFullSU3:
      return full(a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]);
    case Family::kReduced6:
      return reduced(a[0], a[1], a[2], a[3], a[4], a[5]);
    case Family::kSO3:
      return orthogonal(a[0], a[1], a[2]);
  }
  throw ContractViolation("unknown family");
}

AngleBox family_box(Family family) {
  AngleBox box;
  const int d = family_dimension(family);
  for (int i = 0; i < d; ++i) {
    box.lower.push_back(0.0);
    box.upper.push_back(i < 3 ? kPi / 2 : kTwoPi);
  }
  return box;
}

StrategyParams reference_u_opt() {
  const double a = 5 * kPi / 18;
  return StrategyParams::full(kPi / 4, std::acos(1 / std::sqrt(3.0)), kPi / 4,
                              a, a, a, kPi / 3, 11 * kPi / 6);
}

StrategyParams reference_v_opt() {
  return StrategyParams::reduced(kPi / 4, std::acos(1 / std::sqrt(3.0)),
                                 kPi / 4, kPi / 2, kPi / 3, 5 * kPi / 6);
}

StrategyParams reference_o_opt() {
  return StrategyParams::orthogonal(kPi / 6, std::acos(1.0 / 3.0), kPi / 6);
}

double wrap_phase(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

StrategyParams reduce_center(const StrategyParams& p) {
  if (p.family != Family::kFullSU3) {
    throw ContractViolation("center reduction needs the FULL_SU3 family");
  }
  // Multiplying by e^{2 pi i m / 3} shifts every alpha by 2 pi m / 3 and
  // leaves the betas alone.
  const double third = kTwoPi / 3;
  const double shift = third * std::floor(wrap_phase(p.alpha1) / third);
  StrategyParams q = p;
  q.alpha1 = wrap_phase(p.alpha1 - shift);
  q.alpha2 = wrap_phase(p.alpha2 - shift);
  q.alpha3 = wrap_phase(p.alpha3 - shift);
  q.validate();
  return q;
}

CenterCanonical canonicalize_center(const StrategyParams& p) {
  if (p.family != Family::kFullSU3) return {p, false};
  constexpr double kTol = 1e-9;
  auto matches = [&](double a) {
    for (int n = 0; n < 3; ++n) {
      if (std::abs(a - (5.0 + 12.0 * n) * kPi / 18.0) < kTol) return true;
    }
    return false;
  };
  if (std::abs(p.alpha1 - p.alpha2) > kTol ||
      std::abs(p.alpha1 - p.alpha3) > kTol || !matches(p.alpha1)) {
    return {p, false};
  }
  StrategyParams q = p;
  q.alpha1 = q.alpha2 = q.alpha3 = 5.0 * kPi / 18.0;
  return {q, true};
}

StrategyParams equalize_output_phases(const StrategyParams& p) {
  if (p.family != Family::kFullSU3) {
    throw ContractViolation("output-phase gauge needs the FULL_SU3 family");
  }
  // diag(e^{i d_k}) U shifts alpha_k by d_k; the y phases beta_j - alpha_k
  // pick up -d_k through conj(y), so the betas are untouched.
  const double mean = (p.alpha1 + p.alpha2 + p.alpha3) / 3.0;
  StrategyParams q = p;
  q.alpha1 = q.alpha2 = q.alpha3 = wrap_phase(mean);
  return reduce_center(q);
}

}  // namespace qk
