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

#include "qkolkata/game.hpp"

#include <algorithm>
#include <cmath>

#include "qkolkata/states.hpp"

namespace qk {

std::string_view player_name(Player p) {
  switch (p) {
    case Player::kAlice: return "A";
    case Player::kBob: return "B";
    case Player::kCharlie: return "C";
  }
  return "?";
}

std::string_view convention_name(ConjugationConvention c) {
  return c == ConjugationConvention::kPaper ? "paper" : "standard";
}

std::optional<ConjugationConvention> parse_convention(std::string_view name) {
  if (name == "paper") return ConjugationConvention::kPaper;
  if (name == "standard") return ConjugationConvention::kStandard;
  return std::nullopt;
}

namespace {

PayoffOperator build_payoff_operator(Player owner) {
  PayoffOperator op{owner, Op27::Zero(), {}};
  for (int idx = 0; idx < kRegisterDim; ++idx) {
    const double v = pays(owner, idx) ? 1.0 : 0.0;
    op.projector(idx, idx) = v;
    op.diagonal[idx] = v;
  }
  return op;
}

}  // namespace

const PayoffOperator& payoff_operator(Player p) {
  static const std::array<PayoffOperator, 3> cache = {
      build_payoff_operator(Player::kAlice), build_payoff_operator(Player::kBob),
      build_payoff_operator(Player::kCharlie)};
  return cache[slot(p)];
}

Op27 symmetric_operator(const Op3& u, ConjugationConvention convention) {
  const Op3 v = convention == ConjugationConvention::kPaper ? adjoint(u) : u;
  return tensor3<double>(v, v, v);
}

Density apply_symmetric(const Density& rho, const Op3& u,
                        ConjugationConvention convention) {
  if (!all_finite(u) || !is_unitary<double>(u, 1e-10)) {
    throw ContractViolation("apply_symmetric requires a unitary operator");
  }
  const Op27 k = symmetric_operator(u, convention);
  Op27 out = k * rho.matrix() * k.adjoint();
  // Re-impose exact Hermiticity lost to rounding.
  out = (0.5 * (out + out.adjoint())).eval();
  return Density(std::move(out));
}

double expected_payoff(Player p, const Density& rho) {
  return trace_product(payoff_operator(p).projector, rho);
}

double expected_payoff(Player p, const Register& psi) {
  const auto& d = payoff_operator(p).diagonal;
  double e = 0;
  for (int i = 0; i < kRegisterDim; ++i) e += d[i] * std::norm(psi(i));
  return e;
}

Register play_symmetric(const Register& psi, const Op3& u,
                        ConjugationConvention convention) {
  const Op3 v = convention == ConjugationConvention::kPaper ? adjoint(u) : u;
  return apply_product<double>(psi, v, v, v);
}

double PlayerPayoffs::of(Player p) const {
  switch (p) {
    case Player::kAlice: return alice;
    case Player::kBob: return bob;
    case Player::kCharlie: return charlie;
  }
  return 0;
}

PlayerPayoffs classical_profile_payoffs(ClassicalStrategy i,
                                        ClassicalStrategy j,
                                        ClassicalStrategy k) {
  for (auto s : {i, j, k}) {
    if (s.power < 0 || s.power > 2) {
      throw ContractViolation("classical strategy power must be 0, 1 or 2");
    }
  }
  const int outcome = basis_index(i.power, j.power, k.power);
  return {pays(Player::kAlice, outcome) ? 1.0 : 0.0,
          pays(Player::kBob, outcome) ? 1.0 : 0.0,
          pays(Player::kCharlie, outcome) ? 1.0 : 0.0};
}

ClassicalBaseline classical_baseline() {
  ClassicalBaseline out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const PlayerPayoffs pay = classical_profile_payoffs({i}, {j}, {k});
        for (Player p : kPlayers) {
          out.winning_profiles[slot(p)] += pay.of(p) == 1.0 ? 1 : 0;
        }
        ++out.profiles;
      }
  for (int s = 0; s < 3; ++s) {
    out.expectation[s] =
        static_cast<double>(out.winning_profiles[s]) / out.profiles;
  }
  return out;
}

double classical_embedding_deviation() {
  const Density ghz = Density::pure(ghz_state());
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // s^i on Charlie, s^j on Bob, s^k on Alice.
        const Op27 shift = tensor3<double>(classical_operator({k}),
                                           classical_operator({j}),
                                           classical_operator({i}));
        const Density out(shift * ghz.matrix() * shift.adjoint());
        const PlayerPayoffs expected =
            classical_profile_payoffs({i}, {j}, {k});
        for (Player p : kPlayers) {
          worst = std::max(worst,
                           std::abs(expected_payoff(p, out) - expected.of(p)));
        }
      }
  return worst;
}

bool verify_classical_embedding() {
  return classical_embedding_deviation() <= 1e-12;
}

CalibrationResult calibrate_convention() {
  constexpr double kTarget = 2.0 / 3.0;
  constexpr double kTol = 1e-9;
  const Density ghz = Density::pure(ghz_state());
  const Op3 u = su3_matrix(reference_u_opt());
  const Op3 v = su3_matrix(reference_v_opt());
  CalibrationResult result;
  int passing = 0;
  for (auto conv :
       {ConjugationConvention::kPaper, ConjugationConvention::kStandard}) {
    ConventionCheck& check =
        result.checks[conv == ConjugationConvention::kPaper ? 0 : 1];
    check.convention = conv;
    check.u_opt_payoff =
        expected_payoff(Player::kAlice, apply_symmetric(ghz, u, conv));
    check.v_opt_payoff =
        expected_payoff(Player::kAlice, apply_symmetric(ghz, v, conv));
    check.passes = std::abs(check.u_opt_payoff - kTarget) <= kTol &&
                   std::abs(check.v_opt_payoff - kTarget) <= kTol;
    if (check.passes) {
      ++passing;
      result.selected = conv;
      result.checked_payoff = check.u_opt_payoff;
    }
  }
  if (passing != 1) {
    result.selected.reset();
    result.checked_payoff = 0;
  }
  return result;
}

}  // namespace qk
