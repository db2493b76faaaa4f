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

#pragma once

// The three-player, three-restaurant minority game: a player is paid one
// unit when nobody else picked the same restaurant.

#include <array>
#include <optional>
#include <string_view>

#include "qkolkata/linalg.hpp"
#include "qkolkata/su3.hpp"

namespace qk {

enum class Player { kAlice, kBob, kCharlie };

inline constexpr std::array<Player, 3> kPlayers = {
    Player::kAlice, Player::kBob, Player::kCharlie};

/// Qutrit slot owned by the player: Alice x1, Bob x2, Charlie x3.
constexpr int slot(Player p) { return static_cast<int>(p); }

std::string_view player_name(Player p);

/// How the shared strategy acts on the density.
///
/// kPaper applies (U^dagger)^{⊗3} rho U^{⊗3}; kStandard applies
/// U^{⊗3} rho (U^dagger)^{⊗3}. The two differ by U <-> U^dagger.
enum class ConjugationConvention { kPaper, kStandard };

/// Convention selected by calibration against the reference optima; see
/// calibrate_convention().
inline constexpr ConjugationConvention kDefaultConvention =
    ConjugationConvention::kStandard;

std::string_view convention_name(ConjugationConvention c);
std::optional<ConjugationConvention> parse_convention(std::string_view name);

/// Diagonal projector onto the outcomes that pay `owner`.
struct PayoffOperator {
  Player owner;
  Op27 projector;
  std::array<double, kRegisterDim> diagonal;
};

/// true when the owner's choice differs from both other choices.
constexpr bool pays(Player owner, int index) {
  const int mine = slot_digit(index, slot(owner));
  const int o1 = slot_digit(index, (slot(owner) + 1) % 3);
  const int o2 = slot_digit(index, (slot(owner) + 2) % 3);
  return mine != o1 && mine != o2;
}

/// Cached; safe to call concurrently.
const PayoffOperator& payoff_operator(Player p);

/// Conjugates rho by the symmetric product of u. u must be unitary within
/// 1e-10.
Density apply_symmetric(const Density& rho, const Op3& u,
                        ConjugationConvention convention);

/// Tr(P_player rho).
double expected_payoff(Player p, const Density& rho);

/// Payoff from a pure register state (sum of |amp|^2 over paying outcomes).
double expected_payoff(Player p, const Register& psi);

/// Register operator the convention applies to state kets:
/// tensor3(u, u, u) or its adjoint.
Op27 symmetric_operator(const Op3& u, ConjugationConvention convention);

/// Output state of a pure input under symmetric play.
Register play_symmetric(const Register& psi, const Op3& u,
                        ConjugationConvention convention);

struct PlayerPayoffs {
  double alice = 0, bob = 0, charlie = 0;
  double of(Player p) const;
};

/// Payoffs for the deterministic outcome s^i ⊗ s^j ⊗ s^k |000> = |i j k>;
/// i is Charlie's choice, j Bob's, k Alice's.
PlayerPayoffs classical_profile_payoffs(ClassicalStrategy i,
                                        ClassicalStrategy j,
                                        ClassicalStrategy k);

struct ClassicalBaseline {
  std::array<int, 3> winning_profiles{};  // indexed by slot
  int profiles = 0;
  /// winning_profiles / profiles, per slot.
  std::array<double, 3> expectation{};
};

/// Enumerates all 27 pure profiles under uniform randomization.
ClassicalBaseline classical_baseline();

/// Largest payoff difference between the cyclic shifts applied to the GHZ
/// density and the matching classical profile, over all 27 profiles and
/// three players.
double classical_embedding_deviation();

/// true iff classical_embedding_deviation() <= 1e-12.
bool verify_classical_embedding();

struct ConventionCheck {
  ConjugationConvention convention;
  double u_opt_payoff = 0;
  double v_opt_payoff = 0;
  bool passes = false;
};

struct CalibrationResult {
  std::array<ConventionCheck, 2> checks;  // paper, standard
  /// Set when exactly one convention passes.
  std::optional<ConjugationConvention> selected;
  double checked_payoff = 0;
};

/// Evaluates both conventions on the pure GHZ input against the two
/// complex reference optima (U_opt and V_opt must both pay 2/3 within
/// 1e-9).
CalibrationResult calibrate_convention();

}  // namespace qk
