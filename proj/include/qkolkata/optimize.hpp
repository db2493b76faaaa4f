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

// Symmetric-play optimization within a strategy family, and the
// unilateral-deviation equilibrium check.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qkolkata/game.hpp"
#include "qkolkata/states.hpp"
#include "qkolkata/su3.hpp"

namespace qk {

struct ObjectiveSpec {
  Family family = Family::kFullSU3;
  std::string initial_state = "ghz";
  Fidelity fidelity{1.0};
  ConjugationConvention convention = kDefaultConvention;
  /// Strategy held by Bob and Charlie in the unilateral objective; the
  /// family's reference optimum when unset.
  std::optional<StrategyParams> opponents;
};

/// Reference optimum of the family: U_opt, V_opt or O_opt.
StrategyParams reference_point(Family family);

/// E_A when all three players apply su3_matrix(p), evaluated through the
/// full density pipeline (noisy density, conjugation, trace).
double objective(const ObjectiveSpec& spec, const StrategyParams& p);

/// E_A when Alice plays p_alice and Bob and Charlie play the opponents'
/// strategy. Density pipeline as in objective().
double unilateral_objective(const ObjectiveSpec& spec,
                            const StrategyParams& p_alice);

/// Evaluator over the family's free angles. It expands the noisy density
/// into its pure part and the identity part (which pays 12/27 under any
/// unitary), so each call costs three 3x3 local applications.
class FastObjective {
 public:
  enum class Mode { kSymmetric, kUnilateral };

  FastObjective(const ObjectiveSpec& spec, Mode mode);

  double operator()(const std::vector<double>& angles) const;
  double at(const StrategyParams& p) const;

  Family family() const { return family_; }

 private:
  Family family_;
  Mode mode_;
  ConjugationConvention convention_;
  Register psi_;
  double fidelity_;
  Op3 opponent_;
};

struct OptimizationResult {
  StrategyParams best_params;
  double best_payoff = 0;
  int starts = 0;  // random starts, excluding the warm start
  bool warm_start = true;
  double converged_fraction = 0;
  std::uint64_t seed = 0;
  /// Endpoint payoffs in start order, warm start first.
  std::vector<double> endpoint_payoffs;
  /// Central-difference gradient and Hessian spectrum at best_params.
  std::vector<double> gradient;
  std::vector<double> eigenvalues;
};

struct AscentOptions {
  double fd_step = 1e-5;
  int max_iterations = 2000;
  double gradient_tolerance = 1e-9;
  /// Projected-gradient norm below which an endpoint counts as converged.
  double converged_tolerance = 1e-6;
  /// Payoffs closer than this tie; ties go to the lexicographically smallest
  /// angle vector. Any positive value can return an endpoint slightly below
  /// the best one.
  double tie_tolerance = 0.0;
};

struct AscentResult {
  std::vector<double> angles;
  double value = 0;
  double projected_gradient_norm = 0;
  int iterations = 0;
  bool converged = false;
  bool used_direct_search = false;
};

/// Projected central-difference gradient ascent with backtracking, falling
/// back to a projected Nelder-Mead search when the line search stalls.
AscentResult local_ascent(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, const AngleBox& box,
                          const AscentOptions& options = {});

/// Multi-start maximization of the symmetric objective. Deterministic in
/// (spec, seed, n_starts); starts run in parallel.
OptimizationResult optimize_family(const ObjectiveSpec& spec,
                                   std::uint64_t seed, int n_starts,
                                   const AscentOptions& options = {});

/// Closed-form on-axis derivatives of Alice's unilateral payoff in the
/// six-angle family, each evaluated at the corresponding angle of p:
/// (phi, theta, chi, alpha, beta1, beta2).
std::array<double, 6> closed_form_derivatives(const StrategyParams& p);

/// Central-difference derivative of the unilateral objective along one
/// free angle, all other angles held at the opponents' strategy.
double axis_derivative(const ObjectiveSpec& spec, int axis, double value,
                       double step = 1e-5);

struct NashReport {
  StrategyParams point;
  double payoff = 0;
  std::vector<double> gradient;
  /// Only filled for the six-angle family.
  std::vector<double> gradient_closed_form;
  Eigen::MatrixXd hessian;
  std::vector<double> eigenvalues;
  double hessian_asymmetry = 0;
  double closed_form_deviation = 0;
  double max_unilateral_gain = 0;
  bool verdict = false;
  double step = 0;
  std::uint64_t seed = 0;
  int n_starts = 0;
  int grid_points_per_axis = 0;
};

struct NashOptions {
  std::uint64_t seed = 42;
  /// Local ascents of Alice's deviation seeded from the best grid points.
  int n_starts = 16;
  int grid_points_per_axis = 5;
};

/// Gradient, Hessian and deviation search for Alice at the opponents'
/// strategy. step must lie in [1e-6, 1e-3].
NashReport nash_check(const ObjectiveSpec& spec, double step,
                      const NashOptions& options = {});

}  // namespace qk
