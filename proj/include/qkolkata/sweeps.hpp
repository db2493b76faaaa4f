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

// Payoff at U_opt as a function of the noise fidelity and of the amplitudes
// of the tunable initial state, each paired with its closed form.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "qkolkata/game.hpp"
#include "qkolkata/states.hpp"

namespace qk {

struct SweepAxis {
  std::string name;
  double min = 0;
  double max = 1;
  int steps = 2;

  /// Inclusive, evenly spaced: min + (max - min) k / (steps - 1).
  double value(int k) const;
};

struct SweepGrid {
  std::vector<SweepAxis> axes;

  /// steps >= 2 and min < max on every axis.
  void validate() const;
};

struct SweepRow {
  std::vector<double> params;
  double simulated = 0;
  double closed_form = 0;
  double residual = 0;
};

struct Sweep {
  std::vector<std::string> parameter_names;
  std::vector<SweepRow> rows;

  double max_residual() const;
  const SweepRow* max_simulated() const;
  const SweepRow* min_simulated() const;
};

/// 2(2 + f)/9.
double fidelity_closed_form(double f);

/// (1/9)(sin vp sin 2vt + cos vp (2 sin vp sin^2 vt + sin 2vt) + 4).
double entanglement_closed_form(double vartheta, double varphi);

/// 101 points over f in [0, 1].
SweepGrid default_fidelity_grid();
/// 73 x 145 points over [0, pi] x [0, 2pi] (2.5 degree spacing).
SweepGrid default_entanglement_grid();

/// In-range (vartheta, varphi) where the tunable state equals the GHZ state
/// up to a global phase.
std::vector<EntanglementParams> ghz_recovery_points();

/// Full density pipeline (noisy GHZ density, symmetric U_opt, trace) per f.
Sweep fidelity_sweep(const SweepGrid& grid,
                     ConjugationConvention convention = kDefaultConvention);

/// Pure tunable state, f = 1, symmetric U_opt, per (vartheta, varphi).
/// Rows are ordered with vartheta outermost.
Sweep entanglement_sweep(const SweepGrid& grid,
                         ConjugationConvention convention = kDefaultConvention);

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_csv_number(double v);

/// Header "<params...>,simulated,closed_form,residual", then one LF-ended
/// line per row.
void emit_csv(const Sweep& sweep, std::ostream& out);

/// Throws std::runtime_error if the file cannot be written.
void emit_csv(const Sweep& sweep, const std::filesystem::path& path);

/// Heat map of the simulated payoff for a two-parameter sweep.
void emit_svg_heatmap(const Sweep& sweep, const std::filesystem::path& path);

}  // namespace qk
