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

#include "qkolkata/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "qkolkata/parallel.hpp"
#include "qkolkata/su3.hpp"

namespace qk {

namespace {

constexpr double kPi = std::numbers::pi;

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

double SweepAxis::value(int k) const {
  if (k == steps - 1) return max;
  return min + (max - min) * static_cast<double>(k) / (steps - 1);
}

void SweepGrid::validate() const {
  if (axes.empty()) throw ContractViolation("sweep grid has no axes");
  for (const auto& a : axes) {
    if (a.steps < 2) throw ContractViolation("axis " + a.name + " needs >= 2 steps");
    if (!(a.min < a.max)) throw ContractViolation("axis " + a.name + " needs min < max");
  }
}

double Sweep::max_residual() const {
  double r = 0;
  for (const auto& row : rows) r = std::max(r, row.residual);
  return r;
}

const SweepRow* Sweep::max_simulated() const {
  const auto it = std::max_element(
      rows.begin(), rows.end(),
      [](const auto& a, const auto& b) { return a.simulated < b.simulated; });
  return it == rows.end() ? nullptr : &*it;
}

const SweepRow* Sweep::min_simulated() const {
  const auto it = std::min_element(
      rows.begin(), rows.end(),
      [](const auto& a, const auto& b) { return a.simulated < b.simulated; });
  return it == rows.end() ? nullptr : &*it;
}

double fidelity_closed_form(double f) { return 2.0 * (2.0 + f) / 9.0; }

double entanglement_closed_form(double vt, double vp) {
  const double s2 = std::sin(2 * vt);
  const double st = std::sin(vt);
  return (std::sin(vp) * s2 +
          std::cos(vp) * (2 * std::sin(vp) * st * st + s2) + 4.0) /
         9.0;
}

SweepGrid default_fidelity_grid() { return {{{"f", 0.0, 1.0, 101}}}; }

SweepGrid default_entanglement_grid() {
  return {{{"vartheta", 0.0, kPi, 73}, {"varphi", 0.0, 2 * kPi, 145}}};
}

std::vector<EntanglementParams> ghz_recovery_points() {
  const double t = std::acos(1 / std::sqrt(3.0));
  return {{t, kPi / 4}, {kPi - t, 5 * kPi / 4}};
}

Sweep fidelity_sweep(const SweepGrid& grid, ConjugationConvention convention) {
  grid.validate();
  if (grid.axes.size() != 1) {
    throw ContractViolation("fidelity sweep takes one axis");
  }
  const SweepAxis& axis = grid.axes[0];
  if (axis.min < 0.0 || axis.max > 1.0) {
    throw ContractViolation("fidelity range must lie in [0, 1]");
  }
  const Op3 u = su3_matrix(reference_u_opt());
  const Register ghz = ghz_state();
  Sweep sweep{{axis.name}, std::vector<SweepRow>(axis.steps)};
  detail::parallel_for(axis.steps, [&](std::size_t k) {
    const double f = axis.value(static_cast<int>(k));
    const Density rho = apply_symmetric(noisy_density(ghz, Fidelity(f)), u,
                                        convention);
    SweepRow& row = sweep.rows[k];
    row.params = {f};
    row.simulated = expected_payoff(Player::kAlice, rho);
    row.closed_form = fidelity_closed_form(f);
    row.residual = std::abs(row.simulated - row.closed_form);
  });
  return sweep;
}

Sweep entanglement_sweep(const SweepGrid& grid,
                         ConjugationConvention convention) {
  grid.validate();
  if (grid.axes.size() != 2) {
    throw ContractViolation("entanglement sweep takes two axes");
  }
  const SweepAxis& vt_axis = grid.axes[0];
  const SweepAxis& vp_axis = grid.axes[1];
  validate(EntanglementParams{vt_axis.min, vp_axis.min});
  validate(EntanglementParams{vt_axis.max, vp_axis.max});
  const Op3 u = su3_matrix(reference_u_opt());
  const std::size_t n = static_cast<std::size_t>(vt_axis.steps) * vp_axis.steps;
  Sweep sweep{{vt_axis.name, vp_axis.name}, std::vector<SweepRow>(n)};
  detail::parallel_for(n, [&](std::size_t idx) {
    const double vt = vt_axis.value(static_cast<int>(idx / vp_axis.steps));
    const double vp = vp_axis.value(static_cast<int>(idx % vp_axis.steps));
    const Register out =
        play_symmetric(tunable_state(EntanglementParams{vt, vp}), u, convention);
    SweepRow& row = sweep.rows[idx];
    row.params = {vt, vp};
    row.simulated = expected_payoff(Player::kAlice, out);
    row.closed_form = entanglement_closed_form(vt, vp);
    row.residual = std::abs(row.simulated - row.closed_form);
  });
  return sweep;
}

std::string format_csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void emit_csv(const Sweep& sweep, std::ostream& out) {
  for (const auto& name : sweep.parameter_names) out << name << ',';
  out << "simulated,closed_form,residual\n";
  for (const auto& row : sweep.rows) {
    for (double p : row.params) out << format_csv_number(p) << ',';
    out << format_csv_number(row.simulated) << ','
        << format_csv_number(row.closed_form) << ','
        << format_csv_number(row.residual) << '\n';
  }
}

void emit_csv(const Sweep& sweep, const std::filesystem::path& path) {
  std::ofstream out = open_for_writing(path);
  emit_csv(sweep, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void emit_svg_heatmap(const Sweep& sweep, const std::filesystem::path& path) {
  if (sweep.parameter_names.size() != 2 || sweep.rows.empty()) {
    throw ContractViolation("heat map needs a non-empty two-parameter sweep");
  }
  // Recover the grid shape from the row ordering (first parameter outermost).
  std::size_t cols = 1;
  while (cols < sweep.rows.size() &&
         sweep.rows[cols].params[0] == sweep.rows[0].params[0]) {
    ++cols;
  }
  const std::size_t rows = sweep.rows.size() / cols;
  const double lo = sweep.min_simulated()->simulated;
  const double hi = sweep.max_simulated()->simulated;
  constexpr int kCell = 4, kMargin = 60;
  const int width = static_cast<int>(cols) * kCell + 2 * kMargin;
  const int height = static_cast<int>(rows) * kCell + 2 * kMargin;

  auto color = [&](double v) {
    const double t = hi > lo ? (v - lo) / (hi - lo) : 0.0;
    // Dark blue -> teal -> yellow.
    const int r = static_cast<int>(std::lround(255 * std::clamp(2 * t - 1, 0.0, 1.0)));
    const int g = static_cast<int>(std::lround(40 + 200 * t));
    const int b = static_cast<int>(std::lround(120 * (1 - t) + 40));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return std::string(buf);
  };

  std::ofstream out = open_for_writing(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const SweepRow& row = sweep.rows[r * cols + c];
      // First parameter runs up the vertical axis.
      out << "<rect x=\"" << kMargin + c * kCell << "\" y=\""
          << kMargin + (rows - 1 - r) * kCell << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << color(row.simulated)
          << "\"/>\n";
    }
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 20
      << "\" text-anchor=\"middle\">" << sweep.parameter_names[1] << "</text>\n";
  out << "<text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 "
      << height / 2 << ")\" text-anchor=\"middle\">" << sweep.parameter_names[0]
      << "</text>\n";
  out << "<text x=\"" << kMargin << "\" y=\"30\">E range ["
      << format_csv_number(lo) << ", " << format_csv_number(hi) << "]</text>\n";
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qk
