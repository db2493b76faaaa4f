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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "qkolkata/io.hpp"
#include "qkolkata/sweeps.hpp"

namespace qk {
namespace {

constexpr double kPi = std::numbers::pi;

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qkolkata_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("grid axes include both endpoints") {
  const SweepAxis a{"x", 0.0, 1.0, 5};
  CHECK(a.value(0) == 0.0);
  CHECK(a.value(2) == 0.5);
  CHECK(a.value(4) == 1.0);
  const SweepGrid g = default_entanglement_grid();
  CHECK(g.axes[0].value(72) == kPi);
  CHECK(g.axes[1].value(144) == 2 * kPi);
  CHECK(g.axes[0].value(1) == doctest::Approx(2.5 * kPi / 180));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(SweepGrid{}.validate(), ContractViolation);
  CHECK_THROWS_AS((SweepGrid{{{"f", 0, 1, 1}}}.validate()), ContractViolation);
  CHECK_THROWS_AS((SweepGrid{{{"f", 1, 0, 5}}}.validate()), ContractViolation);
  CHECK_THROWS_AS(fidelity_sweep(SweepGrid{{{"f", -0.5, 1, 5}}}), ContractViolation);
  CHECK_THROWS_AS(fidelity_sweep(default_entanglement_grid()), ContractViolation);
  CHECK_THROWS_AS(entanglement_sweep(default_fidelity_grid()), ContractViolation);
}

TEST_CASE("fidelity sweep follows the affine law") {
  const Sweep s = fidelity_sweep(default_fidelity_grid());
  REQUIRE(s.rows.size() == 101u);
  CHECK(s.parameter_names == std::vector<std::string>{"f"});
  CHECK(s.max_residual() < 1e-10);
  CHECK(s.rows.front().simulated == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(s.rows[50].simulated == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(s.rows.back().simulated == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // Least-squares line through the simulated values.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(s.rows.size());
  for (const auto& r : s.rows) {
    const double x = r.params[0], y = r.simulated;
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  CHECK(slope == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
  CHECK(intercept == doctest::Approx(4.0 / 9.0).epsilon(1e-10));
  CHECK(fidelity_closed_form(0.25) == doctest::Approx(2 * 2.25 / 9));
}

TEST_CASE("entanglement sweep matches its closed form") {
  const Sweep s = entanglement_sweep({{{"vartheta", 0, kPi, 25}, {"varphi", 0, 2 * kPi, 49}}});
  REQUIRE(s.rows.size() == 25u * 49u);
  CHECK(s.max_residual() < 1e-12);
  CHECK(s.max_simulated()->simulated <= 2.0 / 3.0 + 1e-10);
  CHECK(s.min_simulated()->simulated == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  // Rows run with the first parameter outermost.
  CHECK(s.rows[0].params[0] == s.rows[48].params[0]);
  CHECK(s.rows[49].params[0] > s.rows[0].params[0]);
  // Pure |222> behaves classically.
  CHECK(s.rows[0].simulated == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("GHZ recovery points reach two thirds") {
  for (const auto& p : ghz_recovery_points()) {
    CHECK(entanglement_closed_form(p.vartheta, p.varphi) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    const Sweep s = entanglement_sweep(
        {{{"vartheta", p.vartheta - 1e-9, p.vartheta + 1e-9, 2},
          {"varphi", p.varphi - 1e-9, p.varphi + 1e-9, 2}}});
    for (const auto& row : s.rows) {
      CHECK(row.simulated == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("CSV numbers use twelve significant digits") {
  CHECK(format_csv_number(1.0) == "1.0");
  CHECK(format_csv_number(0.0) == "0.0");
  CHECK(format_csv_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_csv_number(1e-17) == "1e-17");
  CHECK(format_csv_number(-3.0) == "-3.0");
}

TEST_CASE("CSV layout") {
  Sweep empty{{"f"}, {}};
  std::ostringstream header_only;
  emit_csv(empty, header_only);
  CHECK(header_only.str() == "f,simulated,closed_form,residual\n");

  Sweep one{{"f"}, {{{1.0}, 2.0 / 3.0, 2.0 / 3.0, 0.0}}};
  std::ostringstream line;
  emit_csv(one, line);
  CHECK(line.str() ==
        "f,simulated,closed_form,residual\n1.0,0.666666666667,0.666666666667,0.0\n");

  Sweep two{{"vartheta", "varphi"}, {}};
  std::ostringstream two_header;
  emit_csv(two, two_header);
  CHECK(two_header.str() == "vartheta,varphi,simulated,closed_form,residual\n");
}

TEST_CASE("CSV and SVG files") {
  const Sweep s = entanglement_sweep({{{"vartheta", 0, kPi, 5}, {"varphi", 0, 2 * kPi, 7}}});
  const auto csv = scratch("e.csv");
  emit_csv(s, csv);
  std::ifstream in(csv);
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 36);

  const auto svg = scratch("e.svg");
  emit_svg_heatmap(s, svg);
  std::ifstream svg_in(svg);
  std::string first;
  std::getline(svg_in, first);
  CHECK(first.rfind("<svg", 0) == 0);
  CHECK_THROWS_AS(emit_svg_heatmap(fidelity_sweep(default_fidelity_grid()), svg),
                  ContractViolation);
  CHECK_THROWS(emit_csv(s, std::filesystem::path("/nonexistent-dir/x.csv")));
}

TEST_CASE("result JSON carries the reported fields") {
  ObjectiveSpec spec;
  spec.family = Family::kSO3;
  const OptimizationResult r = optimize_family(spec, 3, 4);
  const nlohmann::json j = to_json(r, spec);
  for (const char* key : {"best_payoff", "best_params", "gradient", "eigenvalues", "verdict",
                          "seed", "n_starts", "converged_fraction", "endpoint_payoffs"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["seed"] == 3);
  CHECK(j["n_starts"] == 4);
  CHECK(strategy_from_json(j["best_params"]) == r.best_params);

  ObjectiveSpec nspec;
  nspec.family = Family::kSO3;
  const nlohmann::json n = to_json(nash_check(nspec, 1e-4, {1, 2, 3}), nspec);
  CHECK(n["hessian"].size() == 3u);
  CHECK(n.contains("max_unilateral_gain"));

  const nlohmann::json c = calibration_json(calibrate_convention(), "2026-01-01T00:00:00Z");
  CHECK(c["convention"] == "standard");
  CHECK(c["timestamp"] == "2026-01-01T00:00:00Z");
  CHECK(c["checks"].size() == 2u);
}

}  // namespace qk
