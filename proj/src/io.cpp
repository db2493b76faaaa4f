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

#include "qkolkata/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace qk {

using nlohmann::json;

json to_json(const StrategyParams& p) {
  return {{"family", family_name(p.family)},
          {"phi", p.phi},
          {"theta", p.theta},
          {"chi", p.chi},
          {"alpha1", p.alpha1},
          {"alpha2", p.alpha2},
          {"alpha3", p.alpha3},
          {"beta1", p.beta1},
          {"beta2", p.beta2}};
}

StrategyParams strategy_from_json(const json& j) {
  if (!j.is_object()) throw ContractViolation("strategy must be a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) {
    throw ContractViolation("strategy needs a string 'family'");
  }
  const auto family = parse_family(j["family"].get<std::string>());
  if (!family) throw ContractViolation("unknown family in strategy JSON");
  auto angle = [&](const char* key, bool required) {
    if (!j.contains(key)) {
      if (required) throw ContractViolation(std::string("missing '") + key + "'");
      return 0.0;
    }
    if (!j[key].is_number()) {
      throw ContractViolation(std::string("'") + key + "' must be a number");
    }
    return j[key].get<double>();
  };
  StrategyParams p;
  p.family = *family;
  p.phi = angle("phi", true);
  p.theta = angle("theta", true);
  p.chi = angle("chi", true);
  p.alpha1 = angle("alpha1", false);
  p.alpha2 = angle("alpha2", false);
  p.alpha3 = angle("alpha3", false);
  p.beta1 = angle("beta1", false);
  p.beta2 = angle("beta2", false);
  p.validate();
  return p;
}

namespace {

json spec_json(const ObjectiveSpec& spec) {
  return {{"family", family_name(spec.family)},
          {"state", spec.initial_state},
          {"fidelity", spec.fidelity.value()},
          {"convention", convention_name(spec.convention)}};
}

}  // namespace

json to_json(const OptimizationResult& r, const ObjectiveSpec& spec) {
  double grad_norm = 0;
  for (double g : r.gradient) grad_norm = std::max(grad_norm, std::abs(g));
  // Zero curvature is expected along payoff-preserving phase directions, so
  // the local-maximum verdict only requires a non-positive spectrum.
  const bool local_max =
      grad_norm < 1e-6 &&
      std::all_of(r.eigenvalues.begin(), r.eigenvalues.end(),
                  [](double e) { return e < 1e-6; });
  return {{"best_payoff", r.best_payoff},
          {"best_params", to_json(r.best_params)},
          {"gradient", r.gradient},
          {"eigenvalues", r.eigenvalues},
          {"verdict", local_max},
          {"seed", r.seed},
          {"n_starts", r.starts},
          {"warm_start", r.warm_start},
          {"converged_fraction", r.converged_fraction},
          {"endpoint_payoffs", r.endpoint_payoffs},
          {"objective", spec_json(spec)}};
}

json to_json(const NashReport& r, const ObjectiveSpec& spec) {
  json hessian = json::array();
  for (Eigen::Index i = 0; i < r.hessian.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < r.hessian.cols(); ++k) row.push_back(r.hessian(i, k));
    hessian.push_back(row);
  }
  return {{"best_payoff", r.payoff},
          {"best_params", to_json(r.point)},
          {"gradient", r.gradient},
          {"gradient_closed_form", r.gradient_closed_form},
          {"closed_form_deviation", r.closed_form_deviation},
          {"hessian", hessian},
          {"hessian_asymmetry", r.hessian_asymmetry},
          {"eigenvalues", r.eigenvalues},
          {"max_unilateral_gain", r.max_unilateral_gain},
          {"verdict", r.verdict},
          {"fd_step", r.step},
          {"seed", r.seed},
          {"n_starts", r.n_starts},
          {"grid_points_per_axis", r.grid_points_per_axis},
          {"objective", spec_json(spec)}};
}

json calibration_json(const CalibrationResult& r, const std::string& timestamp) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"convention", convention_name(c.convention)},
                      {"u_opt_payoff", c.u_opt_payoff},
                      {"v_opt_payoff", c.v_opt_payoff},
                      {"passes", c.passes}});
  }
  return {{"convention",
           r.selected ? json(convention_name(*r.selected)) : json(nullptr)},
          {"checked_payoff", r.checked_payoff},
          {"timestamp", timestamp},
          {"checks", checks}};
}

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qk
