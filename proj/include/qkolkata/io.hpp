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

// JSON forms of strategies, optimization results, equilibrium reports and
// the convention calibration record.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qkolkata/game.hpp"
#include "qkolkata/optimize.hpp"
#include "qkolkata/su3.hpp"

namespace qk {

/// {family, phi, theta, chi, alpha1, alpha2, alpha3, beta1, beta2}, radians.
nlohmann::json to_json(const StrategyParams& p);

/// Inverse of to_json. Missing phases default to 0; the family constraints
/// and angle ranges are validated. Throws ContractViolation.
StrategyParams strategy_from_json(const nlohmann::json& j);

/// {best_payoff, best_params, gradient, eigenvalues, verdict, seed, n_starts,
/// converged_fraction, endpoint_payoffs, ...}.
nlohmann::json to_json(const OptimizationResult& r, const ObjectiveSpec& spec);

/// {best_payoff, best_params, gradient, gradient_closed_form, hessian,
/// eigenvalues, max_unilateral_gain, verdict, seed, n_starts, ...}.
nlohmann::json to_json(const NashReport& r, const ObjectiveSpec& spec);

/// {convention, checked_payoff, timestamp, checks}.
nlohmann::json calibration_json(const CalibrationResult& r,
                                const std::string& timestamp);

/// Pretty-prints with a trailing newline. Throws std::runtime_error on I/O
/// failure.
void write_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace qk
