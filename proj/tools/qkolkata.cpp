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

// qkolkata: reproduce reference strategies, run optimizations, equilibrium
// checks and payoff sweeps for the three-qutrit Kolkata restaurant game.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qkolkata/game.hpp"
#include "qkolkata/io.hpp"
#include "qkolkata/optimize.hpp"
#include "qkolkata/states.hpp"
#include "qkolkata/su3.hpp"
#include "qkolkata/sweeps.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kEnvError = 2;

struct RunConfig {
  std::string state = "ghz";
  double fidelity = 1.0;
  std::string family = "FULL_SU3";
  std::uint64_t seed = 42;
  int starts = 200;
  double fd_step = 1e-5;
  std::string out = ".";
  std::string convention = "standard";
  bool svg = false;
  int f_steps = 101;
  int vartheta_steps = 73;
  int varphi_steps = 145;
};

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_params(const qk::StrategyParams& p) {
  std::printf("  family  %s\n", std::string(qk::family_name(p.family)).c_str());
  std::printf("  phi     %.15g\n  theta   %.15g\n  chi     %.15g\n", p.phi,
              p.theta, p.chi);
  std::printf("  alpha   %.15g %.15g %.15g\n", p.alpha1, p.alpha2, p.alpha3);
  std::printf("  beta    %.15g %.15g\n", p.beta1, p.beta2);
}

fs::path ensure_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir);
  return p;
}

// Resolves --convention. "auto" calibrates and persists calibration.json.
qk::ConjugationConvention resolve_convention(const RunConfig& cfg) {
  if (auto c = qk::parse_convention(cfg.convention)) return *c;
  if (cfg.convention != "auto") {
    throw qk::ContractViolation("unknown convention '" + cfg.convention + "'");
  }
  const qk::CalibrationResult cal = qk::calibrate_convention();
  qk::write_json(qk::calibration_json(cal, utc_timestamp()),
                 ensure_out_dir(cfg.out) / "calibration.json");
  for (const auto& c : cal.checks) {
    std::printf("calibration %-8s U_opt %.12f  V_opt %.12f  %s\n",
                std::string(qk::convention_name(c.convention)).c_str(),
                c.u_opt_payoff, c.v_opt_payoff, c.passes ? "PASS" : "FAIL");
  }
  if (!cal.selected) {
    throw qk::NumericalError("calibration did not single out one convention");
  }
  std::printf("calibrated convention: %s\n",
              std::string(qk::convention_name(*cal.selected)).c_str());
  return *cal.selected;
}

qk::ObjectiveSpec make_spec(const RunConfig& cfg) {
  const auto family = qk::parse_family(cfg.family);
  if (!family) throw qk::ContractViolation("unknown family '" + cfg.family + "'");
  qk::ObjectiveSpec spec;
  spec.family = *family;
  spec.initial_state = cfg.state;
  spec.fidelity = qk::Fidelity(cfg.fidelity);
  spec.convention = resolve_convention(cfg);
  qk::state_by_name(spec.initial_state);  // reject unknown names early
  return spec;
}

int cmd_reproduce(int table, const RunConfig& cfg) {
  qk::StrategyParams p;
  double expected = 2.0 / 3.0;
  const char* label = "";
  switch (table) {
    case 1: p = qk::reference_u_opt(); label = "U_opt"; break;
    case 2: p = qk::reference_v_opt(); label = "V_opt"; break;
    case 3:
      p = qk::reference_o_opt();
      label = "O_opt";
      expected = 40.0 / 81.0;
      break;
    default:
      std::fprintf(stderr, "reproduce takes 1, 2 or 3\n");
      return kEnvError;
  }
  const qk::ConjugationConvention conv = resolve_convention(cfg);
  const qk::Density rho = qk::apply_symmetric(
      qk::Density::pure(qk::ghz_state()), qk::su3_matrix(p), conv);
  std::printf("%s (reference point %d), GHZ input, f = 1, convention %s\n",
              label, table, std::string(qk::convention_name(conv)).c_str());
  print_params(p);
  bool ok = true;
  for (qk::Player pl : qk::kPlayers) {
    const double e = qk::expected_payoff(pl, rho);
    std::printf("  E_%s = %.15f\n", std::string(qk::player_name(pl)).c_str(), e);
    ok = ok && std::abs(e - expected) <= 1e-9;
  }
  std::printf("  expected %.15f\n", expected);
  if (table == 2) {
    const double e1 = qk::expected_payoff(
        qk::Player::kAlice,
        qk::apply_symmetric(qk::Density::pure(qk::ghz_state()),
                            qk::su3_matrix(qk::reference_u_opt()), conv));
    const double e2 = qk::expected_payoff(qk::Player::kAlice, rho);
    std::printf("  |E(V_opt) - E(U_opt)| = %.3e\n", std::abs(e1 - e2));
    ok = ok && std::abs(e1 - e2) <= 1e-12;
  }
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? kPass : kFail;
}

int cmd_classical() {
  std::printf("profile |C B A>   payoff A B C\n");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const qk::PlayerPayoffs pay = qk::classical_profile_payoffs({i}, {j}, {k});
        std::printf("        |%d %d %d>   %.0f %.0f %.0f\n", i, j, k, pay.alice,
                    pay.bob, pay.charlie);
      }
  const qk::ClassicalBaseline base = qk::classical_baseline();
  for (qk::Player p : qk::kPlayers) {
    std::printf("profiles paying %s: %d\n",
                std::string(qk::player_name(p)).c_str(),
                base.winning_profiles[qk::slot(p)]);
  }
  const int num = base.winning_profiles[0];
  std::printf("E_classical = %d/27 = 4/9 (%.15f)\n", num, base.expectation[0]);
  const double dev = qk::classical_embedding_deviation();
  const bool ok = dev <= 1e-12 && num == 12;
  std::printf("classical embedding on GHZ (max deviation %.3e): %s\n", dev,
              dev <= 1e-12 ? "PASS" : "FAIL");
  return ok ? kPass : kFail;
}

int cmd_optimize(const RunConfig& cfg) {
  const qk::ObjectiveSpec spec = make_spec(cfg);
  qk::AscentOptions opts;
  opts.fd_step = cfg.fd_step;
  const qk::OptimizationResult r = qk::optimize_family(spec, cfg.seed, cfg.starts, opts);
  const fs::path out = ensure_out_dir(cfg.out) / "optimize.json";
  qk::write_json(qk::to_json(r, spec), out);
  std::printf("family %s, state %s, f = %g, convention %s, seed %llu, %d starts\n",
              cfg.family.c_str(), cfg.state.c_str(), cfg.fidelity,
              std::string(qk::convention_name(spec.convention)).c_str(),
              static_cast<unsigned long long>(cfg.seed), cfg.starts);
  std::printf("best payoff %.15f (converged fraction %.3f)\n", r.best_payoff,
              r.converged_fraction);
  print_params(r.best_params);
  std::printf("wrote %s\n", out.string().c_str());
  return kPass;
}

int cmd_nash(const RunConfig& cfg) {
  const qk::ObjectiveSpec spec = make_spec(cfg);
  qk::NashOptions opts;
  opts.seed = cfg.seed;
  const qk::NashReport r = qk::nash_check(spec, cfg.fd_step, opts);
  const fs::path out = ensure_out_dir(cfg.out) / "nash.json";
  qk::write_json(qk::to_json(r, spec), out);
  std::printf("unilateral deviation check at the %s reference point\n",
              cfg.family.c_str());
  print_params(r.point);
  std::printf("payoff %.15f\n", r.payoff);
  std::printf("gradient:");
  for (double g : r.gradient) std::printf(" %.3e", g);
  std::printf("\n");
  if (!r.gradient_closed_form.empty()) {
    std::printf("closed-form gradient:");
    for (double g : r.gradient_closed_form) std::printf(" %.3e", g);
    std::printf("\n");
  }
  std::printf("hessian eigenvalues:");
  for (double e : r.eigenvalues) std::printf(" %.6f", e);
  std::printf("\nmax unilateral gain %.3e\n", r.max_unilateral_gain);
  std::printf("verdict: %s\n", r.verdict ? "NASH EQUILIBRIUM" : "NOT VERIFIED");
  std::printf("wrote %s\n", out.string().c_str());
  return r.verdict ? kPass : kFail;
}

int cmd_sweep(const std::string& kind, const RunConfig& cfg) {
  const qk::ConjugationConvention conv = resolve_convention(cfg);
  const fs::path dir = ensure_out_dir(cfg.out);
  if (kind == "fidelity") {
    qk::SweepGrid grid = qk::default_fidelity_grid();
    grid.axes[0].steps = cfg.f_steps;
    const qk::Sweep s = qk::fidelity_sweep(grid, conv);
    qk::emit_csv(s, dir / "sweep-fidelity.csv");
    std::printf("fidelity sweep: %zu rows, max residual %.3e\n", s.rows.size(),
                s.max_residual());
    std::printf("E(f=0) = %.15f  E(f=1) = %.15f\n", s.rows.front().simulated,
                s.rows.back().simulated);
    std::printf("wrote %s\n", (dir / "sweep-fidelity.csv").string().c_str());
    return s.max_residual() < 1e-10 ? kPass : kFail;
  }
  if (kind == "entanglement") {
    qk::SweepGrid grid = qk::default_entanglement_grid();
    grid.axes[0].steps = cfg.vartheta_steps;
    grid.axes[1].steps = cfg.varphi_steps;
    const qk::Sweep s = qk::entanglement_sweep(grid, conv);
    qk::emit_csv(s, dir / "sweep-entanglement.csv");
    const qk::SweepRow* hi = s.max_simulated();
    const qk::SweepRow* lo = s.min_simulated();
    std::printf("entanglement sweep: %zu rows, max residual %.3e\n",
                s.rows.size(), s.max_residual());
    std::printf("grid maximum %.12f at vartheta %.6f varphi %.6f\n",
                hi->simulated, hi->params[0], hi->params[1]);
    std::printf("grid minimum %.12f at vartheta %.6f varphi %.6f\n",
                lo->simulated, lo->params[0], lo->params[1]);
    for (const auto& pt : qk::ghz_recovery_points()) {
      const qk::Register out = qk::play_symmetric(qk::tunable_state(pt),
                                                  qk::su3_matrix(qk::reference_u_opt()), conv);
      std::printf("GHZ recovery point (%.6f, %.6f): E = %.15f\n", pt.vartheta,
                  pt.varphi, qk::expected_payoff(qk::Player::kAlice, out));
    }
    std::printf("wrote %s\n", (dir / "sweep-entanglement.csv").string().c_str());
    if (cfg.svg) {
      qk::emit_svg_heatmap(s, dir / "sweep-entanglement.svg");
      std::printf("wrote %s\n", (dir / "sweep-entanglement.svg").string().c_str());
    }
    return s.max_residual() < 1e-10 ? kPass : kFail;
  }
  std::fprintf(stderr, "sweep kind must be fidelity or entanglement\n");
  return kEnvError;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--convention", cfg.convention,
                  "Conjugation convention: paper, standard or auto")
      ->check(CLI::IsMember({"paper", "standard", "auto"}));
  cmd->add_option("--out", cfg.out, "Output directory");
}

void add_objective(CLI::App* cmd, RunConfig& cfg) {
  add_common(cmd, cfg);
  cmd->add_option("--state", cfg.state,
                  "Initial state: ghz, aharonov, product000, tunable:<vt>,<vp>");
  cmd->add_option("--fidelity", cfg.fidelity, "Noise fidelity f in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--family", cfg.family, "FULL_SU3, REDUCED6 or SO3")
      ->check(CLI::IsMember({"FULL_SU3", "REDUCED6", "SO3"}));
  cmd->add_option("--seed", cfg.seed, "Random seed");
  cmd->add_option("--starts", cfg.starts, "Number of random starts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fd-step", cfg.fd_step, "Finite-difference step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qutrit quantum Kolkata restaurant game"};
  app.require_subcommand(1);
  RunConfig cfg;

  int table = 1;
  auto* reproduce = app.add_subcommand("reproduce", "Evaluate a reference optimum (1, 2 or 3)");
  reproduce->add_option("table", table, "1: U_opt, 2: V_opt, 3: O_opt")->required();
  add_common(reproduce, cfg);

  app.add_subcommand("classical", "Classical baseline and embedding check");

  auto* optimize = app.add_subcommand("optimize", "Multi-start payoff maximization");
  add_objective(optimize, cfg);

  auto* nash = app.add_subcommand("nash", "Unilateral-deviation equilibrium check");
  add_objective(nash, cfg);

  std::string kind;
  auto* sweep = app.add_subcommand("sweep", "Fidelity or entanglement payoff sweep");
  sweep->add_option("kind", kind, "fidelity or entanglement")
      ->required()
      ->check(CLI::IsMember({"fidelity", "entanglement"}));
  add_common(sweep, cfg);
  sweep->add_flag("--svg", cfg.svg, "Also write an SVG heat map (entanglement)");
  sweep->add_option("--f-steps", cfg.f_steps, "Fidelity grid points");
  sweep->add_option("--vartheta-steps", cfg.vartheta_steps, "vartheta grid points");
  sweep->add_option("--varphi-steps", cfg.varphi_steps, "varphi grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kEnvError;
  }

  bool nash_family_set = nash->count("--family") > 0;
  if (nash->parsed() && !nash_family_set) cfg.family = "REDUCED6";

  try {
    if (reproduce->parsed()) return cmd_reproduce(table, cfg);
    if (app.got_subcommand("classical")) return cmd_classical();
    if (optimize->parsed()) return cmd_optimize(cfg);
    if (nash->parsed()) return cmd_nash(cfg);
    if (sweep->parsed()) return cmd_sweep(kind, cfg);
  } catch (const qk::NumericalError& e) {
    std::fprintf(stderr, "verification error: %s\n", e.what());
    return kFail;
  } catch (const qk::ContractViolation& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kEnvError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kEnvError;
  }
  return kEnvError;
}
