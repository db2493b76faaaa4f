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

#include "qkolkata/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qkolkata/parallel.hpp"

namespace qk {

namespace {

using Vec = std::vector<double>;
using Fn = std::function<double(const Vec&)>;

constexpr double kBoundaryNudge = 1e-9;

// Builds params for the family from raw angles without range checks; used
// for finite-difference probes that may step just outside the box.
StrategyParams raw_params(Family family, const Vec& a) {
  StrategyParams p;
  p.family = family;
  p.phi = a[0];
  p.theta = a[1];
  p.chi = a[2];
  if (family == Family::kFullSU3) {
    p.alpha1 = a[3];
    p.alpha2 = a[4];
    p.alpha3 = a[5];
    p.beta1 = a[6];
    p.beta2 = a[7];
  } else if (family == Family::kReduced6) {
    p.alpha3 = a[3];
    p.beta1 = a[4];
    p.beta2 = a[5];
  }
  return p;
}

Op3 as_played(const Op3& u, ConjugationConvention c) {
  return c == ConjugationConvention::kPaper ? Op3(u.adjoint()) : u;
}

Vec project(const Vec& x, const AngleBox& box) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::clamp(x[i], box.lower[i], box.upper[i]);
  }
  return out;
}

Vec fd_gradient(const Fn& f, const Vec& x, double h) {
  Vec g(x.size());
  Vec probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

// Central second differences: three points on the diagonal, the four corner
// points of the 3x3 stencil off the diagonal.
Eigen::MatrixXd fd_hessian(const Fn& f, const Vec& x, double h) {
  const int d = static_cast<int>(x.size());
  Eigen::MatrixXd hess(d, d);
  const double f0 = f(x);
  Vec p = x;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        p[i] = x[i] + h;
        const double up = f(p);
        p[i] = x[i] - h;
        const double down = f(p);
        p[i] = x[i];
        hess(i, i) = (up - 2 * f0 + down) / (h * h);
        continue;
      }
      auto at = [&](double si, double sj) {
        p[i] = x[i] + si * h;
        p[j] = x[j] + sj * h;
        const double v = f(p);
        p[i] = x[i];
        p[j] = x[j];
        return v;
      };
      hess(i, j) =
          (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * h * h);
    }
  }
  return hess;
}

double projected_gradient_norm(const Vec& x, const Vec& g,
                               const AngleBox& box) {
  double norm = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool blocked = (x[i] <= box.lower[i] && g[i] < 0) ||
                         (x[i] >= box.upper[i] && g[i] > 0);
    if (!blocked) norm = std::max(norm, std::abs(g[i]));
  }
  return norm;
}

struct Vertex {
  Vec x;
  double value;
};

// Projected Nelder-Mead, maximizing.
Vertex direct_search(const Fn& f, const Vec& start, double start_value,
                     const AngleBox& box, int max_iterations) {
  const std::size_t d = start.size();
  std::vector<Vertex> simplex;
  simplex.push_back({start, start_value});
  for (std::size_t i = 0; i < d; ++i) {
    Vec x = start;
    const double width = box.upper[i] - box.lower[i];
    x[i] += (x[i] + 1e-3 * width <= box.upper[i] ? 1 : -1) * 1e-3 * width;
    x = project(x, box);
    simplex.push_back({x, f(x)});
  }
  auto by_value = [](const Vertex& a, const Vertex& b) {
    return a.value > b.value;
  };
  for (int it = 0; it < max_iterations; ++it) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.front().value - simplex.back().value < 1e-15) break;
    Vec centroid(d, 0.0);
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[v].x[i] / d;
    auto along = [&](double t) {
      Vec x(d);
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = centroid[i] + t * (simplex.back().x[i] - centroid[i]);
      }
      x = project(x, box);
      return Vertex{x, f(x)};
    };
    const Vertex reflected = along(-1.0);
    if (reflected.value > simplex.front().value) {
      const Vertex expanded = along(-2.0);
      simplex.back() = expanded.value > reflected.value ? expanded : reflected;
    } else if (reflected.value > simplex[d - 1].value) {
      simplex.back() = reflected;
    } else {
      const Vertex contracted = along(0.5);
      if (contracted.value > simplex.back().value) {
        simplex.back() = contracted;
      } else {
        for (std::size_t v = 1; v <= d; ++v) {
          for (std::size_t i = 0; i < d; ++i) {
            simplex[v].x[i] =
                simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
          }
          simplex[v].value = f(simplex[v].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex.front();
}

bool lexicographically_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vec random_point(std::mt19937_64& rng, const AngleBox& box) {
  Vec x(box.lower.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uniform_real_distribution<double> dist(box.lower[i], box.upper[i]);
    x[i] = dist(rng);
  }
  return x;
}

}  // namespace

StrategyParams reference_point(Family family) {
  switch (family) {
    case Family::kFullSU3: return reference_u_opt();
    case Family::kReduced6: return reference_v_opt();
    case Family::kSO3: return reference_o_opt();
  }
  throw ContractViolation("unknown family");
}

double objective(const ObjectiveSpec& spec, const StrategyParams& p) {
  if (p.family != spec.family) {
    throw ContractViolation("strategy is not in the objective's family");
  }
  const Density rho =
      noisy_density(state_by_name(spec.initial_state), spec.fidelity);
  return expected_payoff(
      Player::kAlice, apply_symmetric(rho, su3_matrix(p), spec.convention));
}

double unilateral_objective(const ObjectiveSpec& spec,
                            const StrategyParams& p_alice) {
  const StrategyParams opp = spec.opponents.value_or(reference_point(spec.family));
  const Op3 va = as_played(su3_matrix(p_alice), spec.convention);
  const Op3 vo = as_played(su3_matrix(opp), spec.convention);
  const Density rho =
      noisy_density(state_by_name(spec.initial_state), spec.fidelity);
  const Op27 k = tensor3<double>(va, vo, vo);
  Op27 out = k * rho.matrix() * k.adjoint();
  out = (0.5 * (out + out.adjoint())).eval();
  return expected_payoff(Player::kAlice, Density(std::move(out)));
}

FastObjective::FastObjective(const ObjectiveSpec& spec, Mode mode)
    : family_(spec.family),
      mode_(mode),
      convention_(spec.convention),
      psi_(state_by_name(spec.initial_state)),
      fidelity_(spec.fidelity.value()) {
  if (std::abs(psi_.squaredNorm() - 1.0) > 1e-12) {
    throw ContractViolation("initial state is not normalized");
  }
  opponent_ = as_played(
      su3_matrix(spec.opponents.value_or(reference_point(spec.family))),
      convention_);
}

double FastObjective::at(const StrategyParams& p) const {
  const Op3 u = as_played(assemble_strategy(p), convention_);
  const Register out = mode_ == Mode::kSymmetric
                           ? apply_product<double>(psi_, u, u, u)
                           : apply_product<double>(psi_, u, opponent_, opponent_);
  // The maximally mixed part is invariant under any unitary and pays 12/27.
  return fidelity_ * expected_payoff(Player::kAlice, out) +
         (1.0 - fidelity_) * 12.0 / 27.0;
}

double FastObjective::operator()(const Vec& angles) const {
  return at(raw_params(family_, angles));
}

AscentResult local_ascent(const Fn& f, Vec start, const AngleBox& box,
                          const AscentOptions& options) {
  const std::size_t d = start.size();
  Vec x(d);
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = std::clamp(start[i], box.lower[i] + kBoundaryNudge,
                      box.upper[i] - kBoundaryNudge);
  }
  AscentResult r;
  double fx = f(x);
  double step = 0.1;
  Vec g = fd_gradient(f, x, options.fd_step);
  Vec prev_x, prev_g;
  bool direct_tried = false;
  for (r.iterations = 0; r.iterations < options.max_iterations;
       ++r.iterations) {
    if (projected_gradient_norm(x, g, box) < options.gradient_tolerance) break;
    if (!prev_x.empty()) {
      // Barzilai-Borwein trial step for a concave model.
      double ss = 0, sy = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const double s = x[i] - prev_x[i];
        const double y = prev_g[i] - g[i];
        ss += s * s;
        sy += s * y;
      }
      if (sy > 0) step = std::clamp(ss / sy, 1e-8, 10.0);
    }
    bool accepted = false;
    Vec trial;
    double f_trial = fx;
    for (int k = 0; k < 60; ++k) {
      trial.resize(d);
      for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] + step * g[i];
      trial = project(trial, box);
      double slope = 0, moved = 0;
      for (std::size_t i = 0; i < d; ++i) {
        slope += g[i] * (trial[i] - x[i]);
        moved = std::max(moved, std::abs(trial[i] - x[i]));
      }
      if (moved == 0) break;
      f_trial = f(trial);
      if (f_trial >= fx + 1e-4 * slope && f_trial >= fx) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (direct_tried ||
          projected_gradient_norm(x, g, box) < options.converged_tolerance) {
        break;
      }
      direct_tried = true;
      r.used_direct_search = true;
      const Vertex best = direct_search(f, x, fx, box, 400);
      if (best.value <= fx) break;
      prev_x.clear();
      x = best.x;
      fx = best.value;
      g = fd_gradient(f, x, options.fd_step);
      step = 0.1;
      continue;
    }
    prev_x = x;
    prev_g = g;
    x = trial;
    fx = f_trial;
    g = fd_gradient(f, x, options.fd_step);
  }
  r.angles = x;
  r.value = fx;
  r.projected_gradient_norm = projected_gradient_norm(x, g, box);
  r.converged = r.projected_gradient_norm < options.converged_tolerance;
  return r;
}

OptimizationResult optimize_family(const ObjectiveSpec& spec,
                                   std::uint64_t seed, int n_starts,
                                   const AscentOptions& options) {
  if (n_starts < 1) throw ContractViolation("n_starts must be at least 1");
  const FastObjective obj(spec, FastObjective::Mode::kSymmetric);
  const Fn f = [&obj](const Vec& a) { return obj(a); };
  const AngleBox box = family_box(spec.family);

  std::vector<Vec> starts;
  starts.push_back(reference_point(spec.family).free_angles());
  std::mt19937_64 rng(seed);
  for (int s = 0; s < n_starts; ++s) starts.push_back(random_point(rng, box));

  std::vector<AscentResult> ends(starts.size());
  detail::parallel_for(starts.size(), [&](std::size_t i) {
    ends[i] = local_ascent(f, starts[i], box, options);
  });

  std::size_t best = 0;
  int converged = 0;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    converged += ends[i].converged ? 1 : 0;
    const double diff = ends[i].value - ends[best].value;
    if (diff > options.tie_tolerance ||
        (std::abs(diff) <= options.tie_tolerance &&
         lexicographically_less(ends[i].angles, ends[best].angles))) {
      best = i;
    }
  }

  OptimizationResult result;
  result.best_params =
      StrategyParams::from_free_angles(spec.family, ends[best].angles);
  result.best_payoff = ends[best].value;
  result.starts = n_starts;
  result.warm_start = true;
  result.converged_fraction =
      static_cast<double>(converged) / static_cast<double>(ends.size());
  result.seed = seed;
  for (const auto& e : ends) result.endpoint_payoffs.push_back(e.value);
  result.gradient = fd_gradient(f, ends[best].angles, options.fd_step);
  const Eigen::MatrixXd h = fd_hessian(f, ends[best].angles, options.fd_step);
  const Eigen::VectorXd ev = sym_eigenvalues((h + h.transpose()) / 2);
  result.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  return result;
}

std::array<double, 6> closed_form_derivatives(const StrategyParams& p) {
  if (p.family != Family::kReduced6) {
    throw ContractViolation("closed-form derivatives need the REDUCED6 family");
  }
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  const double phi = p.phi, th = p.theta, chi = p.chi;
  const double al = p.alpha3, b1 = p.beta1, b2 = p.beta2;
  return {
      2.0 / 9.0 * std::cos(2 * phi),
      (-r3 * std::sin(th) + 3 * r2 * std::cos(2 * th) +
       (3 * std::sin(th) + r6) * std::cos(th)) / 27.0,
      2.0 / 27.0 * (std::cos(chi) - std::sin(chi)) *
          (std::sin(chi) + std::cos(chi) + r2),
      4.0 * std::cos(al) / 27.0,
      (-3 * std::sin(b1) + std::sin(2 * b1) + 3 * r3 * std::cos(b1) +
       r3 * std::cos(2 * b1)) / 54.0,
      ((2 * std::sin(b2) + 3) * (-std::cos(b2)) -
       r3 * (3 * std::sin(b2) + std::cos(2 * b2))) / 54.0,
  };
}

double axis_derivative(const ObjectiveSpec& spec, int axis, double value,
                       double step) {
  const FastObjective obj(spec, FastObjective::Mode::kUnilateral);
  Vec x = spec.opponents.value_or(reference_point(spec.family)).free_angles();
  if (axis < 0 || axis >= static_cast<int>(x.size())) {
    throw ContractViolation("axis out of range for family");
  }
  x[axis] = value + step;
  const double up = obj(x);
  x[axis] = value - step;
  const double down = obj(x);
  return (up - down) / (2 * step);
}

NashReport nash_check(const ObjectiveSpec& spec, double step,
                      const NashOptions& options) {
  if (!(step >= 1e-6 && step <= 1e-3)) {
    throw ContractViolation("finite-difference step must lie in [1e-6, 1e-3]");
  }
  NashReport report;
  report.point = spec.opponents.value_or(reference_point(spec.family));
  report.step = step;
  report.seed = options.seed;
  report.n_starts = options.n_starts;
  report.grid_points_per_axis = options.grid_points_per_axis;

  const Family family = spec.family;
  const Fn dense = [&](const Vec& a) {
    return unilateral_objective(spec, raw_params(family, a));
  };
  const Vec x0 = report.point.free_angles();
  report.payoff = unilateral_objective(spec, report.point);
  report.gradient = fd_gradient(dense, x0, step);
  report.hessian = fd_hessian(dense, x0, step);
  report.hessian_asymmetry =
      (report.hessian - report.hessian.transpose()).cwiseAbs().maxCoeff();
  const Eigen::VectorXd ev = sym_eigenvalues(
      ((report.hessian + report.hessian.transpose()) / 2).eval());
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());

  if (family == Family::kReduced6) {
    const auto cf = closed_form_derivatives(report.point);
    report.gradient_closed_form.assign(cf.begin(), cf.end());
    for (std::size_t i = 0; i < cf.size(); ++i) {
      report.closed_form_deviation =
          std::max(report.closed_form_deviation,
                   std::abs(cf[i] - report.gradient[i]));
    }
  }

  // Deviation search: coarse grid, then local ascents from the best grid
  // points and from seeded random points.
  const FastObjective fast(spec, FastObjective::Mode::kUnilateral);
  const Fn f = [&fast](const Vec& a) { return fast(a); };
  const AngleBox box = family_box(family);
  const int d = family_dimension(family);
  const int n = std::max(2, options.grid_points_per_axis);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(n);
  std::vector<double> grid_values(total);
  auto grid_point = [&](std::size_t flat) {
    Vec x(d);
    for (int i = 0; i < d; ++i) {
      const std::size_t k = flat % n;
      flat /= n;
      x[i] = box.lower[i] + (box.upper[i] - box.lower[i]) * k / (n - 1);
    }
    return x;
  };
  detail::parallel_for(total, [&](std::size_t i) {
    grid_values[i] = f(grid_point(i));
  });
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t from_grid =
      std::min<std::size_t>(total, (options.n_starts + 1) / 2);
  std::partial_sort(order.begin(), order.begin() + from_grid, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return grid_values[a] > grid_values[b] ||
                             (grid_values[a] == grid_values[b] && a < b);
                    });
  std::vector<Vec> starts;
  for (std::size_t i = 0; i < from_grid; ++i) {
    starts.push_back(grid_point(order[i]));
  }
  std::mt19937_64 rng(options.seed);
  while (static_cast<int>(starts.size()) < options.n_starts) {
    starts.push_back(random_point(rng, box));
  }
  std::vector<double> ascents(starts.size());
  detail::parallel_for(starts.size(), [&](std::size_t i) {
    ascents[i] = local_ascent(f, starts[i], box).value;
  });
  double best = *std::max_element(grid_values.begin(), grid_values.end());
  for (double v : ascents) best = std::max(best, v);
  report.max_unilateral_gain = best - report.payoff;

  double grad_norm = 0;
  for (double g : report.gradient) grad_norm = std::max(grad_norm, std::abs(g));
  const bool negative_definite =
      std::all_of(report.eigenvalues.begin(), report.eigenvalues.end(),
                  [](double e) { return e < -1e-8; });
  report.verdict = grad_norm < 1e-6 && negative_definite &&
                   report.max_unilateral_gain < 1e-6;
  return report;
}

}  // namespace qk
