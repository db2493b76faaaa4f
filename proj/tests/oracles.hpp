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

// Test-only reference computations. Nothing here calls into the library's
// tensor, payoff or objective code paths.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "qkolkata/su3.hpp"

namespace qk::oracle {

using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;

/// Two-factor Kronecker product by explicit block placement.
inline MatC kron(const MatC& a, const MatC& b) {
  MatC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// c ⊗ b ⊗ a by nested two-factor products.
inline MatC kron3(const MatC& a, const MatC& b, const MatC& c) {
  return kron(c, kron(b, a));
}

/// Minority rule on explicit choices: is `mine` different from both others.
constexpr bool unique_choice(int mine, int other1, int other2) {
  return mine != other1 && mine != other2;
}

/// Alice's payoff probability from outcome amplitudes, decoding the index
/// digit by digit with division rather than the library's helpers.
inline double alice_payoff(const VecC& amps) {
  double e = 0;
  for (int x3 = 0; x3 < 3; ++x3)
    for (int x2 = 0; x2 < 3; ++x2)
      for (int x1 = 0; x1 < 3; ++x1) {
        if (unique_choice(x1, x2, x3)) e += std::norm(amps(x3 * 9 + x2 * 3 + x1));
      }
  return e;
}

inline VecC ghz() {
  VecC v = VecC::Zero(27);
  v(0) = v(13) = v(26) = 1.0 / std::sqrt(3.0);
  return v;
}

/// Standard-convention payoff for Alice with explicit 27x27 products.
inline double alice_payoff(const MatC& ua, const MatC& ub, const MatC& uc,
                           const VecC& psi) {
  return alice_payoff(VecC(kron3(ua, ub, uc) * psi));
}

inline MatC random_complex(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  MatC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

/// Random point of the FULL_SU3 box.
inline StrategyParams random_full(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> small(0.0, kPi / 2);
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  return StrategyParams::full(small(rng), small(rng), small(rng), phase(rng),
                              phase(rng), phase(rng), phase(rng), phase(rng));
}

inline StrategyParams random_reduced(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> small(0.0, kPi / 2);
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  return StrategyParams::reduced(small(rng), small(rng), small(rng),
                                 phase(rng), phase(rng), phase(rng));
}

/// Least-squares scalar c minimizing ||a - c b||, and the residual.
inline std::pair<std::complex<double>, double> best_scalar(const MatC& a,
                                                           const MatC& b) {
  const std::complex<double> c = (b.adjoint() * a).trace() / b.squaredNorm();
  return {c, (a - c * b).cwiseAbs().maxCoeff()};
}

}  // namespace qk::oracle
