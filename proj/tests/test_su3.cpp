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
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qkolkata/game.hpp"
#include "qkolkata/io.hpp"
#include "qkolkata/su3.hpp"

namespace qk {
namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Op3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("random strategies are special unitary") {
  std::mt19937_64 rng(2026);
  double worst_unitary = 0, worst_det = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Op3 u = su3_matrix<double>(oracle::random_full(rng));
    worst_unitary = std::max(worst_unitary, max_abs(Op3(u.adjoint() * u - Op3::Identity())));
    worst_det = std::max(worst_det, std::abs(u.determinant() - 1.0));
  }
  CHECK(worst_unitary < 1e-12);
  CHECK(worst_det < 1e-12);
}

TEST_CASE("first two columns satisfy the bilinear orthogonality relation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const StrategyParams p = oracle::random_full(rng);
    const Qutrit x = unit_vector_x(p), y = unit_vector_y(p);
    CHECK(std::abs(x.norm() - 1) < 1e-14);
    CHECK(std::abs(y.norm() - 1) < 1e-14);
    CHECK(std::abs(x.cwiseProduct(y).sum()) < 1e-14);
  }
}

TEST_CASE("unit vectors at hand-evaluated angles") {
  const Qutrit x0 = unit_vector_x(StrategyParams::full(0, 0, 0, 0, 0, 1.0, 0, 0));
  CHECK(std::abs(x0(2) - std::polar(1.0, 1.0)) < 1e-15);
  const Qutrit x1 = unit_vector_x(StrategyParams::orthogonal(0, kPi / 2, 0));
  CHECK(std::abs(x1(0) - 1.0) < 1e-15);
  const Qutrit y0 = unit_vector_y(StrategyParams::orthogonal(0, 0, 0));
  CHECK(std::abs(y0(0) - 1.0) < 1e-15);
  CHECK(std::abs(y0(1)) < 1e-15);
  CHECK(std::abs(y0(2)) < 1e-15);
}

TEST_CASE("all-zero angles give the square of the cyclic shift") {
  const Op3 u = su3_matrix<double>(StrategyParams::full(0, 0, 0, 0, 0, 0, 0, 0));
  const Op3 s = classical_operator<double>({1});
  CHECK(max_abs(Op3(u - s * s)) < 1e-15);
}

TEST_CASE("a six-angle point reaches the identity") {
  const Op3 u = su3_matrix<double>(
      StrategyParams::reduced(0, kPi / 2, kPi / 2, 0, 0, kPi));
  CHECK(max_abs(Op3(u - Op3::Identity())) < 1e-15);
}

TEST_CASE("six-angle family embeds in the eight-angle family") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const StrategyParams r = oracle::random_reduced(rng);
    const StrategyParams f =
        StrategyParams::full(r.phi, r.theta, r.chi, 0, 0, r.alpha3, r.beta1, r.beta2);
    CHECK(max_abs(Op3(su3_matrix<double>(r) - su3_matrix<double>(f))) == 0.0);
  }
}

TEST_CASE("orthogonal family is real and in SO(3)") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> a(0, kPi / 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Op3 o = su3_matrix<double>(StrategyParams::orthogonal(a(rng), a(rng), a(rng)));
    CHECK(o.imag().cwiseAbs().maxCoeff() < 1e-15);
    const Eigen::Matrix3d r = o.real();
    CHECK((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(r.determinant() - 1) < 1e-14);
  }
}

TEST_CASE("classical operators form a cyclic group of order three") {
  const Op3 s0 = classical_operator<double>({0});
  const Op3 s1 = classical_operator<double>({1});
  const Op3 s2 = classical_operator<double>({2});
  CHECK(max_abs(Op3(s0 - Op3::Identity())) == 0.0);
  CHECK(max_abs(Op3(s1 * s1 - s2)) == 0.0);
  CHECK(max_abs(Op3(s1 * s2 - s0)) == 0.0);
  CHECK(max_abs(Op3(s2 - s1.transpose())) == 0.0);
  for (int col = 0; col < 3; ++col) CHECK(s1((col + 1) % 3, col) == 1.0);
  CHECK(std::abs(s1.determinant() - 1.0) < 1e-15);
}

TEST_CASE("validation rejects out-of-range angles and broken constraints") {
  CHECK_THROWS_AS(StrategyParams::orthogonal(-0.1, 0, 0), ContractViolation);
  CHECK_THROWS_AS(StrategyParams::orthogonal(0, kPi / 2 + 1e-6, 0), ContractViolation);
  CHECK_THROWS_AS(StrategyParams::full(0, 0, 0, 2 * kPi + 1e-6, 0, 0, 0, 0),
                  ContractViolation);
  CHECK_THROWS_AS(StrategyParams::orthogonal(std::nan(""), 0, 0), ContractViolation);
  CHECK_NOTHROW(StrategyParams::full(kPi / 2, kPi / 2, kPi / 2, 2 * kPi, 0, 0, 2 * kPi, 0));

  StrategyParams r = StrategyParams::reduced(0.1, 0.2, 0.3, 0.4, 0.5, 0.6);
  r.alpha1 = 0.1;
  CHECK_THROWS_AS(r.validate(), ContractViolation);
  CHECK_THROWS_AS(su3_matrix<double>(r), ContractViolation);

  StrategyParams o = StrategyParams::orthogonal(0.1, 0.2, 0.3);
  o.beta2 = 0.5;
  CHECK_THROWS_AS(o.validate(), ContractViolation);

  CHECK_THROWS_AS(StrategyParams::from_free_angles(Family::kSO3, {0.1, 0.2}),
                  ContractViolation);
}

TEST_CASE("free angles round-trip for every family") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const StrategyParams f = oracle::random_full(rng);
    CHECK(StrategyParams::from_free_angles(Family::kFullSU3, f.free_angles()) == f);
    const StrategyParams r = oracle::random_reduced(rng);
    CHECK(StrategyParams::from_free_angles(Family::kReduced6, r.free_angles()) == r);
    CHECK(r.free_angles().size() == 6u);
  }
  CHECK(family_dimension(Family::kSO3) == 3);
  CHECK(parse_family("REDUCED6") == Family::kReduced6);
  CHECK_FALSE(parse_family("SU2").has_value());
}

TEST_CASE("center canonicalization maps equivalent alphas to 5pi/18") {
  const StrategyParams ref = reference_u_opt();
  for (int n = 0; n < 3; ++n) {
    const double a = (5 + 12 * n) * kPi / 18;
    StrategyParams p = ref;
    p.alpha1 = p.alpha2 = p.alpha3 = a;
    const CenterCanonical c = canonicalize_center(p);
    CHECK(c.recognized);
    CHECK(c.params.alpha1 == doctest::Approx(5 * kPi / 18).epsilon(1e-12));
    CHECK(c.params.alpha3 == doctest::Approx(5 * kPi / 18).epsilon(1e-12));
    // The two matrices differ by a cube root of unity.
    const Op3 u = su3_matrix<double>(p), v = su3_matrix<double>(c.params);
    const auto [scale, residual] = oracle::best_scalar(u, v);
    CHECK(residual < 1e-12);
    CHECK(std::abs(std::pow(scale, 3) - 1.0) < 1e-12);
  }
  StrategyParams off = ref;
  off.alpha1 = off.alpha2 = off.alpha3 = 1.0;
  CHECK_FALSE(canonicalize_center(off).recognized);
}

TEST_CASE("center reduction and output-phase gauge preserve symmetric payoffs") {
  std::mt19937_64 rng(15);
  const Register ghz = ghz_state();
  for (int trial = 0; trial < 50; ++trial) {
    const StrategyParams p = oracle::random_full(rng);
    const double base = expected_payoff(
        Player::kAlice, play_symmetric(ghz, su3_matrix<double>(p),
                                       ConjugationConvention::kStandard));
    const StrategyParams c = reduce_center(p);
    CHECK(c.alpha1 >= 0);
    CHECK(c.alpha1 < 2 * kPi / 3);
    CHECK(c.beta1 == p.beta1);
    const auto [scale, residual] =
        oracle::best_scalar(su3_matrix<double>(c), su3_matrix<double>(p));
    CHECK(residual < 1e-12);
    CHECK(std::abs(std::pow(scale, 3) - 1.0) < 1e-12);

    const StrategyParams g = equalize_output_phases(p);
    CHECK(g.alpha1 == doctest::Approx(g.alpha2).epsilon(1e-12));
    CHECK(g.alpha2 == doctest::Approx(g.alpha3).epsilon(1e-12));
    const double gauged = expected_payoff(
        Player::kAlice, play_symmetric(ghz, su3_matrix<double>(g),
                                       ConjugationConvention::kStandard));
    CHECK(gauged == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("strategy JSON round-trips and validates") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const StrategyParams p = oracle::random_full(rng);
    CHECK(strategy_from_json(to_json(p)) == p);
  }
  const StrategyParams minimal =
      strategy_from_json({{"family", "SO3"}, {"phi", 0.1}, {"theta", 0.2}, {"chi", 0.3}});
  CHECK(minimal == StrategyParams::orthogonal(0.1, 0.2, 0.3));
  CHECK_THROWS_AS(strategy_from_json({{"family", "SO3"}, {"phi", 0.1}}), ContractViolation);
  CHECK_THROWS_AS(strategy_from_json({{"family", "U4"}, {"phi", 0}, {"theta", 0}, {"chi", 0}}),
                  ContractViolation);
  CHECK_THROWS_AS(strategy_from_json({{"family", "REDUCED6"}, {"phi", 0}, {"theta", 0},
                                      {"chi", 0}, {"alpha1", 0.2}}),
                  ContractViolation);
  CHECK_THROWS_AS(strategy_from_json({{"family", "SO3"}, {"phi", "x"}, {"theta", 0}, {"chi", 0}}),
                  ContractViolation);
}

}  // namespace qk
