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

// Strategy operators: the eight-angle SU(3) family built from two orthogonal
// complex unit vectors, its six-angle reduction, the real SO(3) sub-family,
// and the classical cyclic shifts.

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qkolkata/linalg.hpp"

namespace qk {

enum class Family { kFullSU3, kReduced6, kSO3 };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Number of free angles: 8, 6 or 3.
int family_dimension(Family f);

/// Angles selecting one strategy operator.
///
/// phi, theta, chi live in [0, pi/2]; the five phases in [0, 2pi]. REDUCED6
/// keeps alpha1 = alpha2 = 0 and stores its single alpha in alpha3. SO3 keeps
/// every phase at 0. Use the named constructors; they validate strictly and
/// never wrap out-of-range angles.
struct StrategyParams {
  Family family = Family::kFullSU3;
  double phi = 0, theta = 0, chi = 0;
  double alpha1 = 0, alpha2 = 0, alpha3 = 0;
  double beta1 = 0, beta2 = 0;

  static StrategyParams full(double phi, double theta, double chi,
                             double alpha1, double alpha2, double alpha3,
                             double beta1, double beta2);
  static StrategyParams reduced(double phi, double theta, double chi,
                                double alpha, double beta1, double beta2);
  static StrategyParams orthogonal(double phi, double theta, double chi);

  /// Free angles in family order: FULL_SU3 (phi, theta, chi, alpha1..3,
  /// beta1, beta2); REDUCED6 (phi, theta, chi, alpha, beta1, beta2); SO3
  /// (phi, theta, chi).
  std::vector<double> free_angles() const;
  static StrategyParams from_free_angles(Family family,
                                         const std::vector<double>& angles);

  /// Throws ContractViolation on out-of-range angles or broken family
  /// constraints.
  void validate() const;

  bool operator==(const StrategyParams&) const = default;
};

struct AngleBox {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Search box of the family's free angles.
AngleBox family_box(Family family);

// Reference optima. The orthogonal point is kept exactly as tabulated.
StrategyParams reference_u_opt();  // eight-angle U_opt
StrategyParams reference_v_opt();  // six-angle V_opt
StrategyParams reference_o_opt();  // SO(3) O_opt

/// x = (sin t cos p e^{i a1}, sin t sin p e^{i a2}, cos t e^{i a3}).
template <typename Real = double>
QutritVector<Real> unit_vector_x(const StrategyParams& p) {
  using C = Complex<Real>;
  const Real phi = Real(p.phi), th = Real(p.theta);
  QutritVector<Real> x;
  x(0) = std::sin(th) * std::cos(phi) * std::polar(Real(1), Real(p.alpha1));
  x(1) = std::sin(th) * std::sin(phi) * std::polar(Real(1), Real(p.alpha2));
  x(2) = C(std::cos(th)) * std::polar(Real(1), Real(p.alpha3));
  return x;
}

/// The unit vector orthogonal to unit_vector_x selected by chi, beta1, beta2.
template <typename Real = double>
QutritVector<Real> unit_vector_y(const StrategyParams& p) {
  const Real phi = Real(p.phi), th = Real(p.theta), chi = Real(p.chi);
  const Real a1 = Real(p.alpha1), a2 = Real(p.alpha2), a3 = Real(p.alpha3);
  const Real b1 = Real(p.beta1), b2 = Real(p.beta2);
  auto e = [](Real angle) { return std::polar(Real(1), angle); };
  QutritVector<Real> y;
  y(0) = std::cos(chi) * std::cos(th) * std::cos(phi) * e(b1 - a1) +
         std::sin(chi) * std::sin(phi) * e(b2 - a1);
  y(1) = std::cos(chi) * std::cos(th) * std::sin(phi) * e(b1 - a2) -
         std::sin(chi) * std::cos(phi) * e(b2 - a2);
  y(2) = -std::cos(chi) * std::sin(th) * e(b1 - a3);
  return y;
}

/// conj(x) × y, the third column of the strategy matrix.
template <typename Real>
QutritVector<Real> conj_cross(const QutritVector<Real>& x,
                              const QutritVector<Real>& y) {
  QutritVector<Real> z;
  z(0) = std::conj(x(1)) * y(2) - std::conj(x(2)) * y(1);
  z(1) = std::conj(x(2)) * y(0) - std::conj(x(0)) * y(2);
  z(2) = std::conj(x(0)) * y(1) - std::conj(x(1)) * y(0);
  return z;
}

inline constexpr double kGroupTolerance = 1e-12;

/// Strategy matrix with columns [x, conj(y), conj(x) × y].
///
/// Every construction is checked for U^dagger U = I and det U = 1 within
/// 1e-12; a failure throws NumericalError since it can only come from a
/// transcription bug. Angle ranges are not checked here.
template <typename Real = double>
LocalOperator<Real> assemble_strategy(const StrategyParams& p) {
  const QutritVector<Real> x = unit_vector_x<Real>(p);
  const QutritVector<Real> y = unit_vector_y<Real>(p);
  LocalOperator<Real> u;
  u.col(0) = x;
  u.col(1) = y.conjugate();
  u.col(2) = conj_cross<Real>(x, y);
  const Real tol = Real(kGroupTolerance);
  if (!is_unitary<Real>(u, tol) ||
      std::abs(u.determinant() - Complex<Real>(1)) > tol) {
    throw NumericalError("strategy matrix left SU(3)");
  }
  return u;
}

/// Validates the angles, then assembles the strategy matrix.
template <typename Real = double>
LocalOperator<Real> su3_matrix(const StrategyParams& p) {
  p.validate();
  return assemble_strategy<Real>(p);
}

/// s^power for the cyclic generator s mapping |0> -> |1> -> |2> -> |0>.
struct ClassicalStrategy {
  int power = 0;
};

template <typename Real = double>
LocalOperator<Real> classical_operator(ClassicalStrategy k) {
  if (k.power < 0 || k.power > 2) {
    throw ContractViolation("classical strategy power must be 0, 1 or 2");
  }
  LocalOperator<Real> s = LocalOperator<Real>::Zero();
  for (int col = 0; col < 3; ++col) s((col + k.power) % 3, col) = Real(1);
  return s;
}

struct CenterCanonical {
  StrategyParams params;
  bool recognized = false;
};

/// Maps a FULL_SU3 point whose three alphas all equal (5 + 12n) pi / 18,
/// n in {0, 1, 2}, to the n = 0 representative. Other inputs come back
/// unchanged with recognized = false.
CenterCanonical canonicalize_center(const StrategyParams& p);

/// Multiplies the strategy by the center element that brings alpha1 into
/// [0, 2pi/3). Works for any FULL_SU3 point; the matrix changes by a cube
/// root of unity.
StrategyParams reduce_center(const StrategyParams& p);

/// Left-multiplies by diag(e^{i d1}, e^{i d2}, e^{i d3}), d1 + d2 + d3 = 0,
/// chosen to make the three alphas equal, then reduces by the center.
/// Measurement statistics of symmetric play under the standard conjugation
/// are unchanged since the diagonal phase acts after the strategy.
StrategyParams equalize_output_phases(const StrategyParams& p);

/// Wraps an angle into [0, 2pi).
double wrap_phase(double angle);

}  // namespace qk
