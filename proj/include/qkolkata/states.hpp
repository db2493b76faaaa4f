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

#include <string>
#include <string_view>

#include "qkolkata/linalg.hpp"

namespace qk {

/// Pure-state amplitudes of the tunable family, vartheta in [0, pi],
/// varphi in [0, 2pi].
struct EntanglementParams {
  double vartheta = 0;
  double varphi = 0;
};

/// Weight of the pure state in the mixture with the maximally mixed state.
class Fidelity {
 public:
  explicit Fidelity(double f);
  double value() const { return f_; }

 private:
  double f_;
};

/// (|000> + |111> + |222>) / sqrt(3).
template <typename Real = double>
RegisterVector<Real> ghz_state() {
  RegisterVector<Real> psi = RegisterVector<Real>::Zero();
  const Real amp = Real(1) / std::sqrt(Real(3));
  psi(basis_index(0, 0, 0)) = amp;
  psi(basis_index(1, 1, 1)) = amp;
  psi(basis_index(2, 2, 2)) = amp;
  return psi;
}

template <typename Real = double>
RegisterVector<Real> product_state_000() {
  RegisterVector<Real> psi = RegisterVector<Real>::Zero();
  psi(0) = Real(1);
  return psi;
}

/// Levi-Civita symbol on (x3, x2, x1) with eps(0,1,2) = +1.
constexpr int levi_civita(int x3, int x2, int x1) {
  if (x3 == x2 || x2 == x1 || x3 == x1) return 0;
  // Even permutations of (0,1,2) are its cyclic shifts.
  return ((x2 - x3 + 3) % 3 == 1) ? 1 : -1;
}

/// Totally antisymmetric singlet (1/sqrt 6) sum eps |x3 x2 x1>.
template <typename Real = double>
RegisterVector<Real> aharonov_state() {
  RegisterVector<Real> psi = RegisterVector<Real>::Zero();
  const Real amp = Real(1) / std::sqrt(Real(6));
  for (int x3 = 0; x3 < 3; ++x3)
    for (int x2 = 0; x2 < 3; ++x2)
      for (int x1 = 0; x1 < 3; ++x1)
        psi(basis_index(x3, x2, x1)) = Real(levi_civita(x3, x2, x1)) * amp;
  return psi;
}

void validate(const EntanglementParams& p);

/// sin(vt) cos(vp) |000> + sin(vt) sin(vp) |111> + cos(vt) |222>.
template <typename Real = double>
RegisterVector<Real> tunable_state(const EntanglementParams& p) {
  validate(p);
  const Real vt = Real(p.vartheta), vp = Real(p.varphi);
  RegisterVector<Real> psi = RegisterVector<Real>::Zero();
  psi(basis_index(0, 0, 0)) = std::sin(vt) * std::cos(vp);
  psi(basis_index(1, 1, 1)) = std::sin(vt) * std::sin(vp);
  psi(basis_index(2, 2, 2)) = std::cos(vt);
  return psi;
}

/// f |psi><psi| + (1 - f)/27 I.
template <typename Real = double>
DensityMatrix<Real> noisy_density(const RegisterVector<Real>& psi,
                                  const Fidelity& f) {
  if (std::abs(psi.squaredNorm() - Real(1)) > Real(1e-12)) {
    throw ContractViolation("noisy_density requires a normalized state");
  }
  const Real w = Real(f.value());
  RegisterOperator<Real> rho = w * (psi * psi.adjoint());
  rho.diagonal().array() += (Real(1) - w) / Real(kRegisterDim);
  return DensityMatrix<Real>(std::move(rho));
}

/// Resolves "ghz", "aharonov", "product000" or "tunable:<vartheta>,<varphi>"
/// (radians). Throws ContractViolation on unknown names.
Register state_by_name(std::string_view name);

}  // namespace qk
