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

// Exact-dimension complex linear algebra for three qutrits.
//
// Basis convention: |x3 x2 x1> maps to the integer 9*x3 + 3*x2 + x1, where
// x3 belongs to Charlie (most significant) and x1 to Alice (least
// significant). All types are templated on the real scalar; the library
// instantiates everything with double.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qk {

/// Raised when a computed quantity violates a numerical-integrity check
/// (e.g. a real-valued trace with a large imaginary residue).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kQutritDim = 3;
inline constexpr int kRegisterDim = 27;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using QutritVector = Eigen::Matrix<Complex<Real>, kQutritDim, 1>;
template <typename Real>
using RegisterVector = Eigen::Matrix<Complex<Real>, kRegisterDim, 1>;
template <typename Real>
using LocalOperator = Eigen::Matrix<Complex<Real>, kQutritDim, kQutritDim>;
template <typename Real>
using RegisterOperator =
    Eigen::Matrix<Complex<Real>, kRegisterDim, kRegisterDim>;

using Qutrit = QutritVector<double>;
using Register = RegisterVector<double>;
using Op3 = LocalOperator<double>;
using Op27 = RegisterOperator<double>;

/// Register index of the basis ket |x3 x2 x1>.
constexpr int basis_index(int x3, int x2, int x1) {
  return 9 * x3 + 3 * x2 + x1;
}

/// Digit of `index` belonging to `slot` (0 = Alice/x1, 1 = Bob/x2,
/// 2 = Charlie/x3).
constexpr int slot_digit(int index, int slot) {
  int stride = 1;
  for (int s = 0; s < slot; ++s) stride *= 3;
  return (index / stride) % 3;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) {
        return false;
      }
    }
  }
  return true;
}

/// Kronecker product c ⊗ b ⊗ a for the operators acting on Alice (a), Bob (b)
/// and Charlie (c). Entry [9i3+3i2+i1, 9j3+3j2+j1] = c(i3,j3) b(i2,j2) a(i1,j1).
template <typename Real>
RegisterOperator<Real> tensor3(const LocalOperator<Real>& a,
                               const LocalOperator<Real>& b,
                               const LocalOperator<Real>& c) {
  RegisterOperator<Real> out;
  for (int i3 = 0; i3 < 3; ++i3)
    for (int j3 = 0; j3 < 3; ++j3)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          const Complex<Real> cb = c(i3, j3) * b(i2, j2);
          for (int i1 = 0; i1 < 3; ++i1)
            for (int j1 = 0; j1 < 3; ++j1)
              out(basis_index(i3, i2, i1), basis_index(j3, j2, j1)) =
                  cb * a(i1, j1);
        }
  return out;
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  return Eigen::Matrix<typename Plain::Scalar, Plain::ColsAtCompileTime,
                       Plain::RowsAtCompileTime>(m.adjoint());
}

/// Applies a 3x3 operator to one player's qutrit of a register state without
/// forming the 27x27 product.
template <typename Real>
RegisterVector<Real> apply_local(const RegisterVector<Real>& psi,
                                 const LocalOperator<Real>& u, int slot) {
  int stride = 1;
  for (int s = 0; s < slot; ++s) stride *= 3;
  RegisterVector<Real> out;
  for (int idx = 0; idx < kRegisterDim; ++idx) {
    const int digit = (idx / stride) % 3;
    const int base = idx - digit * stride;
    out(idx) = u(digit, 0) * psi(base) + u(digit, 1) * psi(base + stride) +
               u(digit, 2) * psi(base + 2 * stride);
  }
  return out;
}

/// (c ⊗ b ⊗ a) psi, with a acting on Alice's qutrit.
template <typename Real>
RegisterVector<Real> apply_product(const RegisterVector<Real>& psi,
                                   const LocalOperator<Real>& a,
                                   const LocalOperator<Real>& b,
                                   const LocalOperator<Real>& c) {
  return apply_local<Real>(
      apply_local<Real>(apply_local<Real>(psi, a, 0), b, 1), c, 2);
}

template <typename Real>
bool is_unitary(const LocalOperator<Real>& u, Real tol) {
  return (u.adjoint() * u - LocalOperator<Real>::Identity()).cwiseAbs().maxCoeff() <= tol;
}

/// Hermitian, unit-trace, positive semidefinite 27x27 operator.
///
/// Construction validates the invariants and throws ContractViolation when
/// any fails: Hermitian within 1e-12, trace 1 within 1e-12, smallest
/// eigenvalue >= -1e-10. Instances are immutable.
template <typename Real>
class DensityMatrix {
 public:
  static constexpr Real kHermitianTol = Real(1e-12);
  static constexpr Real kTraceTol = Real(1e-12);
  static constexpr Real kPositivityTol = Real(1e-10);

  explicit DensityMatrix(RegisterOperator<Real> entries)
      : entries_(std::move(entries)) {
    validate();
  }

  const RegisterOperator<Real>& matrix() const { return entries_; }

  Complex<Real> operator()(int i, int j) const { return entries_(i, j); }

  /// Ascending spectrum.
  Eigen::Matrix<Real, kRegisterDim, 1> eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<RegisterOperator<Real>> solver(
        entries_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("density eigen-decomposition did not converge");
    }
    return solver.eigenvalues();
  }

  /// |psi><psi|. psi must be normalized within 1e-12.
  static DensityMatrix pure(const RegisterVector<Real>& psi) {
    if (std::abs(psi.squaredNorm() - Real(1)) > Real(1e-12)) {
      throw ContractViolation("pure density requires a normalized state");
    }
    return DensityMatrix(psi * psi.adjoint());
  }

 private:
  void validate() const {
    if (!all_finite(entries_)) {
      throw ContractViolation("density matrix has non-finite entries");
    }
    const Real herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
      throw ContractViolation("density matrix is not Hermitian (residual " +
                              std::to_string(static_cast<double>(herm)) + ")");
    }
    const Complex<Real> tr = entries_.trace();
    if (std::abs(tr - Complex<Real>(1)) > kTraceTol) {
      throw ContractViolation("density matrix trace differs from 1");
    }
    if (eigenvalues()(0) < -kPositivityTol) {
      throw ContractViolation("density matrix has a negative eigenvalue");
    }
  }

  RegisterOperator<Real> entries_;
};

using Density = DensityMatrix<double>;

/// Tr(p * rho) for a Hermitian p. Throws NumericalError if the imaginary
/// residue exceeds 1e-10.
template <typename Real>
Real trace_product(const RegisterOperator<Real>& p,
                   const DensityMatrix<Real>& rho) {
  // Tr(PR) = sum_ij P_ij R_ji
  const Complex<Real> tr =
      (p.cwiseProduct(rho.matrix().transpose())).sum();
  if (std::abs(std::imag(tr)) > Real(1e-10)) {
    throw NumericalError("trace of Hermitian product has imaginary residue " +
                         std::to_string(static_cast<double>(std::imag(tr))));
  }
  return std::real(tr);
}

/// Eigenvalues (ascending) of a small real symmetric matrix, n <= 8.
/// The input is symmetrized first; asymmetry above 1e-8 is a contract
/// violation.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> sym_eigenvalues(
    const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  if (h.rows() != h.cols() || h.rows() < 1 || h.rows() > 8) {
    throw ContractViolation("sym_eigenvalues expects a square matrix, n <= 8");
  }
  const Mat m = h;
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > Real(1e-8)) {
    throw ContractViolation("sym_eigenvalues input is not symmetric");
  }
  const Mat sym = (m + m.transpose()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace qk
