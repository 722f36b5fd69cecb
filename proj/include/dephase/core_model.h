// Copyright 2026 The dephase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace dephase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// K diagonal Lindblad operators on N levels. Column k of the N x K
/// coefficient table holds the diagonal of V_k, so entry (n, k) is
/// <n|V_k|n>. An empty set (K = 0) means no dissipation.
class DiagonalOperatorSet {
 public:
  /// Empty operator set on `dims` levels.
  explicit DiagonalOperatorSet(Index dims);
  explicit DiagonalOperatorSet(ComplexMatrix coeffs);

  Index dims() const { return coeffs_.rows(); }
  Index size() const { return coeffs_.cols(); }
  const ComplexMatrix& coeffs() const { return coeffs_; }
  Complex operator()(Index level, Index op) const { return coeffs_(level, op); }

 private:
  ComplexMatrix coeffs_;
};

/// Pure-dephasing generator: H = diag(levels) plus diagonal Lindblad
/// operators.
struct DephasingModel {
  DephasingModel(RealVector levels, DiagonalOperatorSet ops);
  /// Zero Hamiltonian.
  explicit DephasingModel(DiagonalOperatorSet ops);

  Index dims() const { return levels.size(); }

  RealVector levels;
  DiagonalOperatorSet ops;
};

/// Observable dephasing data: symmetric decay rates Gamma_mn >= 0 and
/// antisymmetric dephasing-induced frequency shifts dOmega_mn.
class RateTable {
 public:
  /// All-zero table on `dims` levels.
  explicit RateTable(Index dims);
  RateTable(RealMatrix gamma, RealMatrix dshift);

  Index dims() const { return gamma_.rows(); }
  const RealMatrix& gamma() const { return gamma_; }
  const RealMatrix& dshift() const { return dshift_; }
  double gamma(Index m, Index n) const { return gamma_(m, n); }
  double dshift(Index m, Index n) const { return dshift_(m, n); }

  /// Copy with Gamma_mn = Gamma_nm = value.
  RateTable with_gamma(Index m, Index n, double value) const;
  /// Copy with dOmega_mn = value, dOmega_nm = -value.
  RateTable with_dshift(Index m, Index n, double value) const;

 private:
  RealMatrix gamma_;
  RealMatrix dshift_;
};

/// Hermitian unit-trace matrix. Positivity is deliberately not enforced so
/// that evolution under infeasible rates can be represented; see
/// min_eigenvalue().
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix entries);

  /// |psi><psi| for a normalised copy of `psi`.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  Index dims() const { return entries_.rows(); }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(Index m, Index n) const { return entries_(m, n); }

  double min_eigenvalue() const;
  bool is_positive(double tol = 1e-12) const { return min_eigenvalue() >= -tol; }

 private:
  ComplexMatrix entries_;
};

/// Gamma_mn = 1/2 sum_k (|a_mk|^2 + |a_nk|^2) - Re(a_mk a*_nk),
/// dOmega_mn = -sum_k Im(a_mk a*_nk).
RateTable rates_from_operators(const DiagonalOperatorSet& ops);

/// Effective coherence frequencies omega_mn = lambda_m - lambda_n + dOmega_mn.
RealMatrix effective_frequencies(const DephasingModel& model);

/// Closed-form evolution rho_mn(t) = exp(-t (i omega_mn + Gamma_mn)) rho_mn(0).
DensityMatrix propagate(const RateTable& rates, const RealMatrix& freqs,
                        const DensityMatrix& rho0, double t);

/// sum_k V_k rho V_k^+ - 1/2 {V_k^+ V_k, rho}.
ComplexMatrix dissipator_apply(const DiagonalOperatorSet& ops, const ComplexMatrix& rho);

/// -i[H, rho] + dissipator_apply(ops, rho).
ComplexMatrix generator_action(const DephasingModel& model, const ComplexMatrix& rho);

/// W_j = sum_k u_jk V_k. Throws InputError when u is not unitary to 1e-12.
DiagonalOperatorSet unitary_mix(const DiagonalOperatorSet& ops, const ComplexMatrix& u);

/// V_k -> V_k + alpha I with the compensating Hamiltonian shift
/// lambda_n -> lambda_n - Im(alpha a*_nk); the generator is unchanged.
DephasingModel identity_shift(const DephasingModel& model, Index k, Complex alpha);

}  // namespace dephase
