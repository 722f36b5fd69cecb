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

#include "dephase/core_model.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "dephase/errors.h"
#include "dephase/linalg.h"

namespace dephase {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kStateTol = 1e-10;

void require_levels(Index dims, const char* what) {
  if (dims < 2) {
    throw InputError(std::string(what) + ": need at least 2 levels, got " + std::to_string(dims));
  }
}

double scale_of(const RealMatrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

DiagonalOperatorSet::DiagonalOperatorSet(Index dims) : coeffs_(ComplexMatrix::Zero(dims, 0)) {
  require_levels(dims, "operator set");
}

DiagonalOperatorSet::DiagonalOperatorSet(ComplexMatrix coeffs) : coeffs_(std::move(coeffs)) {
  require_levels(coeffs_.rows(), "operator set");
  if (!coeffs_.allFinite()) {
    throw InputError("operator set: coefficients must be finite");
  }
}

DephasingModel::DephasingModel(RealVector levels_, DiagonalOperatorSet ops_)
    : levels(std::move(levels_)), ops(std::move(ops_)) {
  if (levels.size() != ops.dims()) {
    throw InputError("dephasing model: " + std::to_string(levels.size()) + " level energies for " +
                     std::to_string(ops.dims()) + "-level operators");
  }
  if (!levels.allFinite()) {
    throw InputError("dephasing model: level energies must be finite");
  }
}

DephasingModel::DephasingModel(DiagonalOperatorSet ops_)
    : levels(RealVector::Zero(ops_.dims())), ops(std::move(ops_)) {}

RateTable::RateTable(Index dims)
    : gamma_(RealMatrix::Zero(dims, dims)), dshift_(RealMatrix::Zero(dims, dims)) {
  require_levels(dims, "rate table");
}

RateTable::RateTable(RealMatrix gamma, RealMatrix dshift)
    : gamma_(std::move(gamma)), dshift_(std::move(dshift)) {
  const Index n = gamma_.rows();
  require_levels(n, "rate table");
  if (gamma_.cols() != n || dshift_.rows() != n || dshift_.cols() != n) {
    throw InputError("rate table: gamma and dshift must both be square with equal size");
  }
  if (!gamma_.allFinite() || !dshift_.allFinite()) {
    throw InputError("rate table: entries must be finite");
  }
  const double gtol = kSymmetryTol * scale_of(gamma_);
  const double wtol = kSymmetryTol * scale_of(dshift_);
  for (Index m = 0; m < n; ++m) {
    if (gamma_(m, m) != 0.0 || dshift_(m, m) != 0.0) {
      throw InputError("rate table: diagonal entries must be zero (level " + std::to_string(m + 1) +
                       ")");
    }
    for (Index k = m + 1; k < n; ++k) {
      if (std::abs(gamma_(m, k) - gamma_(k, m)) > gtol) {
        throw InputError("rate table: gamma not symmetric at (" + std::to_string(m + 1) + "," +
                         std::to_string(k + 1) + ")");
      }
      if (std::abs(dshift_(m, k) + dshift_(k, m)) > wtol) {
        throw InputError("rate table: dshift not antisymmetric at (" + std::to_string(m + 1) + "," +
                         std::to_string(k + 1) + ")");
      }
      if (gamma_(m, k) < 0.0) {
        throw InputError("rate table: negative rate at (" + std::to_string(m + 1) + "," +
                         std::to_string(k + 1) + ")");
      }
    }
  }
  gamma_ = (0.5 * (gamma_ + gamma_.transpose())).eval();
  dshift_ = (0.5 * (dshift_ - dshift_.transpose())).eval();
}

RateTable RateTable::with_gamma(Index m, Index n, double value) const {
  RealMatrix g = gamma_;
  g(m, n) = value;
  g(n, m) = value;
  return RateTable(std::move(g), dshift_);
}

RateTable RateTable::with_dshift(Index m, Index n, double value) const {
  RealMatrix w = dshift_;
  w(m, n) = value;
  w(n, m) = -value;
  return RateTable(gamma_, std::move(w));
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw InputError("density matrix: must be square and non-empty");
  }
  if (!entries_.allFinite()) {
    throw InputError("density matrix: entries must be finite");
  }
  const double herm = hermiticity_residual(entries_);
  if (herm > kStateTol) {
    throw InputError("density matrix: not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw InputError("density matrix: trace must be 1");
  }
  entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw InputError("density matrix: zero state vector");
  }
  const Eigen::VectorXcd unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

double DensityMatrix::min_eigenvalue() const { return hermitian_eigenvalues(entries_)(0); }

RateTable rates_from_operators(const DiagonalOperatorSet& ops) {
  const Index n = ops.dims();
  const ComplexMatrix& a = ops.coeffs();
  RealMatrix gamma = RealMatrix::Zero(n, n);
  RealMatrix dshift = RealMatrix::Zero(n, n);
  for (Index m = 0; m < n; ++m) {
    for (Index l = m + 1; l < n; ++l) {
      double g = 0.0;
      double w = 0.0;
      for (Index k = 0; k < ops.size(); ++k) {
        // 1/2 (|a_m|^2 + |a_l|^2) - Re(a_m a_l^*) == 1/2 |a_m - a_l|^2, which
        // cannot go negative through cancellation.
        g += 0.5 * std::norm(a(m, k) - a(l, k));
        w -= std::imag(a(m, k) * std::conj(a(l, k)));
      }
      gamma(m, l) = gamma(l, m) = g;
      dshift(m, l) = w;
      dshift(l, m) = -w;
    }
  }
  return RateTable(std::move(gamma), std::move(dshift));
}

RealMatrix effective_frequencies(const DephasingModel& model) {
  const RateTable rates = rates_from_operators(model.ops);
  const Index n = model.dims();
  RealMatrix omega(n, n);
  for (Index m = 0; m < n; ++m) {
    for (Index l = 0; l < n; ++l) {
      omega(m, l) = model.levels(m) - model.levels(l) + rates.dshift(m, l);
    }
  }
  return omega;
}

DensityMatrix propagate(const RateTable& rates, const RealMatrix& freqs,
                        const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InputError("propagate: time must be finite and non-negative");
  }
  const Index n = rho0.dims();
  if (rates.dims() != n || freqs.rows() != n || freqs.cols() != n) {
    throw InputError("propagate: dimension mismatch between rates, frequencies and state");
  }
  const double tol = kSymmetryTol * scale_of(freqs);
  if ((freqs + freqs.transpose()).cwiseAbs().maxCoeff() > 2 * tol) {
    throw InputError("propagate: frequency table must be antisymmetric");
  }
  ComplexMatrix out = rho0.entries();
  for (Index m = 0; m < n; ++m) {
    for (Index l = 0; l < n; ++l) {
      if (m == l) continue;
      out(m, l) *= std::exp(Complex(-t * rates.gamma(m, l), -t * freqs(m, l)));
    }
  }
  return DensityMatrix(std::move(out));
}

ComplexMatrix dissipator_apply(const DiagonalOperatorSet& ops, const ComplexMatrix& rho) {
  const Index n = ops.dims();
  if (rho.rows() != n || rho.cols() != n) {
    throw InputError("dissipator: state is " + std::to_string(rho.rows()) + "x" +
                     std::to_string(rho.cols()) + ", operators act on " + std::to_string(n) +
                     " levels");
  }
  const ComplexMatrix& a = ops.coeffs();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < ops.size(); ++k) {
    for (Index m = 0; m < n; ++m) {
      for (Index l = 0; l < n; ++l) {
        const Complex factor =
            a(m, k) * std::conj(a(l, k)) - 0.5 * (std::norm(a(m, k)) + std::norm(a(l, k)));
        out(m, l) += factor * rho(m, l);
      }
    }
  }
  return out;
}

ComplexMatrix generator_action(const DephasingModel& model, const ComplexMatrix& rho) {
  ComplexMatrix out = dissipator_apply(model.ops, rho);
  const Index n = model.dims();
  for (Index m = 0; m < n; ++m) {
    for (Index l = 0; l < n; ++l) {
      out(m, l) += Complex(0.0, -(model.levels(m) - model.levels(l))) * rho(m, l);
    }
  }
  return out;
}

DiagonalOperatorSet unitary_mix(const DiagonalOperatorSet& ops, const ComplexMatrix& u) {
  const Index k = ops.size();
  if (u.rows() != k || u.cols() != k) {
    throw InputError("unitary_mix: mixing matrix must be " + std::to_string(k) + "x" +
                     std::to_string(k));
  }
  if (k > 0) {
    const double residual =
        (u.adjoint() * u - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-12)) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.3e", residual);
      throw InputError(std::string("unitary_mix: matrix is not unitary, |u^+u - I|_max = ") + buf);
    }
  }
  return DiagonalOperatorSet(ops.coeffs() * u.transpose());
}

DephasingModel identity_shift(const DephasingModel& model, Index k, Complex alpha) {
  if (k < 0 || k >= model.ops.size()) {
    throw InputError("identity_shift: operator index " + std::to_string(k) + " out of range");
  }
  ComplexMatrix coeffs = model.ops.coeffs();
  coeffs.col(k).array() += alpha;
  RealVector levels = model.levels;
  for (Index n = 0; n < model.dims(); ++n) {
    levels(n) -= std::imag(alpha * std::conj(coeffs(n, k)));
  }
  return DephasingModel(std::move(levels), DiagonalOperatorSet(std::move(coeffs)));
}

}  // namespace dephase
