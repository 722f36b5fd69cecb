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

#include "dephase/canonical.h"

#include <cmath>
#include <limits>
#include <vector>

#include "dephase/errors.h"

namespace dephase {

namespace {

// Entries at or below this fraction of the largest coefficient count as zero
// during elimination.
constexpr double kRelativeZero = 1e-12;

std::vector<Index> nonzero_columns(const ComplexMatrix& v, Index row, Index first, double thr) {
  std::vector<Index> cols;
  for (Index j = first; j < v.cols(); ++j) {
    if (std::abs(v(row, j)) > thr) cols.push_back(j);
  }
  return cols;
}

// Unitary 2x2 mix of columns i1, i2 that clears v(row, i2).
void eliminate_pair(ComplexMatrix& v, Index row, Index i1, Index i2) {
  const double r1 = std::abs(v(row, i1));
  const double r2 = std::abs(v(row, i2));
  const double phi1 = std::arg(v(row, i1));
  const double phi2 = std::arg(v(row, i2));
  const double nc = std::hypot(r1, r2);
  const Eigen::VectorXcd c1 = v.col(i1);
  const Eigen::VectorXcd c2 = v.col(i2);
  v.col(i1) = (r1 * std::polar(1.0, phi2) * c1 + r2 * std::polar(1.0, phi1) * c2) / nc;
  v.col(i2) = (r2 * std::polar(1.0, -phi1) * c1 - r1 * std::polar(1.0, -phi2) * c2) / nc;
  v(row, i2) = 0.0;
}

}  // namespace

CanonicalSet::CanonicalSet(ComplexMatrix coeffs, RealVector hamiltonian_shift)
    : coeffs_(std::move(coeffs)), dh_(std::move(hamiltonian_shift)) {
  if (coeffs_.rows() < 2) {
    throw InputError("canonical set: need at least 2 levels");
  }
  if (dh_.size() != coeffs_.rows()) {
    throw InputError("canonical set: Hamiltonian shift length must equal level count");
  }
  if (!coeffs_.allFinite() || !dh_.allFinite()) {
    throw InputError("canonical set: entries must be finite");
  }
}

Index CanonicalSet::leading_level(Index k, double tol) const {
  for (Index n = 0; n < dims(); ++n) {
    if (std::abs(coeffs_(n, k)) > tol) return n;
  }
  return -1;
}

DephasingModel CanonicalSet::model(const RealVector& levels) const {
  if (levels.size() != dims()) {
    throw InputError("canonical set: level count mismatch");
  }
  return DephasingModel(levels + dh_, operators());
}

DephasingModel CanonicalSet::model() const { return DephasingModel(dh_, operators()); }

CanonicalSet canonicalize(const DiagonalOperatorSet& ops) {
  const Index n = ops.dims();
  const Index cols = ops.size();
  const ComplexMatrix& w = ops.coeffs();

  // Identity shifts alpha_k = -a_1k clear the first row; each shift moves
  // lambda_n by -Im(alpha_k conj(a'_nk)) with a' the shifted coefficients.
  ComplexMatrix v = w - Eigen::VectorXcd::Ones(n) * w.row(0);
  RealVector dh = RealVector::Zero(n);
  for (Index k = 0; k < cols; ++k) {
    for (Index row = 0; row < n; ++row) {
      dh(row) += std::imag(w(0, k) * std::conj(v(row, k)));
    }
  }

  const double scale = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  const double thr = kRelativeZero * scale;

  Index fixed = 0;
  for (Index row = 1; row < n && fixed < cols; ++row) {
    for (auto nz = nonzero_columns(v, row, fixed, thr); nz.size() > 1;
         nz = nonzero_columns(v, row, fixed, thr)) {
      eliminate_pair(v, row, nz[0], nz[1]);
    }
    const auto nz = nonzero_columns(v, row, fixed, thr);
    if (!nz.empty()) {
      v.col(fixed).swap(v.col(nz[0]));
      ++fixed;
    }
    for (Index j = fixed; j < cols; ++j) v(row, j) = 0.0;
  }
  // Columns past `fixed` are now identically zero.
  ComplexMatrix out = v.leftCols(fixed);
  for (Index j = 0; j < fixed; ++j) {
    for (Index row = 0; row < n; ++row) {
      const Complex lead = out(row, j);
      if (lead == 0.0) continue;
      const double mag = std::abs(lead);
      out.col(j) *= std::conj(lead) / mag;
      out(row, j) = mag;
      break;
    }
  }
  return CanonicalSet(std::move(out), std::move(dh));
}

CanonicalCheck is_canonical(const CanonicalSet& cs, double tol) {
  const ComplexMatrix& a = cs.coeffs();
  const Index n = cs.dims();
  if (cs.size() > n - 1) {
    return {false, "more than N-1 operators"};
  }
  for (Index k = 0; k < cs.size(); ++k) {
    if (std::abs(a(0, k)) > tol) {
      return {false, "first row not zero (column " + std::to_string(k + 1) + ")"};
    }
  }
  Index previous_lead = 0;
  for (Index k = 0; k < cs.size(); ++k) {
    const Index lead = cs.leading_level(k, tol);
    if (lead < 0) {
      return {false, "zero column " + std::to_string(k + 1) + " not removed"};
    }
    if (lead < k + 1) {
      return {false, "column " + std::to_string(k + 1) + " lacks its " + std::to_string(k + 1) +
                         " leading zeros"};
    }
    if (lead <= previous_lead) {
      return {false, "leading levels not strictly increasing at column " + std::to_string(k + 1)};
    }
    previous_lead = lead;
    const Complex lv = a(lead, k);
    if (std::abs(lv.imag()) > tol || lv.real() < 0.0) {
      return {false, "leading entry of column " + std::to_string(k + 1) +
                         " not real and non-negative"};
    }
  }
  return {};
}

Equivalence equivalent(const DephasingModel& a, const DephasingModel& b, double tol) {
  if (a.dims() != b.dims()) {
    return {false, std::numeric_limits<double>::infinity()};
  }
  const Index n = a.dims();
  double residual = 0.0;
  ComplexMatrix unit = ComplexMatrix::Zero(n, n);
  for (Index m = 0; m < n; ++m) {
    for (Index l = 0; l < n; ++l) {
      unit(m, l) = 1.0;
      const ComplexMatrix diff = generator_action(a, unit) - generator_action(b, unit);
      residual = std::max(residual, diff.cwiseAbs().maxCoeff());
      unit(m, l) = 0.0;
    }
  }
  return {residual <= tol, residual};
}

}  // namespace dephase
