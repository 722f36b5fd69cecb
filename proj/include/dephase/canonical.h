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

#include <string>

#include "dephase/core_model.h"

namespace dephase {

/// Lower-triangular canonical representative of a pure-dephasing generator.
///
/// Column k (0-based) holds the diagonal of one canonical operator. Its
/// first k + 1 entries are zero and its first nonzero entry is real and
/// non-negative; that entry sits at level leading_level(k). All-zero
/// columns are dropped, so size() <= dims() - 1. `hamiltonian_shift` is the
/// diagonal correction dH that must be added to the original Hamiltonian
/// for the canonical operators to reproduce the original dynamics.
class CanonicalSet {
 public:
  CanonicalSet(ComplexMatrix coeffs, RealVector hamiltonian_shift);

  Index dims() const { return coeffs_.rows(); }
  Index size() const { return coeffs_.cols(); }
  const ComplexMatrix& coeffs() const { return coeffs_; }
  const RealVector& hamiltonian_shift() const { return dh_; }

  /// 0-based row of the first entry of column k above the zero threshold,
  /// or -1 for an all-zero column.
  Index leading_level(Index k, double tol = 1e-12) const;

  DiagonalOperatorSet operators() const { return DiagonalOperatorSet(coeffs_); }

  /// Canonical operators with H = diag(levels) + dH.
  DephasingModel model(const RealVector& levels) const;
  /// Canonical operators with H = dH.
  DephasingModel model() const;

 private:
  ComplexMatrix coeffs_;
  RealVector dh_;
};

/// Reduces any diagonal operator set to canonical form: identity shifts
/// zero the first row, 2x2 unitary mixes clear each row down to a single
/// pivot column, then zero columns are dropped and column phases fixed.
CanonicalSet canonicalize(const DiagonalOperatorSet& ops);

struct CanonicalCheck {
  bool ok = true;
  /// Empty when ok; otherwise names the first violated invariant.
  std::string violation;
};

CanonicalCheck is_canonical(const CanonicalSet& cs, double tol = 1e-12);

struct Equivalence {
  bool equivalent = false;
  double residual = 0.0;
};

/// Compares generator_action of both models on all N^2 matrix units.
Equivalence equivalent(const DephasingModel& a, const DephasingModel& b, double tol = 1e-10);

}  // namespace dephase
