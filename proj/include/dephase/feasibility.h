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

#include <optional>
#include <vector>

#include "dephase/canonical.h"
#include "dephase/core_model.h"

namespace dephase {

/// Inner products of canonical coefficient rows for levels 2..N, built
/// straight from observed rates:
///   G_nn = 2 Gamma_1n,
///   G_mn = Gamma_1m + Gamma_1n - Gamma_mn - i dOmega_mn.
/// A rate table is realisable by canonical operators iff G is PSD.
class GramMatrix {
 public:
  explicit GramMatrix(ComplexMatrix entries);

  Index dims() const { return entries_.rows(); }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(Index m, Index n) const { return entries_(m, n); }
  double trace() const { return entries_.trace().real(); }

 private:
  ComplexMatrix entries_;
};

/// Throws InputError when any dOmega_1n is nonzero: the canonical gauge
/// forces those shifts into the Hamiltonian, see intrinsic_shifts().
GramMatrix gram_from_rates(const RateTable& rates);

/// Relative default: 1e-10 * trace(G).
double default_tolerance(const GramMatrix& gram);

/// Outcome of the level-by-level constraint recursion. All level numbers are
/// 1-based, matching the usual level labelling; pivots[i] belongs to level
/// i + 2.
struct ConstraintReport {
  std::vector<double> pivots;
  bool feasible = true;
  std::vector<int> violated_levels;  // pivot < -tol
  std::vector<int> boundary_levels;  // |pivot| <= tol
  /// Levels whose residual against an earlier zero pivot is too large.
  std::vector<int> residual_levels;
  double tol = 0.0;

  double pivot(int level) const { return pivots.at(static_cast<size_t>(level - 2)); }
  /// Smallest failing level, or 0 when feasible.
  int first_failure() const;
};

/// Runs the full recursion, recording every pivot; never throws on
/// infeasibility. `tol` defaults to default_tolerance(G).
ConstraintReport constraint_report(const RateTable& rates, std::optional<double> tol = {});

/// Canonical operators reproducing `rates`: a pivoted triangular
/// factorisation G = A A^+ with real non-negative pivots, built level by
/// level. Zero pivots skip a column. Throws ConstraintViolation or
/// ResidualAtZeroPivot for unrealisable tables. The returned Hamiltonian
/// shift is zero.
CanonicalSet invert_rates(const RateTable& rates, std::optional<double> tol = {});

/// 2(G12 G23 + G23 G13 + G12 G13) - G12^2 - G23^2 - G13^2 - dW23^2, which
/// equals det G for three levels. Non-negative iff the rates are realisable.
double symmetric_constraint_n3(double g12, double g23, double g13, double dw23);

struct ConeCoords {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  /// x >= 0 and x^2/2 >= y^2 + z^2, with slack `tol`.
  bool inside(double tol = 0.0) const;
  /// x^2/2 - y^2 - z^2; equals symmetric_constraint_n3(...)/2 for real dephasing.
  double slack() const { return 0.5 * x * x - y * y - z * z; }
};

/// Orthonormal coordinates of the three-level rate space in which the
/// feasible set is the circular cone x^2/2 >= y^2 + z^2:
///   x = (G12 + G23 + G13)/sqrt(3), y = (G13 - G23)/sqrt(2),
///   z = sqrt(2/3) (G12 - (G13 + G23)/2).
ConeCoords cone_coords_n3(double g12, double g23, double g13);

/// Gauge-fixed shifts from observed coherence frequencies:
///   dOmega_mn = omega_mn + omega_1m - omega_1n, dOmega_1n = 0.
/// Returns the full antisymmetric table, ready for RateTable.
RealMatrix intrinsic_shifts(const RealMatrix& omega);

}  // namespace dephase
