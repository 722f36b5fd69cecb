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

#include "dephase/feasibility.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dephase/errors.h"

namespace dephase {

namespace {

struct ZeroPivotHit {
  Index row = -1;
  Index pivot_row = -1;
  double residual = 0.0;
};

struct Factorization {
  ComplexMatrix rows;             // (N-1) x (N-1); column j belongs to pivot_rows[j]
  std::vector<Index> pivot_rows;  // Gram rows that opened a column
  ConstraintReport report;
  ZeroPivotHit first_residual;
};

// Level-by-level solve of G = A A^+ with A lower triangular (up to skipped
// zero-pivot rows). Row n gets a_nj = (G_np - sum_{i<j} a_ni conj(a_pi)) / a_pj
// for each open column j with pivot row p, then the pivot
// d_n = G_nn - sum_j |a_nj|^2 decides whether a new column opens.
//
// With stop_on_failure the loop ends at the first failing row so that
// invert_rates can raise the matching error.
Factorization factorize(const GramMatrix& gram, double tol, bool stop_on_failure) {
  const Index m = gram.dims();
  const ComplexMatrix& g = gram.entries();
  Factorization f;
  f.rows = ComplexMatrix::Zero(m, m);
  f.report.tol = tol;
  std::vector<Index> zero_rows;

  for (Index n = 0; n < m; ++n) {
    const int level = static_cast<int>(n) + 2;
    for (size_t j = 0; j < f.pivot_rows.size(); ++j) {
      const Index p = f.pivot_rows[j];
      Complex acc = g(n, p);
      for (size_t i = 0; i < j; ++i) {
        acc -= f.rows(n, static_cast<Index>(i)) * std::conj(f.rows(p, static_cast<Index>(i)));
      }
      f.rows(n, static_cast<Index>(j)) = acc / f.rows(p, static_cast<Index>(j)).real();
    }
    const Index open = static_cast<Index>(f.pivot_rows.size());
    double d = g(n, n).real();
    for (Index j = 0; j < open; ++j) d -= std::norm(f.rows(n, j));
    f.report.pivots.push_back(d);

    bool residual_failed = false;
    const double bound = tol * std::max(g(n, n).real(), tol);
    for (const Index z : zero_rows) {
      Complex r = g(n, z);
      for (Index j = 0; j < open; ++j) r -= f.rows(n, j) * std::conj(f.rows(z, j));
      if (std::norm(r) > bound) {
        if (!residual_failed) {
          f.report.residual_levels.push_back(level);
          if (f.first_residual.row < 0) {
            f.first_residual = {n, z, std::abs(r)};
          }
        }
        residual_failed = true;
      }
    }

    if (d < -tol) {
      f.report.violated_levels.push_back(level);
    } else if (d <= tol) {
      f.report.boundary_levels.push_back(level);
      zero_rows.push_back(n);
    } else {
      f.rows(n, open) = std::sqrt(d);
      f.pivot_rows.push_back(n);
    }
    if (stop_on_failure && (residual_failed || d < -tol)) break;
  }
  f.report.feasible = f.report.violated_levels.empty() && f.report.residual_levels.empty();
  return f;
}

double resolve_tol(const GramMatrix& gram, std::optional<double> tol) {
  if (!tol) return default_tolerance(gram);
  if (!(*tol >= 0.0) || !std::isfinite(*tol)) {
    throw InputError("feasibility tolerance must be finite and non-negative");
  }
  return *tol;
}

}  // namespace

GramMatrix::GramMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw InputError("gram matrix must be square");
  }
}

GramMatrix gram_from_rates(const RateTable& rates) {
  const Index n = rates.dims();
  const double scale = std::max(1.0, rates.gamma().cwiseAbs().maxCoeff());
  for (Index l = 1; l < n; ++l) {
    if (std::abs(rates.dshift(0, l)) > 1e-12 * scale) {
      throw InputError("shift dOmega_1" + std::to_string(l + 1) +
                       " is nonzero; canonical form fixes all shifts against level 1 to zero, "
                       "gauge-fix observed frequencies with intrinsic_shifts first");
    }
  }
  ComplexMatrix g(n - 1, n - 1);
  for (Index a = 1; a < n; ++a) {
    g(a - 1, a - 1) = 2.0 * rates.gamma(0, a);
    for (Index b = a + 1; b < n; ++b) {
      const Complex c(rates.gamma(0, a) + rates.gamma(0, b) - rates.gamma(a, b),
                      -rates.dshift(a, b));
      g(a - 1, b - 1) = c;
      g(b - 1, a - 1) = std::conj(c);
    }
  }
  return GramMatrix(std::move(g));
}

double default_tolerance(const GramMatrix& gram) { return 1e-10 * gram.trace(); }

int ConstraintReport::first_failure() const {
  int first = 0;
  for (const auto* levels : {&violated_levels, &residual_levels}) {
    for (const int level : *levels) {
      if (first == 0 || level < first) first = level;
    }
  }
  return first;
}

ConstraintReport constraint_report(const RateTable& rates, std::optional<double> tol) {
  const GramMatrix gram = gram_from_rates(rates);
  return factorize(gram, resolve_tol(gram, tol), false).report;
}

CanonicalSet invert_rates(const RateTable& rates, std::optional<double> tol) {
  const GramMatrix gram = gram_from_rates(rates);
  const Factorization f = factorize(gram, resolve_tol(gram, tol), true);
  if (f.first_residual.row >= 0) {
    throw ResidualAtZeroPivot(static_cast<int>(f.first_residual.row) + 2,
                              static_cast<int>(f.first_residual.pivot_row) + 2,
                              f.first_residual.residual);
  }
  if (!f.report.violated_levels.empty()) {
    const int level = f.report.violated_levels.front();
    throw ConstraintViolation(level, -f.report.pivot(level));
  }
  const Index n = rates.dims();
  const Index cols = static_cast<Index>(f.pivot_rows.size());
  ComplexMatrix coeffs = ComplexMatrix::Zero(n, cols);
  coeffs.bottomRows(n - 1) = f.rows.leftCols(cols);
  return CanonicalSet(std::move(coeffs), RealVector::Zero(n));
}

double symmetric_constraint_n3(double g12, double g23, double g13, double dw23) {
  return 2.0 * (g12 * g23 + g23 * g13 + g12 * g13) - g12 * g12 - g23 * g23 - g13 * g13 -
         dw23 * dw23;
}

bool ConeCoords::inside(double tol) const { return x >= -tol && slack() >= -tol; }

ConeCoords cone_coords_n3(double g12, double g23, double g13) {
  return {
      (g12 + g23 + g13) / std::sqrt(3.0),
      (g13 - g23) / std::sqrt(2.0),
      std::sqrt(2.0 / 3.0) * (g12 - 0.5 * (g13 + g23)),
  };
}

RealMatrix intrinsic_shifts(const RealMatrix& omega) {
  const Index n = omega.rows();
  if (omega.cols() != n || n < 2) {
    throw InputError("frequency table must be square with at least 2 levels");
  }
  if (!omega.allFinite()) {
    throw InputError("frequency table entries must be finite");
  }
  const double scale = std::max(1.0, omega.cwiseAbs().maxCoeff());
  if ((omega + omega.transpose()).cwiseAbs().maxCoeff() > 2e-12 * scale) {
    throw InputError("frequency table must be antisymmetric");
  }
  RealMatrix shifts = RealMatrix::Zero(n, n);
  for (Index m = 1; m < n; ++m) {
    for (Index l = m + 1; l < n; ++l) {
      const double w = omega(m, l) + omega(0, m) - omega(0, l);
      shifts(m, l) = w;
      shifts(l, m) = -w;
    }
  }
  return shifts;
}

}  // namespace dephase
