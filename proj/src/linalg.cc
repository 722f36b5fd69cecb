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

#include "dephase/linalg.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include <Eigen/Eigenvalues>

#include "dephase/errors.h"

namespace dephase {

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("hermitian matrix must be square");
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  const double residual = hermiticity_residual(m);
  const double scale = m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
  if (!(residual <= 1e-10 * scale)) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3e", residual);
    throw InputError(std::string("matrix is not Hermitian (residual ") + buf + ")");
  }
  // The solver only reads the lower triangle; symmetrise so both halves count.
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw InputError("hermitian eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigen(m).values; }

}  // namespace dephase
