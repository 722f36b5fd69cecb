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

#include "dephase/core_model.h"

namespace dephase {

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // column i pairs with values(i)
};

/// max |m_ij - conj(m_ji)|.
double hermiticity_residual(const ComplexMatrix& m);

/// Ascending eigenvalues of a Hermitian matrix. Rejects inputs whose
/// Hermiticity residual exceeds 1e-10 (relative to max(1, |m|)).
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

HermitianEigen hermitian_eigen(const ComplexMatrix& m);

}  // namespace dephase
