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

#include <random>

#include "gtest/gtest.h"

#include "dephase/errors.h"
#include "test_util.h"

using namespace dephase;

TEST(HermitianEigen, identity) {
  const RealVector v = hermitian_eigenvalues(ComplexMatrix::Identity(3, 3));
  EXPECT_LE((v - RealVector::Ones(3)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(HermitianEigen, diagonal_sorted_ascending) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  const RealVector v = hermitian_eigenvalues(m);
  EXPECT_NEAR(v(0), 1.0, 1e-15);
  EXPECT_NEAR(v(1), 2.0, 1e-15);
  EXPECT_NEAR(v(2), 3.0, 1e-15);
}

TEST(HermitianEigen, two_by_two) {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.5, 0.5, 1.0;
  const RealVector v = hermitian_eigenvalues(m);
  EXPECT_NEAR(v(0), 0.5, 1e-15);
  EXPECT_NEAR(v(1), 1.5, 1e-15);
}

TEST(HermitianEigen, rejects_non_hermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 1e-3;
  EXPECT_THROW(hermitian_eigenvalues(m), InputError);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), InputError);
}

TEST(HermitianEigen, residual_property) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 8;
    const ComplexMatrix m = dephase::testing::random_hermitian(rng, n);
    const HermitianEigen e = hermitian_eigen(m);
    const double scale = std::max(1.0, m.norm());
    for (Index i = 0; i < n; ++i) {
      const double r = (m * e.vectors.col(i) - e.values(i) * e.vectors.col(i)).norm();
      EXPECT_LE(r, 1e-10 * scale);
      if (i > 0) EXPECT_LE(e.values(i - 1), e.values(i));
    }
  }
}
