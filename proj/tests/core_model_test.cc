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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "dephase/errors.h"
#include "test_util.h"

using namespace dephase;
using dephase::testing::dense_dissipator;
using dephase::testing::dense_generator;

namespace {

DiagonalOperatorSet single_op(std::initializer_list<Complex> diag) {
  ComplexMatrix m(static_cast<Index>(diag.size()), 1);
  Index i = 0;
  for (const Complex c : diag) m(i++, 0) = c;
  return DiagonalOperatorSet(m);
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST(RatesFromOperators, spin1_field_coupling) {
  const RateTable r = rates_from_operators(single_op({0.0, 1.0, -1.0}));
  EXPECT_DOUBLE_EQ(r.gamma(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(r.gamma(0, 2), 0.5);
  EXPECT_DOUBLE_EQ(r.gamma(1, 2), 2.0);
  EXPECT_EQ(r.dshift().cwiseAbs().maxCoeff(), 0.0);
}

TEST(RatesFromOperators, empty_set_gives_zero_table) {
  const RateTable r = rates_from_operators(DiagonalOperatorSet(3));
  EXPECT_EQ(r.gamma().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(r.dshift().cwiseAbs().maxCoeff(), 0.0);
}

TEST(RatesFromOperators, complex_entry_produces_shift) {
  const RateTable r = rates_from_operators(single_op({0.0, 1.0, Complex(0.0, 1.0)}));
  EXPECT_DOUBLE_EQ(r.gamma(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(r.gamma(0, 2), 0.5);
  EXPECT_DOUBLE_EQ(r.gamma(1, 2), 1.0);
  EXPECT_DOUBLE_EQ(r.dshift(1, 2), 1.0);
  EXPECT_DOUBLE_EQ(r.dshift(2, 1), -1.0);
  EXPECT_DOUBLE_EQ(r.dshift(0, 1), 0.0);
}

TEST(RatesFromOperators, matches_literal_formula) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ops = dephase::testing::random_ops(rng, 2 + trial % 5, trial % 6);
    const RateTable r = rates_from_operators(ops);
    EXPECT_LE((r.gamma() - dephase::testing::literal_gamma(ops)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(RatesFromOperators, real_coefficients_have_no_shift) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 5;
    const Index k = 1 + trial % 4;
    RealMatrix a(n, k);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < k; ++j) a(i, j) = normal(rng);
    }
    const RateTable r = rates_from_operators(DiagonalOperatorSet(a.cast<Complex>()));
    EXPECT_LE(r.dshift().cwiseAbs().maxCoeff(), 1e-14);
    const RealMatrix literal = dephase::testing::literal_gamma(DiagonalOperatorSet(a.cast<Complex>()));
    for (Index m = 0; m < n; ++m) {
      for (Index l = 0; l < n; ++l) {
        const double squared = 0.5 * (a.row(m) - a.row(l)).squaredNorm();
        EXPECT_NEAR(r.gamma(m, l), squared, 1e-14 * std::max(1.0, squared));
        EXPECT_NEAR(literal(m, l), squared, 1e-13 * std::max(1.0, squared));
      }
    }
  }
}

TEST(RateTable, rejects_invalid_tables) {
  RealMatrix g = RealMatrix::Zero(3, 3);
  g(0, 1) = 1.0;
  EXPECT_THROW(RateTable(g, RealMatrix::Zero(3, 3)), InputError);  // not symmetric
  g(1, 0) = 1.0;
  EXPECT_NO_THROW(RateTable(g, RealMatrix::Zero(3, 3)));
  g(0, 1) = g(1, 0) = -1.0;
  EXPECT_THROW(RateTable(g, RealMatrix::Zero(3, 3)), InputError);
  RealMatrix w = RealMatrix::Zero(3, 3);
  w(1, 2) = w(2, 1) = 1.0;
  EXPECT_THROW(RateTable(RealMatrix::Zero(3, 3), w), InputError);
  EXPECT_THROW(RateTable(1), InputError);
}

TEST(DensityMatrix, validates_hermitian_unit_trace) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(DensityMatrix{m});
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{m}, InputError);
  m(1, 0) = 0.1;
  EXPECT_NO_THROW(DensityMatrix{m});
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2)), InputError);
}

TEST(DensityMatrix, non_positive_states_are_representable) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 0.5;
  m(0, 1) = m(1, 0) = 0.8;
  const DensityMatrix rho(m);
  EXPECT_NEAR(rho.min_eigenvalue(), -0.3, 1e-14);
  EXPECT_FALSE(rho.is_positive());
}

TEST(Propagate, zero_rates_is_identity) {
  std::mt19937_64 rng(3);
  const DensityMatrix rho0 = dephase::testing::random_state(rng, 4);
  const DensityMatrix rho = propagate(RateTable(4), RealMatrix::Zero(4, 4), rho0, 7.5);
  EXPECT_EQ(max_abs(rho.entries() - rho0.entries()), 0.0);
}

TEST(Propagate, halving_time) {
  ComplexMatrix m = ComplexMatrix::Constant(2, 2, 0.5);
  RealMatrix g = RealMatrix::Zero(2, 2);
  g(0, 1) = g(1, 0) = 1.0;
  const DensityMatrix rho =
      propagate(RateTable(g, RealMatrix::Zero(2, 2)), RealMatrix::Zero(2, 2), DensityMatrix(m),
                std::log(2.0));
  EXPECT_NEAR(std::abs(rho(0, 1)), 0.25, 1e-15);
  EXPECT_EQ(rho(0, 0), Complex(0.5));
}

TEST(Propagate, magnitudes_decay_at_gamma_and_populations_fixed) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + trial % 5;
    const auto ops = dephase::testing::random_ops(rng, n, 3);
    const DephasingModel model(dephase::testing::random_levels(rng, n), ops);
    const RateTable rates = rates_from_operators(ops);
    const DensityMatrix rho0 = dephase::testing::random_state(rng, n);
    const double t = 0.37 * (trial + 1);
    const DensityMatrix rho = propagate(rates, effective_frequencies(model), rho0, t);
    for (Index a = 0; a < n; ++a) {
      EXPECT_EQ(rho(a, a), rho0(a, a));
      for (Index b = 0; b < n; ++b) {
        EXPECT_NEAR(std::abs(rho(a, b)), std::exp(-t * rates.gamma(a, b)) * std::abs(rho0(a, b)),
                    1e-14);
      }
    }
  }
}

TEST(Propagate, rejects_negative_time_and_bad_frequencies) {
  const DensityMatrix rho0(ComplexMatrix::Identity(2, 2) * 0.5);
  EXPECT_THROW(propagate(RateTable(2), RealMatrix::Zero(2, 2), rho0, -1.0), InputError);
  RealMatrix w = RealMatrix::Zero(2, 2);
  w(0, 1) = 1.0;
  EXPECT_THROW(propagate(RateTable(2), w, rho0, 1.0), InputError);
  EXPECT_THROW(propagate(RateTable(3), RealMatrix::Zero(3, 3), rho0, 1.0), InputError);
}

TEST(Dissipator, maximally_mixed_state_is_stationary) {
  std::mt19937_64 rng(5);
  const auto ops = dephase::testing::random_ops(rng, 5, 4);
  const ComplexMatrix rho = ComplexMatrix::Identity(5, 5) / 5.0;
  EXPECT_LE(max_abs(dissipator_apply(ops, rho)), 1e-15);
}

TEST(Dissipator, hand_expanded_entry) {
  ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
  rho.topLeftCorner(2, 2).setConstant(0.5);
  const ComplexMatrix d = dissipator_apply(single_op({0.0, 1.0, -1.0}), rho);
  EXPECT_NEAR(std::abs(d(0, 1) - Complex(-0.25)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d(1, 0) - Complex(-0.25)), 0.0, 1e-15);
  EXPECT_EQ(d(0, 0), Complex(0.0));
  EXPECT_EQ(d(1, 1), Complex(0.0));
}

TEST(Dissipator, agrees_with_dense_products_and_is_traceless) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 6;
    const auto ops = dephase::testing::random_ops(rng, n, trial % 5);
    const ComplexMatrix rho = dephase::testing::random_hermitian(rng, n);
    const ComplexMatrix d = dissipator_apply(ops, rho);
    EXPECT_LE(max_abs(d - dense_dissipator(ops, rho)), 1e-12);
    EXPECT_LE(std::abs(d.trace()), 1e-12);
    EXPECT_LE(max_abs(d - d.adjoint()), 1e-12);
  }
}

TEST(Dissipator, dimension_mismatch) {
  EXPECT_THROW(dissipator_apply(DiagonalOperatorSet(3), ComplexMatrix::Zero(2, 2)), InputError);
}

TEST(GeneratorAction, trivial_cases) {
  std::mt19937_64 rng(7);
  const ComplexMatrix rho = dephase::testing::random_hermitian(rng, 4);
  EXPECT_EQ(max_abs(generator_action(DephasingModel(DiagonalOperatorSet(4)), rho)), 0.0);

  const DephasingModel model(dephase::testing::random_levels(rng, 4),
                             dephase::testing::random_ops(rng, 4, 3));
  const ComplexMatrix diag = rho.diagonal().asDiagonal();
  EXPECT_LE(max_abs(generator_action(model, diag)), 1e-15);
  EXPECT_LE(max_abs(generator_action(model, rho) - dense_generator(model, rho)), 1e-12);
}

TEST(UnitaryMix, identity_is_noop) {
  std::mt19937_64 rng(8);
  const auto ops = dephase::testing::random_ops(rng, 4, 3);
  const auto mixed = unitary_mix(ops, ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(max_abs(mixed.coeffs() - ops.coeffs()), 0.0);
}

TEST(UnitaryMix, duplicated_operator_collapses) {
  ComplexMatrix v(3, 2);
  v.col(0) << 0.0, 1.0, Complex(0.5, -0.5);
  v.col(1) = v.col(0);
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(2, 2);
  u << s, s, s, -s;
  const DiagonalOperatorSet ops(v);
  const auto mixed = unitary_mix(ops, u);
  EXPECT_LE(max_abs(mixed.coeffs().col(0) - std::sqrt(2.0) * v.col(0)), 1e-15);
  EXPECT_LE(max_abs(mixed.coeffs().col(1)), 1e-15);
  for (Index m = 0; m < 3; ++m) {
    for (Index l = 0; l < 3; ++l) {
      ComplexMatrix e = ComplexMatrix::Zero(3, 3);
      e(m, l) = 1.0;
      EXPECT_LE(max_abs(dissipator_apply(ops, e) - dissipator_apply(mixed, e)), 1e-15);
    }
  }
}

TEST(UnitaryMix, random_unitaries_preserve_generator) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 5;
    const Index k = 1 + trial % 5;
    const auto ops = dephase::testing::random_ops(rng, n, k);
    const auto mixed = unitary_mix(ops, dephase::testing::random_unitary(rng, k));
    const RateTable a = rates_from_operators(ops);
    const RateTable b = rates_from_operators(mixed);
    EXPECT_LE((a.gamma() - b.gamma()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((a.dshift() - b.dshift()).cwiseAbs().maxCoeff(), 1e-10);
    for (Index m = 0; m < n; ++m) {
      for (Index l = 0; l < n; ++l) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(m, l) = 1.0;
        EXPECT_LE(max_abs(dissipator_apply(ops, e) - dissipator_apply(mixed, e)), 1e-12);
      }
    }
  }
}

TEST(UnitaryMix, rejects_non_unitary_with_residual) {
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(0, 0) = 1.5;
  try {
    unitary_mix(DiagonalOperatorSet(ComplexMatrix::Ones(3, 2)), u);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("1.250e+00"), std::string::npos) << e.what();
  }
  EXPECT_THROW(unitary_mix(DiagonalOperatorSet(ComplexMatrix::Ones(3, 2)),
                           ComplexMatrix::Identity(3, 3)),
               InputError);
}

TEST(IdentityShift, zero_alpha_is_noop) {
  std::mt19937_64 rng(10);
  const DephasingModel model(dephase::testing::random_levels(rng, 3),
                             dephase::testing::random_ops(rng, 3, 2));
  const DephasingModel shifted = identity_shift(model, 1, 0.0);
  EXPECT_EQ(max_abs(shifted.ops.coeffs() - model.ops.coeffs()), 0.0);
  EXPECT_EQ((shifted.levels - model.levels).cwiseAbs().maxCoeff(), 0.0);
}

TEST(IdentityShift, removing_pure_identity_operator) {
  const Complex c(0.3, -1.2);
  const DephasingModel model(RealVector::Zero(3), DiagonalOperatorSet(ComplexMatrix::Constant(3, 1, c)));
  const DephasingModel shifted = identity_shift(model, 0, -c);
  EXPECT_EQ(max_abs(shifted.ops.coeffs()), 0.0);
  EXPECT_EQ(shifted.levels.cwiseAbs().maxCoeff(), 0.0);
}

TEST(IdentityShift, random_shifts_preserve_generator) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 5;
    const Index k = 1 + trial % 4;
    const DephasingModel model(dephase::testing::random_levels(rng, n),
                               dephase::testing::random_ops(rng, n, k));
    const DephasingModel shifted =
        identity_shift(model, trial % k, dephase::testing::random_complex(rng));
    for (Index m = 0; m < n; ++m) {
      for (Index l = 0; l < n; ++l) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(m, l) = 1.0;
        EXPECT_LE(max_abs(dense_generator(model, e) - dense_generator(shifted, e)), 1e-12);
      }
    }
  }
}

TEST(IdentityShift, bad_index) {
  const DephasingModel model(DiagonalOperatorSet(ComplexMatrix::Ones(3, 1)));
  EXPECT_THROW(identity_shift(model, 1, 1.0), InputError);
}
