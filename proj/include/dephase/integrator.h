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

#include <span>
#include <vector>

#include "dephase/core_model.h"

namespace dephase {

struct IntegratorOptions {
  /// Fixed RK4 step. Zero selects 0.01 / generator_spectral_bound(model).
  double step = 0.0;
};

/// 2 (max|lambda| + sum_k max_n |a_nk|^2), an upper bound on the modulus of
/// every eigenvalue of the generator.
double generator_spectral_bound(const DephasingModel& model);

/// Integrates the master equation with classical fixed-step RK4 and returns
/// the state at every time in `t_grid`. The grid must start at 0 and be
/// non-decreasing. Throws InputError if step * bound > 0.1.
std::vector<DensityMatrix> lme_integrate(const DephasingModel& model, const DensityMatrix& rho0,
                                         std::span<const double> t_grid,
                                         IntegratorOptions options = {});

}  // namespace dephase
