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

#include "dephase/integrator.h"

#include <cmath>
#include <string>

#include "dephase/errors.h"

namespace dephase {

namespace {

constexpr double kMaxStepTimesBound = 0.1;
constexpr double kDefaultStepTimesBound = 0.01;

ComplexMatrix rk4_step(const DephasingModel& model, const ComplexMatrix& rho, double h) {
  const ComplexMatrix k1 = generator_action(model, rho);
  const ComplexMatrix k2 = generator_action(model, rho + 0.5 * h * k1);
  const ComplexMatrix k3 = generator_action(model, rho + 0.5 * h * k2);
  const ComplexMatrix k4 = generator_action(model, rho + h * k3);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

double generator_spectral_bound(const DephasingModel& model) {
  double bound = model.levels.size() ? model.levels.cwiseAbs().maxCoeff() : 0.0;
  const ComplexMatrix& a = model.ops.coeffs();
  for (Index k = 0; k < model.ops.size(); ++k) {
    bound += a.col(k).cwiseAbs2().maxCoeff();
  }
  return 2.0 * bound;
}

std::vector<DensityMatrix> lme_integrate(const DephasingModel& model, const DensityMatrix& rho0,
                                         std::span<const double> t_grid,
                                         IntegratorOptions options) {
  if (rho0.dims() != model.dims()) {
    throw InputError("lme_integrate: state and model dimensions differ");
  }
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw InputError("lme_integrate: time grid must start at 0");
  }
  for (size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= t_grid[i - 1]) || !std::isfinite(t_grid[i])) {
      throw InputError("lme_integrate: time grid must be finite and non-decreasing");
    }
  }
  const double bound = generator_spectral_bound(model);
  double h = options.step;
  if (h < 0.0 || !std::isfinite(h)) {
    throw InputError("lme_integrate: step must be positive");
  }
  if (h == 0.0) {
    h = bound > 0.0 ? kDefaultStepTimesBound / bound : 0.0;
  }
  if (h * bound > kMaxStepTimesBound) {
    throw InputError("lme_integrate: step " + std::to_string(h) + " too large for spectral bound " +
                     std::to_string(bound) + " (step * bound must be <= 0.1)");
  }

  std::vector<DensityMatrix> out;
  out.reserve(t_grid.size());
  out.push_back(rho0);
  ComplexMatrix rho = rho0.entries();
  for (size_t i = 1; i < t_grid.size(); ++i) {
    const double gap = t_grid[i] - t_grid[i - 1];
    if (gap > 0.0 && bound > 0.0) {
      const auto steps = static_cast<long>(std::ceil(gap / h));
      const double dt = gap / static_cast<double>(steps);
      for (long s = 0; s < steps; ++s) {
        rho = rk4_step(model, rho, dt);
      }
    }
    out.emplace_back(rho);
  }
  return out;
}

}  // namespace dephase
