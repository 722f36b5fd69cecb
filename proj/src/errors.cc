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

#include "dephase/errors.h"

#include <cstdio>

namespace dephase {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

ConstraintViolation::ConstraintViolation(int level, double deficit)
    : std::runtime_error("constraint violated at level " + std::to_string(level) +
                         " (pivot short of zero by " + format_double(deficit) + ")"),
      level_(level),
      deficit_(deficit) {}

ResidualAtZeroPivot::ResidualAtZeroPivot(int level, int pivot_level, double residual)
    : std::runtime_error("level " + std::to_string(level) + " has residual " +
                         format_double(residual) + " against zero pivot at level " +
                         std::to_string(pivot_level)),
      level_(level),
      pivot_level_(pivot_level),
      residual_(residual) {}

}  // namespace dephase
