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

#include <stdexcept>
#include <string>

namespace dephase {

/// Malformed or out-of-contract input (bad dimensions, non-finite entries,
/// non-unitary mixing matrices, unparsable files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rate table whose constraint pivot at `level` is negative beyond
/// tolerance. `deficit` is the positive amount by which the pivot falls
/// short of zero.
class ConstraintViolation : public std::runtime_error {
 public:
  ConstraintViolation(int level, double deficit);

  int level() const { return level_; }
  double deficit() const { return deficit_; }

 private:
  int level_;
  double deficit_;
};

/// A zero pivot at `pivot_level` while a later `level` still needs a
/// nonzero component along it: the Gram matrix is not PSD even though no
/// pivot went negative.
class ResidualAtZeroPivot : public std::runtime_error {
 public:
  ResidualAtZeroPivot(int level, int pivot_level, double residual);

  int level() const { return level_; }
  int pivot_level() const { return pivot_level_; }
  double residual() const { return residual_; }

 private:
  int level_;
  int pivot_level_;
  double residual_;
};

}  // namespace dephase
