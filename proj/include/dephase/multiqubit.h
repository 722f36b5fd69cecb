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
#include <span>
#include <vector>

#include "dephase/core_model.h"
#include "dephase/feasibility.h"

namespace dephase {

/// Symmetric dephasing of an n-qubit register: the coherence between basis
/// states that differ on h qubits decays at rate_by_weight[h - 1]. Entry 0
/// is the local rate Gamma, entry 1 is mu1 Gamma, entry 2 is mu2 Gamma.
struct RegisterRateSpec {
  int qubits = 2;
  std::vector<double> rate_by_weight;

  void validate() const;
};

/// Basis index b (0-based) encodes qubit 1 in the most significant bit, so
/// for two qubits levels 1..4 are |00>, |01>, |10>, |11>.
RateTable register_rate_table(const RegisterRateSpec& spec);

/// Two-qubit table with local rate `gamma` on the four single-flip pairs and
/// the given non-local rates Gamma_23 and Gamma_14.
RateTable two_qubit_rates(double gamma, double gamma23, double gamma14);

DensityMatrix bell_state();        // (|00> + |11>)/sqrt 2
DensityMatrix cluster_state();     // (|00> + |01> + |10> - |11>)/2
/// All entries 1/dims: the uniform superposition, |++...+><++...+|.
DensityMatrix full_coherence_state(Index dims);

/// lambda1 - lambda2 - lambda3 - lambda4 with lambda_i the descending square
/// roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho),
/// rho~ = (sy x sy) rho* (sy x sy). Rejects non-states (min eigenvalue
/// below -1e-10).
double concurrence_margin(const DensityMatrix& rho);

/// Wootters concurrence, max(0, concurrence_margin(rho)).
double concurrence(const DensityMatrix& rho);

struct TrajectoryPoint {
  double t;
  DensityMatrix state;
  double concurrence;
};

/// Bell state under pure dephasing: only rho_14 decays, as exp(-Gamma_14 t).
std::vector<TrajectoryPoint> bell_trajectory(double gamma14, std::span<const double> t_grid);

/// Cluster state under local rate `gamma` and non-local rates gamma23,
/// gamma14.
std::vector<TrajectoryPoint> cluster_trajectory(double gamma, double gamma23, double gamma14,
                                                std::span<const double> t_grid);

/// First time the cluster-state concurrence reaches zero within [0, t_max],
/// located by bisection on concurrence_margin; nullopt if it stays positive.
std::optional<double> cluster_sudden_death_time(double gamma, double gamma23, double gamma14,
                                                double t_max);

struct EigenPoint {
  double t;
  double min_eigenvalue;
};

/// Minimum eigenvalue of the full-coherence two-qubit state evolving under
/// local rate `gamma` and Gamma_23 = Gamma_14 = mu gamma. Goes negative for
/// some t iff mu > 2.
std::vector<EigenPoint> min_eig_trajectory(double mu, double gamma,
                                           std::span<const double> t_grid);

struct ScanPoint {
  double mu1;
  double mu2;
  bool feasible;
  /// 0 when feasible; otherwise the first failing level (2..2^n).
  int first_violated_level;
};

/// Feasibility over a (mu1, mu2) grid for an n-qubit register with rates
/// (gamma, mu1 gamma, mu2 gamma, mu2 gamma, ...). Rows are mu1-major in the
/// order of the input grids regardless of `threads` (0 = hardware count).
std::vector<ScanPoint> register_scan(int qubits, std::span<const double> mu1_grid,
                                     std::span<const double> mu2_grid, double gamma,
                                     unsigned threads = 0);

std::vector<ScanPoint> three_qubit_scan(std::span<const double> mu1_grid,
                                        std::span<const double> mu2_grid, double gamma,
                                        unsigned threads = 0);

struct PairBound {
  int qubit_a;  // 1-based
  int qubit_b;
  double local;          // Gamma
  double gamma23;        // |01><10| coherence rate in the pair's subspace
  double gamma14;        // |00><11| coherence rate
  double sum_slack;      // 4 Gamma - Gamma_23 - Gamma_14
  double equal_rate_bound;  // 2 Gamma
  bool at_bound;
  bool violated;
  ConstraintReport report;
};

/// Restricts the register table to every qubit pair (other qubits in |0>)
/// and checks the two-qubit limits Gamma_23 + Gamma_14 <= 4 Gamma.
std::vector<PairBound> pairwise_speed_limit(const RegisterRateSpec& spec, double tol = 1e-9);

std::vector<double> linspace(double first, double last, size_t count);

}  // namespace dephase
