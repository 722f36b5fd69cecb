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

#include "dephase/multiqubit.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "dephase/errors.h"
#include "dephase/linalg.h"

namespace dephase {

namespace {

constexpr double kStateTol = 1e-10;

ComplexMatrix spin_flip() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

void require_rate(double r, const char* what) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw InputError(std::string(what) + " must be finite and non-negative");
  }
}

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dims() != 4) {
    throw InputError("concurrence is defined for two-qubit (4-level) states only");
  }
}

}  // namespace

void RegisterRateSpec::validate() const {
  if (qubits < 2 || qubits > 12) {
    throw InputError("register needs between 2 and 12 qubits, got " + std::to_string(qubits));
  }
  if (rate_by_weight.size() != static_cast<size_t>(qubits)) {
    throw InputError("register needs one rate per Hamming weight 1.." + std::to_string(qubits));
  }
  for (const double r : rate_by_weight) require_rate(r, "register rate");
}

RateTable register_rate_table(const RegisterRateSpec& spec) {
  spec.validate();
  const Index n = Index{1} << spec.qubits;
  RealMatrix gamma = RealMatrix::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const int weight = std::popcount(static_cast<unsigned>(a ^ b));
      gamma(a, b) = gamma(b, a) = spec.rate_by_weight[static_cast<size_t>(weight - 1)];
    }
  }
  return RateTable(std::move(gamma), RealMatrix::Zero(n, n));
}

RateTable two_qubit_rates(double gamma, double gamma23, double gamma14) {
  require_rate(gamma, "local rate");
  require_rate(gamma23, "rate Gamma_23");
  require_rate(gamma14, "rate Gamma_14");
  RealMatrix g(4, 4);
  g << 0, gamma, gamma, gamma14,  //
      gamma, 0, gamma23, gamma,   //
      gamma, gamma23, 0, gamma,   //
      gamma14, gamma, gamma, 0;
  return RateTable(std::move(g), RealMatrix::Zero(4, 4));
}

DensityMatrix bell_state() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0;
  return DensityMatrix::pure(psi);
}

DensityMatrix cluster_state() {
  Eigen::VectorXcd psi(4);
  psi << 1.0, 1.0, 1.0, -1.0;
  return DensityMatrix::pure(psi);
}

DensityMatrix full_coherence_state(Index dims) {
  if (dims < 1) throw InputError("state needs at least one level");
  return DensityMatrix(ComplexMatrix::Constant(dims, dims, 1.0 / static_cast<double>(dims)));
}

double concurrence_margin(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const HermitianEigen eig = hermitian_eigen(rho.entries());
  if (eig.values(0) < -kStateTol) {
    throw InputError("concurrence undefined: state has negative eigenvalue " +
                     std::to_string(eig.values(0)));
  }
  const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_rho = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  const ComplexMatrix flip = spin_flip();
  const ComplexMatrix tilde = flip * rho.entries().conjugate() * flip;
  ComplexMatrix r = sqrt_rho * tilde * sqrt_rho;
  r = (0.5 * (r + r.adjoint())).eval();
  RealVector lambda = hermitian_eigenvalues(r).cwiseMax(0.0).cwiseSqrt();
  // Ascending order, so lambda(3) is the largest.
  return lambda(3) - lambda(2) - lambda(1) - lambda(0);
}

double concurrence(const DensityMatrix& rho) { return std::max(0.0, concurrence_margin(rho)); }

std::vector<TrajectoryPoint> bell_trajectory(double gamma14, std::span<const double> t_grid) {
  require_rate(gamma14, "rate Gamma_14");
  std::vector<TrajectoryPoint> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    if (!(t >= 0.0)) throw InputError("trajectory times must be non-negative");
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = 0.5 * std::exp(-gamma14 * t);
    DensityMatrix state(std::move(m));
    const double c = concurrence(state);
    out.push_back({t, std::move(state), c});
  }
  return out;
}

namespace {

DensityMatrix cluster_at(double gamma, double gamma23, double gamma14, double t) {
  const double local = std::exp(-gamma * t);
  const double e23 = std::exp(-gamma23 * t);
  const double e14 = std::exp(-gamma14 * t);
  ComplexMatrix m(4, 4);
  m << 1.0, local, local, -e14,  //
      local, 1.0, e23, -local,   //
      local, e23, 1.0, -local,   //
      -e14, -local, -local, 1.0;
  return DensityMatrix(0.25 * m);
}

}  // namespace

std::vector<TrajectoryPoint> cluster_trajectory(double gamma, double gamma23, double gamma14,
                                                std::span<const double> t_grid) {
  require_rate(gamma, "local rate");
  require_rate(gamma23, "rate Gamma_23");
  require_rate(gamma14, "rate Gamma_14");
  std::vector<TrajectoryPoint> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    if (!(t >= 0.0)) throw InputError("trajectory times must be non-negative");
    DensityMatrix state = cluster_at(gamma, gamma23, gamma14, t);
    const double c = concurrence(state);
    out.push_back({t, std::move(state), c});
  }
  return out;
}

std::optional<double> cluster_sudden_death_time(double gamma, double gamma23, double gamma14,
                                                double t_max) {
  require_rate(gamma, "local rate");
  auto margin = [&](double t) {
    return concurrence_margin(cluster_at(gamma, gamma23, gamma14, t));
  };
  // Coarse scan for the first sign change, then bisect.
  constexpr int kCoarse = 1000;
  double lo = 0.0;
  double hi = -1.0;
  for (int i = 1; i <= kCoarse; ++i) {
    const double t = t_max * i / kCoarse;
    if (margin(t) <= 0.0) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi < 0.0) return std::nullopt;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<EigenPoint> min_eig_trajectory(double mu, double gamma,
                                           std::span<const double> t_grid) {
  require_rate(mu, "mu");
  const RateTable rates = two_qubit_rates(gamma, mu * gamma, mu * gamma);
  const RealMatrix freqs = RealMatrix::Zero(4, 4);
  const DensityMatrix rho0 = full_coherence_state(4);
  std::vector<EigenPoint> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    out.push_back({t, propagate(rates, freqs, rho0, t).min_eigenvalue()});
  }
  return out;
}

std::vector<ScanPoint> register_scan(int qubits, std::span<const double> mu1_grid,
                                     std::span<const double> mu2_grid, double gamma,
                                     unsigned threads) {
  require_rate(gamma, "local rate");
  for (const auto grid : {mu1_grid, mu2_grid}) {
    for (const double mu : grid) require_rate(mu, "scan grid value");
  }
  const size_t rows = mu1_grid.size();
  const size_t cols = mu2_grid.size();
  std::vector<ScanPoint> out(rows * cols);

  auto evaluate = [&](size_t row) {
    RegisterRateSpec spec{qubits, std::vector<double>(static_cast<size_t>(qubits))};
    for (size_t c = 0; c < cols; ++c) {
      spec.rate_by_weight[0] = gamma;
      if (qubits >= 2) spec.rate_by_weight[1] = mu1_grid[row] * gamma;
      for (size_t w = 2; w < spec.rate_by_weight.size(); ++w) {
        spec.rate_by_weight[w] = mu2_grid[c] * gamma;
      }
      const ConstraintReport report = constraint_report(register_rate_table(spec));
      out[row * cols + c] = {mu1_grid[row], mu2_grid[c], report.feasible, report.first_failure()};
    }
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(rows, 1)));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t row = next++; row < rows; row = next++) evaluate(row);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<ScanPoint> three_qubit_scan(std::span<const double> mu1_grid,
                                        std::span<const double> mu2_grid, double gamma,
                                        unsigned threads) {
  return register_scan(3, mu1_grid, mu2_grid, gamma, threads);
}

std::vector<PairBound> pairwise_speed_limit(const RegisterRateSpec& spec, double tol) {
  const RateTable full = register_rate_table(spec);
  const int n = spec.qubits;
  const double local = spec.rate_by_weight[0];
  std::vector<PairBound> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Index bit_a = Index{1} << (n - 1 - a);
      const Index bit_b = Index{1} << (n - 1 - b);
      const Index idx[4] = {0, bit_b, bit_a, bit_a | bit_b};
      RealMatrix g(4, 4);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) g(i, j) = full.gamma(idx[i], idx[j]);
      }
      const RateTable sub(std::move(g), RealMatrix::Zero(4, 4));
      PairBound pb{a + 1, b + 1, local, sub.gamma(1, 2), sub.gamma(0, 3), 0.0, 2.0 * local,
                   false, false, constraint_report(sub)};
      pb.sum_slack = 4.0 * local - pb.gamma23 - pb.gamma14;
      pb.at_bound = std::abs(pb.sum_slack) <= tol;
      pb.violated = !pb.report.feasible || pb.sum_slack < -tol;
      out.push_back(std::move(pb));
    }
  }
  return out;
}

std::vector<double> linspace(double first, double last, size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = first;
    return out;
  }
  for (size_t i = 0; i < count; ++i) {
    out[i] = first + (last - first) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) out.back() = last;
  return out;
}

}  // namespace dephase
