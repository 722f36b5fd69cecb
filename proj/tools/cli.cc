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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dephase/canonical.h"
#include "dephase/errors.h"
#include "dephase/feasibility.h"
#include "dephase/io.h"
#include "dephase/multiqubit.h"

namespace dephase::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

// Parsed command line for one invocation.
struct JobConfig {
  std::string input;
  std::string output;
  std::optional<double> tol;

  // simulate
  std::string preset;
  std::string model_path;
  std::string rates_path;
  std::string state = "plus";
  std::string state_path;
  double gamma = 1.0;
  std::optional<double> mu;
  double gamma14 = 0.0;
  double gamma23 = 0.0;
  std::optional<double> t_max;
  size_t points = 501;

  // scan
  int qubits = 3;
  double mu1_max = 2.2;
  double mu2_max = 4.4;
  size_t mu1_points = 161;
  size_t mu2_points = 161;
  unsigned threads = 0;
  bool legend = false;
};

void check_distinct_paths(const JobConfig& job) {
  if (job.output.empty()) return;
  for (const auto& in : {job.input, job.model_path, job.rates_path, job.state_path}) {
    if (in.empty()) continue;
    std::error_code ec;
    if (fs::weakly_canonical(in, ec) == fs::weakly_canonical(job.output, ec)) {
      throw InputError("output path must differ from input path " + in);
    }
  }
}

void emit(const JobConfig& job, const std::string& text, std::ostream& out) {
  if (job.output.empty()) {
    out << text;
  } else {
    io::write_text_file(job.output, text);
  }
}

int cmd_rates(const JobConfig& job, std::ostream& out) {
  const DephasingModel model = io::model_from_json(io::read_json_file(job.input));
  emit(job, io::dump_json(io::rates_to_json(rates_from_operators(model.ops))), out);
  return kOk;
}

int cmd_canonicalize(const JobConfig& job, std::ostream& out) {
  const DephasingModel model = io::model_from_json(io::read_json_file(job.input));
  emit(job, io::dump_json(io::canonical_to_json(canonicalize(model.ops))), out);
  return kOk;
}

int cmd_check(const JobConfig& job, std::ostream& out) {
  const RateTable rates = io::rates_from_json(io::read_json_file(job.input));
  emit(job, io::dump_json(io::report_to_json(constraint_report(rates, job.tol))), out);
  return kOk;
}

int cmd_invert(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const RateTable rates = io::rates_from_json(io::read_json_file(job.input));
  try {
    Json doc = io::canonical_to_json(invert_rates(rates, job.tol));
    doc["constraints"] = io::report_to_json(constraint_report(rates, job.tol));
    emit(job, io::dump_json(doc), out);
    return kOk;
  } catch (const std::runtime_error& e) {
    if (!dynamic_cast<const ConstraintViolation*>(&e) &&
        !dynamic_cast<const ResidualAtZeroPivot*>(&e)) {
      throw;
    }
    Json doc = io::report_to_json(constraint_report(rates, job.tol));
    doc["error"] = e.what();
    emit(job, io::dump_json(doc), out);
    err << "dephase invert: " << e.what() << "\n";
    return kConstraintViolation;
  }
}

struct SimulationInput {
  RateTable rates;
  RealMatrix freqs;
  DensityMatrix rho0;
  double time_scale;
};

DensityMatrix named_state(const std::string& name, Index dims) {
  if (name == "plus") return full_coherence_state(dims);
  if (name == "bell" || name == "cluster") {
    if (dims != 4) throw InputError("state '" + name + "' needs a 4-level system");
    return name == "bell" ? bell_state() : cluster_state();
  }
  throw InputError("unknown state '" + name + "' (expected plus, bell or cluster)");
}

SimulationInput simulation_input(const JobConfig& job) {
  const int sources = !job.preset.empty() + !job.model_path.empty() + !job.rates_path.empty();
  if (sources != 1) {
    throw InputError("simulate needs exactly one of --preset, --model, --rates");
  }
  if (!(job.gamma >= 0.0)) throw InputError("--gamma must be non-negative");
  if (!job.preset.empty()) {
    const double g = job.gamma;
    const double scale = g > 0.0 ? g : 1.0;
    const RealMatrix zero = RealMatrix::Zero(4, 4);
    if (job.preset == "fig2") {
      if (!job.mu) throw InputError("preset fig2 needs --mu");
      return {two_qubit_rates(g, *job.mu * g, *job.mu * g), zero, full_coherence_state(4), scale};
    }
    if (job.preset == "bell") {
      return {two_qubit_rates(g, job.gamma23, job.gamma14), zero, bell_state(), scale};
    }
    if (job.preset == "cluster") {
      const double g23 = job.mu ? *job.mu * g : job.gamma23;
      const double g14 = job.mu ? *job.mu * g : job.gamma14;
      return {two_qubit_rates(g, g23, g14), zero, cluster_state(), scale};
    }
    throw InputError("unknown preset '" + job.preset + "' (expected fig2, bell or cluster)");
  }

  std::optional<RateTable> rates;
  RealMatrix freqs;
  if (!job.model_path.empty()) {
    const DephasingModel model = io::model_from_json(io::read_json_file(job.model_path));
    rates = rates_from_operators(model.ops);
    freqs = effective_frequencies(model);
  } else {
    rates = io::rates_from_json(io::read_json_file(job.rates_path));
    freqs = rates->dshift();
  }
  const Index n = rates->dims();
  DensityMatrix rho0 = job.state_path.empty()
                           ? named_state(job.state, n)
                           : io::state_from_json(io::read_json_file(job.state_path));
  if (rho0.dims() != n) throw InputError("initial state and rates have different level counts");
  const double top = rates->gamma().maxCoeff();
  return {*rates, freqs, std::move(rho0), top > 0.0 ? top : 1.0};
}

int cmd_simulate(const JobConfig& job, std::ostream& out) {
  const SimulationInput sim = simulation_input(job);
  const double t_max = job.t_max.value_or(5.0 / sim.time_scale);
  if (!(t_max >= 0.0) || job.points < 1) {
    throw InputError("need --t-max >= 0 and --points >= 1");
  }
  const Index n = sim.rho0.dims();
  std::ostringstream csv;
  csv << "t,min_eigenvalue";
  if (n == 4) csv << ",concurrence";
  for (Index m = 1; m <= n; ++m) {
    for (Index l = 1; l <= n; ++l) csv << ",abs_rho_" << m << "_" << l;
  }
  csv << "\n";
  for (const double t : linspace(0.0, t_max, job.points)) {
    const DensityMatrix rho = propagate(sim.rates, sim.freqs, sim.rho0, t);
    const double min_eig = rho.min_eigenvalue();
    csv << io::format_number(t) << "," << io::format_number(min_eig);
    if (n == 4) {
      const double c = min_eig >= -1e-10 ? concurrence(rho) : std::numeric_limits<double>::quiet_NaN();
      csv << "," << (std::isnan(c) ? std::string("nan") : io::format_number(c));
    }
    for (Index m = 0; m < n; ++m) {
      for (Index l = 0; l < n; ++l) csv << "," << io::format_number(std::abs(rho(m, l)));
    }
    csv << "\n";
  }
  emit(job, csv.str(), out);
  return kOk;
}

constexpr const char* kScanLegend =
    "first_violated_level legend:\n"
    "  0   all constraints satisfied\n"
    "  1   rate non-negativity (checked on input; never reached for valid grids)\n"
    "  n   pivot inequality at level n = 2..2^qubits (2^qubits - 1 pivots)\n"
    "Together these are the 8 labelled constraints for three qubits.\n";

int cmd_scan(const JobConfig& job, std::ostream& out, std::ostream& err) {
  if (job.mu1_points < 1 || job.mu2_points < 1) throw InputError("grid needs at least one point");
  if (!(job.mu1_max >= 0.0) || !(job.mu2_max >= 0.0)) {
    throw InputError("grid bounds must be non-negative");
  }
  if (job.qubits < 2 || job.qubits > 8) throw InputError("--qubits must be in 2..8");
  const auto mu1 = linspace(0.0, job.mu1_max, job.mu1_points);
  const auto mu2 = linspace(0.0, job.mu2_max, job.mu2_points);
  const auto points = register_scan(job.qubits, mu1, mu2, job.gamma, job.threads);
  std::ostringstream csv;
  csv << "mu1,mu2,feasible,first_violated_level\n";
  for (const auto& p : points) {
    csv << io::format_number(p.mu1) << "," << io::format_number(p.mu2) << ","
        << (p.feasible ? 1 : 0) << "," << p.first_violated_level << "\n";
  }
  emit(job, csv.str(), out);
  if (job.legend) err << kScanLegend;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical dephasing operators, rate constraints and entanglement speed limits",
               "dephase"};
  app.require_subcommand(1);
  JobConfig job;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", job.output, "Output file (default: stdout)");
  };

  auto* rates = app.add_subcommand("rates", "Decay rates and shifts of an operator set");
  rates->add_option("ops", job.input, "Operator document")->required();
  add_output(rates);

  auto* canon = app.add_subcommand("canonicalize", "Reduce an operator set to canonical form");
  canon->add_option("ops", job.input, "Operator document")->required();
  add_output(canon);

  auto* invert = app.add_subcommand("invert", "Canonical operators from observed rates");
  invert->add_option("rates", job.input, "Rate document")->required();
  invert->add_option("--tol", job.tol, "Pivot tolerance (default 1e-10 * trace G)");
  add_output(invert);

  auto* check = app.add_subcommand("check", "Constraint report for a rate table");
  check->add_option("rates", job.input, "Rate document")->required();
  check->add_option("--tol", job.tol, "Pivot tolerance (default 1e-10 * trace G)");
  add_output(check);

  auto* sim = app.add_subcommand("simulate", "Closed-form trajectory as CSV");
  sim->add_option("--preset", job.preset, "fig2, bell or cluster (two qubits)");
  sim->add_option("--model", job.model_path, "Operator document (levels optional)");
  sim->add_option("--rates", job.rates_path, "Rate document");
  sim->add_option("--state", job.state, "Initial state: plus, bell or cluster");
  sim->add_option("--state-file", job.state_path, "Initial state document");
  sim->add_option("--gamma", job.gamma, "Local rate for presets");
  sim->add_option("--mu", job.mu, "Non-local rate multiplier: Gamma_23 = Gamma_14 = mu Gamma");
  sim->add_option("--gamma14", job.gamma14, "Gamma_14 for bell/cluster presets");
  sim->add_option("--gamma23", job.gamma23, "Gamma_23 for bell/cluster presets");
  sim->add_option("--t-max", job.t_max, "Final time (default 5 / rate scale)");
  sim->add_option("--points", job.points, "Number of time points");
  add_output(sim);

  auto* scan = app.add_subcommand("scan", "Register feasibility map over (mu1, mu2)");
  scan->add_option("--qubits", job.qubits, "Register size");
  scan->add_option("--gamma", job.gamma, "Local rate");
  scan->add_option("--mu1-max", job.mu1_max, "Upper end of the mu1 grid");
  scan->add_option("--mu2-max", job.mu2_max, "Upper end of the mu2 grid");
  scan->add_option("--mu1-points", job.mu1_points, "mu1 grid size");
  scan->add_option("--mu2-points", job.mu2_points, "mu2 grid size");
  scan->add_option("--threads", job.threads, "Worker threads (0 = all cores)");
  scan->add_flag("--legend", job.legend, "Explain first_violated_level on stderr");
  add_output(scan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    check_distinct_paths(job);
    if (rates->parsed()) return cmd_rates(job, out);
    if (canon->parsed()) return cmd_canonicalize(job, out);
    if (invert->parsed()) return cmd_invert(job, out, err);
    if (check->parsed()) return cmd_check(job, out);
    if (sim->parsed()) return cmd_simulate(job, out);
    if (scan->parsed()) return cmd_scan(job, out, err);
  } catch (const InputError& e) {
    err << "dephase: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "dephase: " << e.what() << "\n";
    return kUnexpected;
  }
  return kUnexpected;
}

}  // namespace dephase::cli
