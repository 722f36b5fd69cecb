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

#include "dephase/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dephase/errors.h"

namespace dephase::io {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) field_error("<root>", "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) field_error(key, "missing");
  return *it;
}

double as_number(const Json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "expected a number, got " + v.dump());
  const double d = v.get<double>();
  if (!std::isfinite(d)) field_error(field, "not finite");
  return d;
}

Complex as_complex(const Json& v, const std::string& field) {
  if (v.is_number()) return {as_number(v, field), 0.0};
  if (!v.is_array() || v.size() != 2) {
    field_error(field, "expected [re, im] pair, got " + v.dump());
  }
  return {as_number(v[0], field + "[0]"), as_number(v[1], field + "[1]")};
}

Index read_dims(const Json& doc) {
  const Json& d = require(doc, "dims");
  if (!d.is_number_integer() || d.get<long long>() < 2 || d.get<long long>() > 4096) {
    field_error("dims", "expected an integer level count >= 2, got " + d.dump());
  }
  return static_cast<Index>(d.get<long long>());
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json operators_to_json(const ComplexMatrix& coeffs) {
  Json ops = Json::array();
  for (Index k = 0; k < coeffs.cols(); ++k) {
    Json col = Json::array();
    for (Index n = 0; n < coeffs.rows(); ++n) col.push_back(complex_to_json(coeffs(n, k)));
    ops.push_back(std::move(col));
  }
  return ops;
}

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

void dump_value(const Json& v, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<size_t>(indent + 1) * 2, ' ');
  if (v.is_number_float()) {
    os << format_number(v.get<double>());
  } else if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      dump_value(it.value(), os, indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (v.is_array()) {
    // One line for scalars and for rows of [re, im] pairs.
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) {
      return is_scalar(e) ||
             (e.is_array() && e.size() <= 2 && std::all_of(e.begin(), e.end(), is_scalar));
    });
    if (v.empty()) {
      os << "[]";
    } else if (flat) {
      os << "[";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        dump_value(v[i], os, indent + 1);
      }
      os << "]";
    } else {
      os << "[\n";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        dump_value(v[i], os, indent + 1);
      }
      os << "\n" << pad << "]";
    }
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string dump_json(const Json& doc) {
  std::ostringstream os;
  dump_value(doc, os, 0);
  os << "\n";
  return os.str();
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

DephasingModel model_from_json(const Json& doc) {
  const Index n = read_dims(doc);
  const Json& ops = require(doc, "operators");
  if (!ops.is_array()) field_error("operators", "expected a list of operators");
  ComplexMatrix coeffs(n, static_cast<Index>(ops.size()));
  for (size_t k = 0; k < ops.size(); ++k) {
    const std::string field = "operators[" + std::to_string(k) + "]";
    if (!ops[k].is_array() || static_cast<Index>(ops[k].size()) != n) {
      field_error(field, "expected " + std::to_string(n) + " diagonal entries");
    }
    for (Index m = 0; m < n; ++m) {
      coeffs(m, static_cast<Index>(k)) =
          as_complex(ops[k][static_cast<size_t>(m)], field + "[" + std::to_string(m) + "]");
    }
  }
  RealVector levels = RealVector::Zero(n);
  if (doc.contains("levels")) {
    const Json& lv = doc["levels"];
    if (!lv.is_array() || static_cast<Index>(lv.size()) != n) {
      field_error("levels", "expected " + std::to_string(n) + " level energies");
    }
    for (Index m = 0; m < n; ++m) {
      levels(m) = as_number(lv[static_cast<size_t>(m)], "levels[" + std::to_string(m) + "]");
    }
  }
  return DephasingModel(std::move(levels), DiagonalOperatorSet(std::move(coeffs)));
}

Json model_to_json(const DephasingModel& model) {
  Json doc;
  doc["dims"] = model.dims();
  Json levels = Json::array();
  for (Index n = 0; n < model.dims(); ++n) levels.push_back(model.levels(n));
  doc["levels"] = std::move(levels);
  doc["operators"] = operators_to_json(model.ops.coeffs());
  return doc;
}

Json canonical_to_json(const CanonicalSet& cs) {
  Json doc;
  doc["dims"] = cs.dims();
  doc["operators"] = operators_to_json(cs.coeffs());
  Json dh = Json::array();
  for (Index n = 0; n < cs.dims(); ++n) dh.push_back(cs.hamiltonian_shift()(n));
  doc["dH"] = std::move(dh);
  Json lead = Json::array();
  for (Index k = 0; k < cs.size(); ++k) lead.push_back(cs.leading_level(k) + 1);
  doc["leading_levels"] = std::move(lead);
  return doc;
}

RateTable rates_from_json(const Json& doc) {
  const Index n = read_dims(doc);
  RealMatrix gamma = RealMatrix::Zero(n, n);
  RealMatrix dshift = RealMatrix::Zero(n, n);
  auto read_pairs = [&](const char* key, RealMatrix& target, bool symmetric) {
    if (!doc.contains(key)) return;
    const Json& list = doc[key];
    if (!list.is_array()) field_error(key, "expected a list of [m, n, value] triples");
    for (size_t i = 0; i < list.size(); ++i) {
      const std::string field = std::string(key) + "[" + std::to_string(i) + "]";
      const Json& e = list[i];
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        field_error(field, "expected [m, n, value] with integer levels");
      }
      const long long m = e[0].get<long long>();
      const long long l = e[1].get<long long>();
      if (m < 1 || l > n || m >= l) {
        field_error(field, "levels must satisfy 1 <= m < n <= " + std::to_string(n));
      }
      const double v = as_number(e[2], field + "[2]");
      target(m - 1, l - 1) = v;
      target(l - 1, m - 1) = symmetric ? v : -v;
    }
  };
  read_pairs("gamma", gamma, true);
  read_pairs("dshift", dshift, false);
  return RateTable(std::move(gamma), std::move(dshift));
}

Json rates_to_json(const RateTable& rates) {
  Json doc;
  doc["dims"] = rates.dims();
  Json gamma = Json::array();
  Json dshift = Json::array();
  for (Index m = 0; m < rates.dims(); ++m) {
    for (Index l = m + 1; l < rates.dims(); ++l) {
      gamma.push_back(Json::array({m + 1, l + 1, rates.gamma(m, l)}));
      dshift.push_back(Json::array({m + 1, l + 1, rates.dshift(m, l)}));
    }
  }
  doc["gamma"] = std::move(gamma);
  doc["dshift"] = std::move(dshift);
  return doc;
}

Json report_to_json(const ConstraintReport& report) {
  Json doc;
  doc["feasible"] = report.feasible;
  doc["tol"] = report.tol;
  Json pivots = Json::array();
  for (size_t i = 0; i < report.pivots.size(); ++i) {
    pivots.push_back(Json::array({static_cast<int>(i) + 2, report.pivots[i]}));
  }
  doc["pivots"] = std::move(pivots);
  doc["violated_levels"] = report.violated_levels;
  doc["boundary_levels"] = report.boundary_levels;
  doc["residual_levels"] = report.residual_levels;
  Json deficits = Json::array();
  for (const int level : report.violated_levels) {
    deficits.push_back(Json::array({level, -report.pivot(level)}));
  }
  doc["deficits"] = std::move(deficits);
  doc["note"] = "pivots and deficits are [level, value]; deficit = -pivot";
  return doc;
}

DensityMatrix state_from_json(const Json& doc) {
  const Index n = read_dims(doc);
  const Json& rho = require(doc, "rho");
  if (!rho.is_array() || static_cast<Index>(rho.size()) != n) {
    field_error("rho", "expected " + std::to_string(n) + " rows");
  }
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = rho[static_cast<size_t>(i)];
    const std::string field = "rho[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      field_error(field, "expected " + std::to_string(n) + " entries");
    }
    for (Index j = 0; j < n; ++j) {
      m(i, j) = as_complex(row[static_cast<size_t>(j)], field + "[" + std::to_string(j) + "]");
    }
  }
  return DensityMatrix(std::move(m));
}

}  // namespace dephase::io
