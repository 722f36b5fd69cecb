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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dephase/canonical.h"
#include "dephase/core_model.h"
#include "dephase/feasibility.h"

namespace dephase::io {

using Json = nlohmann::ordered_json;

/// %.17g; lossless for doubles.
std::string format_number(double v);

/// Pretty JSON with every floating-point value written by format_number.
/// Arrays of scalars stay on one line.
std::string dump_json(const Json& doc);

/// Parses JSON text. Errors become InputError prefixed with `source` and
/// carrying the parser's line/column.
Json parse_json(std::string_view text, std::string_view source);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Operator documents:
//   {"dims": N, "levels": [l1, ...]?, "operators": [[[re, im], ...N], ...]}
// Canonical documents add "dH" and "leading_levels" and are readable as
// operator documents.
DephasingModel model_from_json(const Json& doc);
Json model_to_json(const DephasingModel& model);
Json canonical_to_json(const CanonicalSet& cs);

// Rate documents, 1-based level pairs with m < n; omitted pairs are zero:
//   {"dims": N, "gamma": [[m, n, value], ...], "dshift": [[m, n, value], ...]}
RateTable rates_from_json(const Json& doc);
Json rates_to_json(const RateTable& rates);

Json report_to_json(const ConstraintReport& report);

// State documents: {"dims": N, "rho": [[[re, im], ...], ...]} (row-major).
DensityMatrix state_from_json(const Json& doc);

}  // namespace dephase::io
