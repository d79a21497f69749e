// Copyright 2026 The Omegaflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "omegaflow/field.hpp"
#include "omegaflow/verify.hpp"

namespace omegaflow {

// ResidualReport as a JSON object with keys suite, n_points, max_abs,
// mean_abs, worst_point, order_estimate (null when absent), tolerance, pass.
// Non-finite numbers are written as null.
std::string report_to_json(const verify::ResidualReport& report);
std::string reports_to_json(std::span<const verify::ResidualReport> reports);
verify::ResidualReport report_from_json(const std::string& text);

// Field samples over a set of grids. Points outside Dom(u) or inside the
// boundary margin are skipped and counted.
struct SampleTable {
  std::size_t n = 0;
  std::vector<FieldSample> rows;
  std::size_t skipped = 0;
};

SampleTable sample_grids(std::span<const verify::GridSpec> grids);

// Header t,x1..xn,u1..un,rho,div_u,interior; one row per sample; a final
// "# skipped=<m>" line.
void write_csv(std::ostream& out, const SampleTable& table);
// Array of {t, x, u, rho, div_u, interior} objects.
void write_json(std::ostream& out, const SampleTable& table);
// Parses write_csv output. Throws std::runtime_error on malformed input.
SampleTable read_csv(std::istream& in);

}  // namespace omegaflow
