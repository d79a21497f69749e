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

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "omegaflow/format.hpp"
#include "omegaflow/io.hpp"

namespace omegaflow {

SampleTable sample_grids(std::span<const verify::GridSpec> grids) {
  SampleTable table;
  for (const auto& grid : grids) {
    if (grid.axes.size() < 2) throw std::invalid_argument("sample grid needs t and x axes");
    const std::size_t n = grid.axes.size() - 1;
    if (table.n != 0 && table.n != n) {
      throw std::invalid_argument("sample grids disagree on dimension");
    }
    table.n = n;
    for (const auto& p : verify::raw_points(grid)) {
      const double t = p[0];
      const std::span<const double> x(p.data() + 1, n);
      if (t == 0.0 || !field::in_domain(t, x) ||
          (grid.boundary_margin > 0.0 && !verify::passes_margin(p, grid.boundary_margin))) {
        ++table.skipped;
        continue;
      }
      table.rows.push_back(field::sample(t, x));
    }
  }
  return table;
}

void write_csv(std::ostream& out, const SampleTable& table) {
  out << 't';
  for (std::size_t k = 1; k <= table.n; ++k) out << ",x" << k;
  for (std::size_t k = 1; k <= table.n; ++k) out << ",u" << k;
  out << ",rho,div_u,interior\n";
  for (const auto& s : table.rows) {
    out << format_real(s.t);
    for (double v : s.x) out << ',' << format_real(v);
    for (double v : s.u) out << ',' << format_real(v);
    out << ',' << format_real(s.rho) << ',' << format_real(s.div_u) << ','
        << (s.interior ? 1 : 0) << '\n';
  }
  out << "# skipped=" << table.skipped << '\n';
}

void write_json(std::ostream& out, const SampleTable& table) {
  using nlohmann::json;
  const auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  json arr = json::array();
  for (const auto& s : table.rows) {
    json xs = json::array(), us = json::array();
    for (double v : s.x) xs.push_back(num(v));
    for (double v : s.u) us.push_back(num(v));
    arr.push_back({{"t", num(s.t)},
                   {"x", xs},
                   {"u", us},
                   {"rho", num(s.rho)},
                   {"div_u", num(s.div_u)},
                   {"interior", s.interior}});
  }
  out << arr.dump(2) << '\n';
}

SampleTable read_csv(std::istream& in) {
  SampleTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
  std::size_t columns = 1;
  for (char c : line) columns += c == ',' ? 1 : 0;
  if (columns < 6 || (columns - 4) % 2 != 0 || line.rfind("t,", 0) != 0) {
    throw std::runtime_error("read_csv: unexpected header '" + line + "'");
  }
  table.n = (columns - 4) / 2;

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# skipped=";
      if (line.rfind(key, 0) == 0) table.skipped = std::stoull(line.substr(key.size()));
      continue;
    }
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double d;
      if (!parse_real(cell, d)) throw std::runtime_error("read_csv: bad number '" + cell + "'");
      v.push_back(d);
    }
    if (v.size() != columns) throw std::runtime_error("read_csv: ragged row");
    FieldSample s;
    s.t = v[0];
    s.x.assign(v.begin() + 1, v.begin() + 1 + table.n);
    s.u.assign(v.begin() + 1 + table.n, v.begin() + 1 + 2 * table.n);
    s.rho = v[1 + 2 * table.n];
    s.div_u = v[2 + 2 * table.n];
    s.interior = v[3 + 2 * table.n] != 0.0;
    table.rows.push_back(std::move(s));
  }
  return table;
}

}  // namespace omegaflow
