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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "omegaflow/io.hpp"

namespace omegaflow {
namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const verify::ResidualReport& r) {
  json worst = json::array();
  for (double v : r.worst_point) worst.push_back(number(v));
  return json{
      {"suite", r.suite},
      {"n_points", r.n_points},
      {"max_abs", number(r.max_abs)},
      {"mean_abs", number(r.mean_abs)},
      {"worst_point", worst},
      {"order_estimate", r.order_estimate ? number(*r.order_estimate) : json(nullptr)},
      {"tolerance", number(r.tolerance)},
      {"pass", r.pass},
  };
}

double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

std::string report_to_json(const verify::ResidualReport& report) {
  return to_json(report).dump(2);
}

std::string reports_to_json(std::span<const verify::ResidualReport> reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2);
}

verify::ResidualReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  verify::ResidualReport r;
  r.suite = j.at("suite").get<std::string>();
  r.n_points = j.at("n_points").get<std::size_t>();
  r.max_abs = read_number(j.at("max_abs"));
  r.mean_abs = read_number(j.at("mean_abs"));
  for (const auto& v : j.at("worst_point")) r.worst_point.push_back(read_number(v));
  if (!j.at("order_estimate").is_null()) r.order_estimate = j["order_estimate"].get<double>();
  r.tolerance = read_number(j.at("tolerance"));
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace omegaflow
