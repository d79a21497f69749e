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

#include "omegaflow/field.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "omegaflow/errors.hpp"
#include "omegaflow/format.hpp"
#include "omegaflow/omega.hpp"

namespace omegaflow::field {
namespace {

constexpr std::size_t kDirectProductLimit = 64;

std::string coord_text(double t, std::span<const double> x, std::size_t k) {
  return "coordinate k=" + std::to_string(k + 1) + ": (t, x_k) = (" +
         format_real(t) + ", " + format_real(x[k]) + ")";
}

void require_nonempty(const char* where, std::span<const double> x) {
  if (x.empty()) throw DomainError(std::string(where) + ": dimension n must be >= 1");
}

omega::Core core_at(const char* where, double t, std::span<const double> x,
                    std::size_t k) {
  try {
    return omega::omega_core(t, x[k]);
  } catch (const DomainError&) {
    const DomainClass c = omega::classify_domain(t, x[k]);
    throw DomainError(std::string(where) + ": " + coord_text(t, x, k) + " is " +
                      std::string(to_string(c)) + " to Dom(Omega)");
  }
}

// Per-coordinate value, derivatives and 1/(exp(u_k) - t), interior only.
struct Coord {
  double u;
  double d1;
  double d2;
  double inv_denom;
};

std::vector<Coord> interior_coords(const char* where, double t,
                                   std::span<const double> x) {
  require_nonempty(where, x);
  std::vector<Coord> out;
  out.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const omega::Core c = core_at(where, t, x, k);
    if (c.domain == DomainClass::Boundary ||
        std::abs(c.denom) < 1e-8 * std::max(1.0, std::abs(t))) {
      throw SingularBoundary(std::string(where) + ": " + coord_text(t, x, k) +
                             " is on or too close to the boundary of Dom(u)");
    }
    out.push_back({c.value, c.value / c.denom, -1.0 / c.denom, 1.0 / c.denom});
  }
  return out;
}

}  // namespace

bool in_domain(double t, std::span<const double> x) {
  for (double xk : x) {
    const DomainClass c = omega::classify_domain(t, xk);
    if (c == DomainClass::Exterior || c == DomainClass::InvalidAxis) return false;
  }
  return !x.empty();
}

bool is_interior(double t, std::span<const double> x) {
  for (double xk : x) {
    if (omega::classify_domain(t, xk) != DomainClass::Interior) return false;
  }
  return !x.empty();
}

std::vector<double> velocity(double t, std::span<const double> x) {
  require_nonempty("velocity", x);
  std::vector<double> u(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) u[k] = core_at("velocity", t, x, k).value;
  return u;
}

LogDensity log_density(double t, std::span<const double> x) {
  LogDensity out;
  for (const Coord& c : interior_coords("log_density", t, x)) {
    if (c.inv_denom < 0.0) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(c.inv_denom));
  }
  return out;
}

double density(double t, std::span<const double> x) {
  if (x.size() > kDirectProductLimit) {
    const LogDensity ld = log_density(t, x);
    return ld.sign * std::exp(ld.log_abs);
  }
  double rho = 1.0;
  for (const Coord& c : interior_coords("density", t, x)) rho *= c.inv_denom;
  return rho;
}

double divergence(double t, std::span<const double> x) {
  double div = 0.0;
  for (const Coord& c : interior_coords("divergence", t, x)) div += c.d2;
  return div;
}

DensityGradient density_gradient(double t, std::span<const double> x) {
  const auto coords = interior_coords("density_gradient", t, x);
  double rho = 1.0;
  for (const Coord& c : coords) rho *= c.inv_denom;
  DensityGradient g;
  g.d_x.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Coord& c = coords[i];
    const double eu = std::exp(c.u);
    g.d_t += -c.inv_denom * (c.d1 * eu - 1.0);
    g.d_x[i] = rho * -c.inv_denom * c.d2 * eu;
  }
  g.d_t *= rho;
  return g;
}

std::vector<double> euler_residual(double t, std::span<const double> x) {
  const auto coords = interior_coords("euler_residual", t, x);
  std::vector<double> r(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    r[k] = coords[k].d1 + coords[k].u * coords[k].d2;
  }
  return r;
}

std::vector<double> euler_residual_full(double t, std::span<const double> x) {
  const auto coords = interior_coords("euler_residual_full", t, x);
  const std::size_t n = coords.size();
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    double advect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double du_k_dx_i = i == k ? coords[k].d2 : 0.0;
      advect += coords[i].u * du_k_dx_i;
    }
    r[k] = coords[k].d1 + advect;
  }
  return r;
}

double continuity_residual(double t, std::span<const double> x) {
  const auto coords = interior_coords("continuity_residual", t, x);
  double rho = 1.0;
  for (const Coord& c : coords) rho *= c.inv_denom;

  double drho_dt = 0.0;
  double advect = 0.0;
  double div = 0.0;
  for (const Coord& c : coords) {
    const double eu = std::exp(c.u);
    drho_dt += -c.inv_denom * (c.d1 * eu - 1.0);
    advect += c.u * (rho * -c.inv_denom * c.d2 * eu);
    div += c.d2;
  }
  return rho * drho_dt + advect + rho * div;
}

FieldSample sample(double t, std::span<const double> x) {
  FieldSample s;
  s.t = t;
  s.x.assign(x.begin(), x.end());
  s.u = velocity(t, x);
  s.interior = is_interior(t, x);
  if (s.interior) {
    try {
      s.rho = density(t, x);
      s.div_u = divergence(t, x);
    } catch (const SingularBoundary&) {
      s.interior = false;
    }
  }
  if (!s.interior) {
    s.rho = std::numeric_limits<double>::quiet_NaN();
    s.div_u = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

}  // namespace omegaflow::field
