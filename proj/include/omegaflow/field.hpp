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

#include <span>
#include <vector>

namespace omegaflow {

// One space-time point with every derived field quantity. rho and div_u are
// NaN when the point is in Dom(u) but not in its interior.
struct FieldSample {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> u;
  double rho = 0.0;
  double div_u = 0.0;
  bool interior = false;
};

// The velocity u_k(t, x) = Omega(t, x_k) and density
// rho(t, x) = prod_k 1 / (exp(Omega(t, x_k)) - t) solve the pressureless
// Euler equations and the continuity equation on int Dom(u).
namespace field {

// Every (t, x_k) in Dom(Omega).
bool in_domain(double t, std::span<const double> x);
// Every (t, x_k) in the interior of Dom(Omega).
bool is_interior(double t, std::span<const double> x);

// Throws DomainError naming the first coordinate outside Dom(Omega).
std::vector<double> velocity(double t, std::span<const double> x);

// Interior only. Product for n <= 64, exp of log_density above that.
double density(double t, std::span<const double> x);

struct LogDensity {
  int sign = 1;
  double log_abs = 0.0;
};
LogDensity log_density(double t, std::span<const double> x);

// sum_k d Omega / dy (t, x_k) = -sum_k 1 / (exp(u_k) - t).
double divergence(double t, std::span<const double> x);

// Closed-form d rho / dt and d rho / dx_k.
struct DensityGradient {
  double d_t = 0.0;
  std::vector<double> d_x;
};
DensityGradient density_gradient(double t, std::span<const double> x);

// d u_k / dt + u_k d u_k / dx_k for each k.
std::vector<double> euler_residual(double t, std::span<const double> x);

// Same, summing all n advective terms u_i d u_k / dx_i with the off-diagonal
// derivatives set to exactly zero.
std::vector<double> euler_residual_full(double t, std::span<const double> x);

// d rho / dt + <u, grad rho> + rho div u.
double continuity_residual(double t, std::span<const double> x);

// Throws DomainError if (t, x) is outside Dom(u).
FieldSample sample(double t, std::span<const double> x);

}  // namespace field
}  // namespace omegaflow
