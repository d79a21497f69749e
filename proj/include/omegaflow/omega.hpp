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

#include <string_view>

namespace omegaflow {

// Position of (x, y) relative to Dom(Omega) = {x < 0} u {x > 0, y <= x ln(x/e)}.
enum class DomainClass { Interior, Boundary, Exterior, InvalidAxis };

std::string_view to_string(DomainClass c);

// Omega with the pieces needed for its derivatives.
struct OmegaValue {
  double value = 0.0;
  double d1 = 0.0;     // d Omega / dx
  double d2 = 0.0;     // d Omega / dy
  double denom = 0.0;  // exp(Omega) - x
};

namespace omega {

// Omega evaluated without derivatives. `denom` is exp(Omega) - x, obtained
// as -x (1 + W) so it keeps relative precision next to the boundary, where
// it vanishes.
struct Core {
  double value = 0.0;
  double denom = 0.0;
  DomainClass domain = DomainClass::Interior;
};

// y = x ln(x/e), the upper edge of the domain for x > 0.
double boundary_curve(double x);

// (b - y) / max(|b|, 1) with b = boundary_curve(x); +inf for x < 0.
double relative_boundary_distance(double x, double y);

// Boundary when |y - b| <= 64 eps max(|y|, |b|, 1). Throws DomainError for
// non-finite input.
DomainClass classify_domain(double x, double y);

// Omega(x, y) = y/x - W0(-(1/x) exp(y/x)), the smaller real root w of
// exp(w) = x w - y. Returns exactly ln x on the Boundary. Throws DomainError
// outside the domain.
double omega(double x, double y);
Core omega_core(double x, double y);

// (d1, d2) = (Omega, -1) / (exp(Omega) - x). Interior points only; throws
// SingularBoundary when |exp(Omega) - x| < 1e-8 max(1, |x|).
struct Partials {
  double d1 = 0.0;
  double d2 = 0.0;
};
Partials omega_partials(double x, double y);
OmegaValue evaluate(double x, double y);

// exp(Omega) - (x Omega - y).
double functional_residual(double x, double y);

// d1 + Omega d2 from the closed-form partials.
double pde_residual_analytic(double x, double y);

// y = -1, where Omega vanishes. That holds for x < 0 and x >= 1 only; for
// 0 < x < 1 the line x w + 1 meets exp(w) at a negative root smaller than 0,
// so the locus is rejected with DomainError.
double locus_zero(double x);

// y = x ln(x/e), where Omega = ln x. Requires x > 0.
double locus_boundary(double x);

// y with Omega(x, y) = C + ln y:
//   y = -(x / (1 + e^C)) W0(-(1 + e^-C) / x).
// Requires x < 0 or x >= e (1 + e^-C). The result is substituted back and
// VerificationError is thrown if Omega(x, y) misses C + ln y.
double locus_log_level(double c, double x);

}  // namespace omega
}  // namespace omegaflow
