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

#include "omegaflow/omega.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "omegaflow/errors.hpp"
#include "omegaflow/format.hpp"
#include "omegaflow/lambertw.hpp"

namespace omegaflow {

std::string_view to_string(DomainClass c) {
  switch (c) {
    case DomainClass::Interior: return "Interior";
    case DomainClass::Boundary: return "Boundary";
    case DomainClass::Exterior: return "Exterior";
    case DomainClass::InvalidAxis: return "InvalidAxis";
  }
  return "?";
}

namespace omega {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kE = 2.718281828459045;
// Above this exponent the W argument is handled in log form.
constexpr double kLogArgThreshold = 500.0;
// ln(1e-290): below it the W argument is replaced by its first-order value.
const double kLnTinyArg = std::log(1e-290);
// Up to this offset from the branch point, 1 + W is computed directly.
constexpr double kBranchOffsetCutoff = 0.5;
constexpr double kSingularGuard = 1e-8;

std::string point_text(double x, double y) {
  return "(x, y) = (" + format_real(x) + ", " + format_real(y) + ")";
}

[[noreturn]] void throw_outside(const char* where, double x, double y,
                                DomainClass c) {
  throw DomainError(std::string(where) + ": " + point_text(x, y) + " is " +
                    std::string(to_string(c)) + " to Dom(Omega)");
}

void check_guard(const char* where, double x, double y, const Core& core) {
  if (core.domain == DomainClass::Boundary ||
      std::abs(core.denom) < kSingularGuard * std::max(1.0, std::abs(x))) {
    throw SingularBoundary(std::string(where) + ": " + point_text(x, y) +
                           " is on or too close to the boundary of Dom(Omega)");
  }
}

}  // namespace

double boundary_curve(double x) { return x * (std::log(x) - 1.0); }

double relative_boundary_distance(double x, double y) {
  if (x < 0.0) return std::numeric_limits<double>::infinity();
  const double b = boundary_curve(x);
  return (b - y) / std::max(std::abs(b), 1.0);
}

DomainClass classify_domain(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("classify_domain: non-finite " + point_text(x, y));
  }
  if (x == 0.0) return DomainClass::InvalidAxis;
  if (x < 0.0) return DomainClass::Interior;
  const double b = boundary_curve(x);
  const double tol = 64.0 * kEps * std::max({std::abs(y), std::abs(b), 1.0});
  if (std::abs(y - b) <= tol) return DomainClass::Boundary;
  return y < b ? DomainClass::Interior : DomainClass::Exterior;
}

Core omega_core(double x, double y) {
  const DomainClass c = classify_domain(x, y);
  if (c == DomainClass::Exterior || c == DomainClass::InvalidAxis) {
    throw_outside("omega", x, y, c);
  }
  if (c == DomainClass::Boundary) return {std::log(x), 0.0, c};

  const double q = y / x;
  if (!std::isfinite(q)) {
    throw DomainError("omega: y/x overflows at " + point_text(x, y));
  }

  if (x < 0.0) {
    // W argument -(1/x) e^q = exp(ln_arg) > 0. With W + ln W = ln_arg,
    // Omega = q - W = ln(-x) + ln W, which avoids cancelling q against W.
    const double ln_arg = q - std::log(-x);
    if (ln_arg < kLnTinyArg) {
      const double w = std::exp(ln_arg);
      return {q - w, -x * (1.0 + w), c};
    }
    const double w = ln_arg > kLogArgThreshold ? lambertw::w0_from_ln(ln_arg)
                                               : lambertw::w0(std::exp(ln_arg));
    return {std::log(-x) + std::log(w), -x * (1.0 + w), c};
  }

  // x > 0: W argument -exp(ln_mag) lies in [-1/e, 0).
  const double ln_mag = q - std::log(x);
  if (ln_mag < kLnTinyArg) {
    const double arg = -std::exp(ln_mag);
    return {q - arg, -x * (1.0 + arg), c};
  }
  // ln_mag + 1 with the rounding of y/x restored from its fma remainder; near
  // (1, -1) that rounding would otherwise dominate the cancellation.
  const double q_rem = std::fma(-q, x, y) / x;
  const double s = ((q + 1.0) - std::log(x)) + q_rem;
  const double delta = std::max(0.0, -std::expm1(s));
  if (delta <= kBranchOffsetCutoff) {
    // exp(Omega) = -x W gives Omega = ln x + ln(1 - (1 + W)).
    const double v = lambertw::w0_branch_offset(delta);
    return {std::log(x) + std::log1p(-v), -x * v, c};
  }
  const double w = lambertw::w0(-std::exp(ln_mag));
  return {q - w, -x * (1.0 + w), c};
}

double omega(double x, double y) { return omega_core(x, y).value; }

Partials omega_partials(double x, double y) {
  const Core core = omega_core(x, y);
  check_guard("omega_partials", x, y, core);
  return {core.value / core.denom, -1.0 / core.denom};
}

OmegaValue evaluate(double x, double y) {
  const Core core = omega_core(x, y);
  check_guard("evaluate", x, y, core);
  return {core.value, core.value / core.denom, -1.0 / core.denom, core.denom};
}

double functional_residual(double x, double y) {
  const double w = omega(x, y);
  return std::exp(w) - (x * w - y);
}

double pde_residual_analytic(double x, double y) {
  const OmegaValue v = evaluate(x, y);
  return v.d1 + v.value * v.d2;
}

double locus_zero(double x) {
  if (!std::isfinite(x)) throw DomainError("locus_zero: non-finite x");
  if (x == 0.0) throw_outside("locus_zero", x, -1.0, DomainClass::InvalidAxis);
  if (x > 0.0 && x < 1.0) {
    throw DomainError("locus_zero: for 0 < x < 1, Omega(x, -1) is the root of "
                      "exp(w) = x w + 1 below 0, not 0 (x = " +
                      format_real(x) + ")");
  }
  return -1.0;
}

double locus_boundary(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("locus_boundary: requires finite x > 0, got " +
                      format_real(x));
  }
  return boundary_curve(x);
}

double locus_log_level(double c, double x) {
  if (!std::isfinite(c) || !std::isfinite(x) || std::abs(c) > 700.0) {
    throw DomainError("locus_log_level: requires finite x and |C| <= 700");
  }
  if (x == 0.0) {
    throw_outside("locus_log_level", x, 0.0, DomainClass::InvalidAxis);
  }
  const double one_plus_emc = 1.0 + std::exp(-c);
  double w;
  if (x < 0.0) {
    const double ln_arg = std::log(one_plus_emc) - std::log(-x);
    w = lambertw::w0_from_ln(ln_arg);
  } else {
    // e * arg + 1 = 1 - x_min / x with x_min = e (1 + e^-C).
    const double x_min = kE * one_plus_emc;
    const double delta = (x - x_min) / x;
    if (delta < 0.0) {
      throw DomainError("locus_log_level: for x > 0 requires x >= e (1 + e^-C) = " +
                        format_real(x_min) + ", got x = " + format_real(x));
    }
    w = lambertw::w0_branch_offset(delta) - 1.0;
  }
  const double y = -x / (1.0 + std::exp(c)) * w;
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw VerificationError("locus_log_level: non-positive or non-finite y at C = " +
                            format_real(c) + ", x = " + format_real(x));
  }

  const DomainClass cls = classify_domain(x, y);
  if (cls == DomainClass::Exterior || cls == DomainClass::InvalidAxis) {
    throw VerificationError("locus_log_level: " + point_text(x, y) + " left Dom(Omega)");
  }
  const double err = std::abs(omega(x, y) - (c + std::log(y)));
  const double tol = 1e-8 * std::max({1.0, std::abs(c), std::abs(std::log(y))});
  if (!(err <= tol)) {
    throw VerificationError("locus_log_level: substitution misses by " +
                            format_real(err) + " at C = " + format_real(c) +
                            ", x = " + format_real(x));
  }
  return y;
}

}  // namespace omega
}  // namespace omegaflow
