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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omegaflow::verify {

enum class Suite {
  FunctionalEq,
  OmegaPDE,
  EulerAnalytic,
  ContinuityAnalytic,
  EulerFD,
  ContinuityFD,
  Loci,
  DivergenceWitness,
};

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::span<const Suite> all_suites();

enum class SamplingMode { Linspace, Random };

// A count of 1 pins the axis to min (min must equal max).
struct Axis {
  double min = 0.0;
  double max = 0.0;
  int count = 2;
};

// Axis 0 is Omega's first argument (t for field suites, x for Omega suites);
// the remaining axes are the second argument of each coordinate. For Loci the
// second axis is the level C instead.
struct GridSpec {
  std::vector<Axis> axes;
  double boundary_margin = 1e-3;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::Linspace;
};

// Throws std::invalid_argument when an axis is malformed.
void validate(const GridSpec& grid);

// Unfiltered points in row-major order (last axis fastest). Random mode draws
// the product of the counts uniformly from the box.
std::vector<std::vector<double>> raw_points(const GridSpec& grid);

// Axis 0 nonzero and, where it is positive, every other coordinate at relative
// boundary distance >= margin.
bool passes_margin(std::span<const double> point, double margin);

// raw_points filtered by passes_margin.
std::vector<std::vector<double>> grid_points(const GridSpec& grid);

struct ResidualReport {
  std::string suite;
  std::size_t n_points = 0;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  std::vector<double> worst_point;
  std::optional<double> order_estimate;
  double tolerance = 0.0;
  bool pass = false;
  // Human-readable remarks (skipped sequence points, failed stencils).
  std::vector<std::string> notes;
};

// Scalar field of m variables.
using ScalarField = std::function<double(std::span<const double>)>;

// (f(p + h e_axis) - f(p - h e_axis)) / (2 h).
double fd_partial(const ScalarField& f, std::span<const double> point,
                  std::size_t axis, double h);

// eps^(1/3) max(|coordinate|, 1).
double default_step(double coordinate);

// log2(e(h0) / e(h0 / 2)) clamped to [-10, 10]. Throws DegenerateResidual when
// both errors are below 1e-14.
double convergence_order(const std::function<double(double)>& error_at_step,
                         double h0);

// Finite-difference targets with a closed form to measure against. The step on
// axis i is h0 max(|p_i|, 1); the error is the largest |FD - closed form| over
// the target's derivatives.
enum class FdTarget { OmegaD1, OmegaD2, EulerFD, ContinuityFD };
double convergence_order(FdTarget target, std::span<const double> point,
                         double h0);

// Per-point scaled residual of a suite. Throws what the evaluation throws.
double point_residual(Suite suite, std::span<const double> point);

// Evaluates the suite at every filtered grid point. pass is max_abs <= tol,
// except DivergenceWitness where it is max_abs >= tol. FD suites carry a
// step-halving order estimate at the worst point. Throws EmptyGrid.
ResidualReport run_suite(Suite suite, const GridSpec& grid, double tol);
ResidualReport run_suite(Suite suite, std::span<const GridSpec> grids,
                         double tol);

// Omega along x = -10^-k, +10^-k and +-10^k (k = 1..k_max) for each y,
// checking the monotone trend toward each limit:
//   x -> 0-, y > 0:  Omega <= -1e3 by k_max
//   x -> 0-, y = 0:  Omega = -W0(10^k) <= -k_max ln(10) / 2 by k_max
//   x -> 0-, y < 0:  |Omega - ln(-y)| <= tol by k_max
//   x -> 0+, y < 0:  Omega <= -1e3 by k_max (points outside Dom skipped)
//   x -> +-inf:      |Omega| <= tol by k_max
// A broken trend scores +inf. Requires k_max >= 4.
ResidualReport limit_checks(std::span<const double> y_samples, int k_max,
                            double tol = 1e-6);

double default_tolerance(Suite suite);

// Default grids: t in [-10, -0.1] and [1.5, 10], second arguments in
// [-10, 10], 33 points per axis, margin 1e-3; n spatial axes for field suites.
std::vector<GridSpec> default_preset(Suite suite, int n = 2);

std::vector<double> default_limit_samples();
constexpr int kDefaultLimitKMax = 8;

// Pairwise sum in a fixed order.
double pairwise_sum(std::span<const double> values);

}  // namespace omegaflow::verify
