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

#include "omegaflow/format.hpp"
#include "omegaflow/lambertw.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "omegaflow/errors.hpp"

namespace omegaflow::lambertw {
namespace {

constexpr double kE = 2.718281828459045;
// 1/e = kInvEHi + kInvELo to about 2^-108.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 40;

// Below this, w0 uses the branch series with no refinement.
constexpr double kSeriesOnlyCutoff = 1e-12;
// Below this, the series seeds a Halley iteration in 1 + w.
constexpr double kSeriesSeedCutoff = 0.04;
// Above this, w0_from_ln switches to the logarithmic iteration.
constexpr double kLogFormThreshold = 500.0;

// Coefficients of 1 + W0 = sum_k mu_k p^k, k >= 1, p = sqrt(2 (e z + 1)).
constexpr std::array<double, 23> kBranchSeries = {
    1.0,
    -0.3333333333333333,
    0.1527777777777778,
    -0.07962962962962963,
    0.044502314814814814,
    -0.02598471487360376,
    0.01563563253233392,
    -0.009616892024299432,
    0.006014543252956118,
    -0.0038112980348919993,
    0.0024408779911439826,
    -0.0015769303446867841,
    0.0010262633205076071,
    -0.0006720616311561362,
    0.0004424730618146209,
    -0.00029267722472962746,
    0.00019438727605453933,
    -0.00012957426685274883,
    8.665035805208128e-05,
    -5.811360750441382e-05,
    3.907668486743905e-05,
    -2.63380647472311e-05,
    1.7790345805079586e-05,
};

double clamp_limit() {
  double lim = -kInvEHi;
  for (int i = 0; i < 4; ++i) lim = std::nextafter(lim, -1.0);
  return lim;
}

// 1 + W0 from the series, given delta = e z + 1 >= 0.
double series_one_plus_w(double delta) {
  const double p = std::sqrt(2.0 * delta);
  double acc = 0.0;
  for (auto it = kBranchSeries.rbegin(); it != kBranchSeries.rend(); ++it) {
    acc = acc * p + *it;
  }
  return acc * p;
}

// h(v) = 1 + (v - 1) e^v, so that h(1 + W0(z)) = e z + 1. The power series
// has only positive terms, which keeps full relative precision for small v.
double branch_h(double v) {
  if (v > 0.5) return 1.0 + (v - 1.0) * std::exp(v);
  double term = v;  // v^k / k!, starting at k = 1
  double sum = 0.0;
  for (int k = 2; k < 60; ++k) {
    term *= v / k;
    const double add = (k - 1) * term;
    sum += add;
    if (add <= kEps * sum) break;
  }
  return sum;
}

[[noreturn]] void fail_to_converge(const char* where, double arg) {
  throw NonConvergence(std::string(where) + ": no convergence for argument " +
                       format_real(arg));
}

// Seed for the Halley iteration on w e^w = z, for e z + 1 > 0.04.
double initial_guess(double z) {
  if (z <= 4.0) {
    const double l = std::log1p(z);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l1 = std::log(z);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double branch_offset(double z) { return kE * ((z + kInvEHi) + kInvELo); }

double w0_branch_series(double z) {
  const double delta = branch_offset(z);
  if (delta <= 0.0) return -1.0;
  return series_one_plus_w(delta) - 1.0;
}

double w0_branch_offset(double delta) {
  if (std::isnan(delta)) throw DomainError("w0_branch_offset: NaN argument");
  if (delta <= 0.0) {
    if (delta >= -4.0 * kE * kEps * kInvEHi) return 0.0;
    throw DomainError("w0_branch_offset: argument below the branch point");
  }
  if (delta > kSeriesSeedCutoff) {
    return 1.0 + w0((delta - 1.0) / kE);
  }
  double v = series_one_plus_w(delta);
  if (delta <= kSeriesOnlyCutoff) return v;

  // Halley on g(v) = h(v) - delta with g' = v e^v, g'' = (v + 1) e^v.
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ev = std::exp(v);
    const double g = branch_h(v) - delta;
    const double g1 = v * ev;
    const double g2 = (v + 1.0) * ev;
    const double step = g / (g1 - 0.5 * g * g2 / g1);
    v -= step;
    if (std::abs(step) <= 2.0 * kEps * std::abs(v)) return v;
  }
  fail_to_converge("w0_branch_offset", delta);
}

double w0(double z) {
  if (std::isnan(z)) throw DomainError("w0: NaN argument");
  if (z == std::numeric_limits<double>::infinity()) return z;
  if (z == 0.0) return 0.0;
  if (z < -kInvEHi) {
    static const double limit = clamp_limit();
    if (z < limit) {
      throw DomainError("w0: argument " + format_real(z) +
                        " is below -1/e");
    }
    return -1.0;
  }
  const double delta = branch_offset(z);
  if (delta <= 0.0) return -1.0;
  if (delta <= kSeriesSeedCutoff) return w0_branch_offset(delta) - 1.0;

  double w = initial_guess(z);
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 2.0 * kEps * (1.0 + std::abs(w))) return w;
  }
  fail_to_converge("w0", z);
}

double w0_from_ln(double ln_z) {
  if (std::isnan(ln_z)) throw DomainError("w0_from_ln: NaN argument");
  if (ln_z == std::numeric_limits<double>::infinity()) return ln_z;
  if (ln_z <= kLogFormThreshold) return w0(std::exp(ln_z));

  // Halley on g(w) = w + ln w - ln_z; g' = 1 + 1/w, g'' = -1/w^2.
  const double l2 = std::log(ln_z);
  double w = ln_z - l2 + l2 / ln_z;
  for (int i = 0; i < kMaxIterations; ++i) {
    const double g = w + std::log(w) - ln_z;
    const double g1 = 1.0 + 1.0 / w;
    const double g2 = -1.0 / (w * w);
    const double step = g / (g1 - 0.5 * g * g2 / g1);
    w -= step;
    if (std::abs(step) <= 2.0 * kEps * (1.0 + std::abs(w))) return w;
  }
  fail_to_converge("w0_from_ln", ln_z);
}

}  // namespace omegaflow::lambertw
