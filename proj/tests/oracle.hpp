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

// Independent reference solvers for the tests. Plain bisection in long double
// on the defining equations, sharing no code with the library.

#pragma once

#include <cmath>
#include <limits>

namespace omegaflow::testing {

template <typename F>
long double bisect(F f, long double lo, long double hi) {
  long double flo = f(lo);
  for (int i = 0; i < 400; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const long double fm = f(mid);
    if (fm == 0.0L) return mid;
    if ((fm < 0.0L) == (flo < 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

// w >= -1 with w e^w = z, for z >= -1/e.
inline long double w0_oracle(long double z) {
  if (z == 0.0L) return 0.0L;
  const long double hi = z <= 1.0L ? 1.0L : std::log(z) + 1.0L;
  return bisect([z](long double w) { return w * std::exp(w) - z; }, -1.0L, hi);
}

// w > 0 with w + ln w = ln_z.
inline long double w0_from_ln_oracle(long double ln_z) {
  const long double hi = std::max(1.0L, ln_z) + 1.0L;
  return bisect([ln_z](long double w) { return w + std::log(w) - ln_z; },
                std::numeric_limits<long double>::min(), hi);
}

// Smaller real root of exp(w) = x w - y (the unique one for x < 0).
inline long double omega_oracle(long double x, long double y) {
  const auto h = [x, y](long double w) { return std::exp(w) - x * w + y; };
  if (x < 0.0L) {
    long double lo = -1.0L, hi = 1.0L;
    while (h(lo) > 0.0L) lo *= 2.0L;
    while (h(hi) < 0.0L) hi *= 2.0L;
    return bisect(h, lo, hi);
  }
  const long double hi = std::log(x);
  long double lo = hi - 1.0L;
  while (h(lo) < 0.0L) lo = hi - 2.0L * (hi - lo);
  return bisect(h, lo, hi);
}

}  // namespace omegaflow::testing
