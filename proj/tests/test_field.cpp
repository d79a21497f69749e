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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "omegaflow/errors.hpp"
#include "omegaflow/field.hpp"
#include "omegaflow/omega.hpp"
#include "oracle.hpp"

using namespace omegaflow;
using V = std::vector<double>;

namespace {

double oracle(double x, double y) {
  return static_cast<double>(testing::omega_oracle(x, y));
}

// Random interior point of dimension n with t on the requested side.
struct FieldGen {
  std::mt19937_64 rng{99};
  std::pair<double, V> next(std::size_t n, bool positive_t) {
    std::uniform_real_distribution<double> ut(0.1, 10.0), ux(-10.0, 10.0);
    const double t = positive_t ? ut(rng) : -ut(rng);
    V x(n);
    for (auto& xk : x) {
      do {
        xk = ux(rng);
      } while (omega::relative_boundary_distance(t, xk) < 1e-2);
    }
    return {t, x};
  }
};

}  // namespace

TEST_CASE("velocity") {
  const V u1 = field::velocity(-1, V{-1, -1});
  CHECK(std::abs(u1[0]) <= 1e-15);
  CHECK(std::abs(u1[1]) <= 1e-15);

  const V u2 = field::velocity(std::numbers::e, V{0});
  CHECK(u2[0] == doctest::Approx(1.0));

  const V u3 = field::velocity(-2, V{3, -1});
  CHECK(u3[0] == doctest::Approx(oracle(-2, 3)).epsilon(1e-14));
  CHECK(u3[0] == doctest::Approx(-1.6008613451416678).epsilon(1e-14));
  CHECK(std::abs(u3[1]) <= 1e-15);
}

TEST_CASE("velocity names the offending coordinate") {
  CHECK_THROWS_AS(field::velocity(1, V{-2, 0}), DomainError);
  try {
    field::velocity(1, V{-2, 0});
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("k=2") != std::string::npos);
    CHECK(msg.find("Exterior") != std::string::npos);
  }
  CHECK_THROWS_AS(field::velocity(0, V{-1}), DomainError);
  CHECK_THROWS_AS(field::velocity(-1, V{}), DomainError);
}

TEST_CASE("density") {
  CHECK(field::density(-1, V{-1}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(field::density(-1, V{-1, -1}) == doctest::Approx(0.25).epsilon(1e-15));
  const double w = oracle(1, -2);
  CHECK(field::density(1, V{-2}) == doctest::Approx(1 / (std::exp(w) - 1)).epsilon(1e-13));
  CHECK(field::density(1, V{-2}) == doctest::Approx(-1.18848).epsilon(1e-5));
  CHECK_THROWS_AS(field::density(std::numbers::e, V{0}), SingularBoundary);
  CHECK_THROWS_AS(field::density(1, V{5}), DomainError);
}

TEST_CASE("divergence") {
  CHECK(field::divergence(-1, V{-1}) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(field::divergence(-1, V{-1, -1}) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(field::divergence(1, V{-2}) == doctest::Approx(1.18848).epsilon(1e-5));
  CHECK_THROWS_AS(field::divergence(1, V{-1}), SingularBoundary);
}

TEST_CASE("euler_residual") {
  for (double r : field::euler_residual(-1, V{-1, -1})) CHECK(r == 0.0);
  CHECK(std::abs(field::euler_residual(-2, V{3})[0]) <= 1e-13);
  for (double r : field::euler_residual(1, V{-2, -3})) CHECK(std::abs(r) <= 1e-13);
}

TEST_CASE("continuity_residual") {
  CHECK(std::abs(field::continuity_residual(-1, V{-1})) <= 1e-13);
  CHECK(std::abs(field::continuity_residual(-2, V{3, -1})) <= 1e-12);
  CHECK(std::abs(field::continuity_residual(1, V{-2})) <= 1e-12);
}

TEST_CASE("density gradient matches central differences") {
  const double t = -1.3;
  const V x{0.4, -2.0, 1.1};
  const auto g = field::density_gradient(t, x);
  const double h = 1e-5;
  CHECK(g.d_t == doctest::Approx((field::density(t + h, x) - field::density(t - h, x)) / (2 * h))
                     .epsilon(1e-7));
  for (std::size_t k = 0; k < x.size(); ++k) {
    V xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    CHECK(g.d_x[k] ==
          doctest::Approx((field::density(t, xp) - field::density(t, xm)) / (2 * h)).epsilon(1e-7));
  }
}

TEST_CASE("advective sum decouples bit for bit") {
  FieldGen gen;
  for (int i = 0; i < 500; ++i) {
    const auto [t, x] = gen.next(1 + i % 4, i % 2 == 0);
    REQUIRE(field::euler_residual(t, x) == field::euler_residual_full(t, x));
  }
}

TEST_CASE("density sign and consistency") {
  FieldGen gen;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + i % 8;
    const bool positive = i % 2 == 0;
    const auto [t, x] = gen.next(n, positive);
    const double rho = field::density(t, x);
    const int expected = positive && n % 2 == 1 ? -1 : 1;
    REQUIRE((rho > 0 ? 1 : -1) == expected);

    // Independent route through exp(u_k) - t.
    double prod = rho;
    for (double uk : field::velocity(t, x)) prod *= std::exp(uk) - t;
    REQUIRE(std::abs(prod - 1.0) <= 1e-12);

    const auto ld = field::log_density(t, x);
    REQUIRE(ld.sign == expected);
    REQUIRE(std::abs(std::log(std::abs(rho)) - ld.log_abs) <= 1e-12 * std::max(1.0, ld.log_abs));
  }
}

TEST_CASE("large n goes through the log form") {
  FieldGen gen;
  const auto [t, x] = gen.next(80, false);
  const auto ld = field::log_density(t, x);
  CHECK(field::density(t, x) == doctest::Approx(std::exp(ld.log_abs)).epsilon(1e-12));
}

TEST_CASE("residuals on random interior points") {
  FieldGen gen;
  for (int i = 0; i < 2000; ++i) {
    const auto [t, x] = gen.next(1 + i % 3, i % 2 == 0);
    for (double r : field::euler_residual(t, x)) REQUIRE(std::abs(r) <= 1e-11);
    REQUIRE(std::abs(field::continuity_residual(t, x)) <= 1e-10);
  }
}

TEST_CASE("sample") {
  const auto s = field::sample(-1, V{-1, 0});
  CHECK(s.interior);
  CHECK(s.rho == doctest::Approx(field::density(-1, V{-1, 0})));
  CHECK(s.div_u == doctest::Approx(field::divergence(-1, V{-1, 0})));

  const auto b = field::sample(std::numbers::e, V{0, -3});
  CHECK_FALSE(b.interior);
  CHECK(std::isnan(b.rho));
  CHECK(std::isnan(b.div_u));
  CHECK(b.u[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(field::sample(1, V{3}), DomainError);
}
