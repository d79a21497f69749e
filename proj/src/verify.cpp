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

#include "omegaflow/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "omegaflow/errors.hpp"
#include "omegaflow/field.hpp"
#include "omegaflow/format.hpp"
#include "omegaflow/omega.hpp"

namespace omegaflow::verify {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegenerateFloor = 1e-14;
constexpr double kWorstPointStep = 1e-4;
constexpr double kDivergenceThreshold = -1e3;
constexpr std::size_t kMaxNotes = 20;

constexpr std::array<Suite, 8> kAllSuites = {
    Suite::FunctionalEq,  Suite::OmegaPDE, Suite::EulerAnalytic,
    Suite::ContinuityAnalytic, Suite::EulerFD, Suite::ContinuityFD,
    Suite::Loci,          Suite::DivergenceWitness,
};

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 64);
  if (n < 256 || workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

double scaled(double r, std::initializer_list<double> magnitudes) {
  double s = 1.0;
  for (double m : magnitudes) s = std::max(s, std::abs(m));
  return std::abs(r) / s;
}

double euler_fd_residual(std::span<const double> point) {
  const double t = point[0];
  const std::size_t n = point.size() - 1;
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const ScalarField u_k = [k](std::span<const double> p) {
      return omega::omega(p[0], p[k + 1]);
    };
    const double du_dt = fd_partial(u_k, point, 0, default_step(t));
    double advect = 0.0;
    double advect_mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ui = omega::omega(t, point[i + 1]);
      const double du_dxi = fd_partial(u_k, point, i + 1, default_step(point[i + 1]));
      advect += ui * du_dxi;
      advect_mag += std::abs(ui * du_dxi);
    }
    worst = std::max(worst, scaled(du_dt + advect, {du_dt, advect_mag}));
  }
  return worst;
}

double continuity_fd_residual(std::span<const double> point) {
  const ScalarField rho = [](std::span<const double> p) {
    return field::density(p[0], p.subspan(1));
  };
  const double drho_dt = fd_partial(rho, point, 0, default_step(point[0]));
  double flux = 0.0;
  double flux_mag = 0.0;
  for (std::size_t k = 0; k + 1 < point.size(); ++k) {
    const ScalarField rho_u_k = [k](std::span<const double> p) {
      return field::density(p[0], p.subspan(1)) * omega::omega(p[0], p[k + 1]);
    };
    const double d = fd_partial(rho_u_k, point, k + 1, default_step(point[k + 1]));
    flux += d;
    flux_mag += std::abs(d);
  }
  return scaled(drho_dt + flux, {drho_dt, flux_mag});
}

double loci_residual(std::span<const double> point) {
  const double x = point[0];
  const double c = point[1];
  double worst = 0.0;
  if (x < 0.0 || x >= 1.0) {
    worst = std::max(worst, std::abs(omega::omega(x, omega::locus_zero(x))));
  }
  if (x > 0.0) {
    const double lnx = std::log(x);
    const double w = omega::omega(x, omega::locus_boundary(x));
    worst = std::max(worst, std::abs(w - lnx) / std::max(1.0, std::abs(lnx)));
  }
  if (x < 0.0 || x >= std::numbers::e * (1.0 + std::exp(-c))) {
    const double y = omega::locus_log_level(c, x);
    worst = std::max(worst, std::abs(omega::omega(x, y) - c - std::log(y)));
  }
  return worst;
}

double fd_error(FdTarget target, std::span<const double> point, double h0) {
  std::vector<double> steps(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    steps[i] = h0 * std::max(std::abs(point[i]), 1.0);
  }
  switch (target) {
    case FdTarget::OmegaD1:
    case FdTarget::OmegaD2: {
      const ScalarField f = [](std::span<const double> p) {
        return omega::omega(p[0], p[1]);
      };
      const omega::Partials d = omega::omega_partials(point[0], point[1]);
      return target == FdTarget::OmegaD1
                 ? std::abs(fd_partial(f, point, 0, steps[0]) - d.d1)
                 : std::abs(fd_partial(f, point, 1, steps[1]) - d.d2);
    }
    case FdTarget::EulerFD: {
      double worst = 0.0;
      for (std::size_t k = 0; k + 1 < point.size(); ++k) {
        const ScalarField u_k = [k](std::span<const double> p) {
          return omega::omega(p[0], p[k + 1]);
        };
        const omega::Partials d = omega::omega_partials(point[0], point[k + 1]);
        worst = std::max({worst,
                          std::abs(fd_partial(u_k, point, 0, steps[0]) - d.d1),
                          std::abs(fd_partial(u_k, point, k + 1, steps[k + 1]) - d.d2)});
      }
      return worst;
    }
    case FdTarget::ContinuityFD: {
      const ScalarField rho = [](std::span<const double> p) {
        return field::density(p[0], p.subspan(1));
      };
      const field::DensityGradient g = field::density_gradient(point[0], point.subspan(1));
      double worst = std::abs(fd_partial(rho, point, 0, steps[0]) - g.d_t);
      for (std::size_t k = 0; k < g.d_x.size(); ++k) {
        worst = std::max(worst,
                         std::abs(fd_partial(rho, point, k + 1, steps[k + 1]) - g.d_x[k]));
      }
      return worst;
    }
  }
  return kInf;
}

std::optional<FdTarget> fd_target_of(Suite s) {
  if (s == Suite::EulerFD) return FdTarget::EulerFD;
  if (s == Suite::ContinuityFD) return FdTarget::ContinuityFD;
  return std::nullopt;
}

void add_note(ResidualReport& r, std::string note) {
  if (r.notes.size() < kMaxNotes) r.notes.push_back(std::move(note));
}

std::string point_text(std::span<const double> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += format_real(p[i]);
  }
  return s + ")";
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::FunctionalEq: return "FunctionalEq";
    case Suite::OmegaPDE: return "OmegaPDE";
    case Suite::EulerAnalytic: return "EulerAnalytic";
    case Suite::ContinuityAnalytic: return "ContinuityAnalytic";
    case Suite::EulerFD: return "EulerFD";
    case Suite::ContinuityFD: return "ContinuityFD";
    case Suite::Loci: return "Loci";
    case Suite::DivergenceWitness: return "DivergenceWitness";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::span<const Suite> all_suites() { return kAllSuites; }

void validate(const GridSpec& grid) {
  if (grid.axes.empty()) throw std::invalid_argument("grid has no axes");
  for (const Axis& a : grid.axes) {
    if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw std::invalid_argument("grid axis bounds must be finite");
    }
    if (a.count == 1) {
      if (a.min != a.max) {
        throw std::invalid_argument("a single-point axis needs min == max");
      }
    } else if (a.count < 2 || !(a.min < a.max)) {
      throw std::invalid_argument("grid axis needs min < max and count >= 2");
    }
  }
  if (!(grid.boundary_margin >= 0.0 && grid.boundary_margin < 1.0)) {
    throw std::invalid_argument("boundary_margin must lie in [0, 1)");
  }
}

std::vector<std::vector<double>> raw_points(const GridSpec& grid) {
  validate(grid);
  std::size_t total = 1;
  for (const Axis& a : grid.axes) total *= static_cast<std::size_t>(a.count);
  const std::size_t dim = grid.axes.size();
  std::vector<std::vector<double>> out(total, std::vector<double>(dim));

  if (grid.mode == SamplingMode::Random) {
    std::mt19937_64 rng(grid.seed);
    for (auto& p : out) {
      for (std::size_t d = 0; d < dim; ++d) {
        const Axis& a = grid.axes[d];
        p[d] = a.count == 1
                   ? a.min
                   : std::uniform_real_distribution<double>(a.min, a.max)(rng);
      }
    }
    return out;
  }

  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t d = dim; d-- > 0;) {
      const Axis& a = grid.axes[d];
      const std::size_t i = rem % static_cast<std::size_t>(a.count);
      rem /= static_cast<std::size_t>(a.count);
      out[idx][d] = a.count == 1 ? a.min
                                 : a.min + (a.max - a.min) * static_cast<double>(i) /
                                               static_cast<double>(a.count - 1);
    }
  }
  return out;
}

bool passes_margin(std::span<const double> point, double margin) {
  const double t = point[0];
  if (t == 0.0) return false;
  if (t < 0.0) return true;
  for (std::size_t i = 1; i < point.size(); ++i) {
    if (!(omega::relative_boundary_distance(t, point[i]) >= margin)) return false;
  }
  return true;
}

std::vector<std::vector<double>> grid_points(const GridSpec& grid) {
  auto pts = raw_points(grid);
  std::erase_if(pts, [&](const std::vector<double>& p) {
    return !passes_margin(p, grid.boundary_margin);
  });
  return pts;
}

double fd_partial(const ScalarField& f, std::span<const double> point,
                  std::size_t axis, double h) {
  std::vector<double> p(point.begin(), point.end());
  p[axis] = point[axis] + h;
  const double plus = f(p);
  p[axis] = point[axis] - h;
  const double minus = f(p);
  return (plus - minus) / (2.0 * h);
}

double default_step(double coordinate) {
  static const double kCbrtEps = std::cbrt(std::numeric_limits<double>::epsilon());
  return kCbrtEps * std::max(std::abs(coordinate), 1.0);
}

double convergence_order(const std::function<double(double)>& error_at_step,
                         double h0) {
  const double coarse = std::abs(error_at_step(h0));
  const double fine = std::abs(error_at_step(0.5 * h0));
  if (coarse < kDegenerateFloor && fine < kDegenerateFloor) {
    throw DegenerateResidual("convergence_order: both errors below 1e-14");
  }
  if (fine == 0.0) return 10.0;
  return std::clamp(std::log2(coarse / fine), -10.0, 10.0);
}

double convergence_order(FdTarget target, std::span<const double> point,
                         double h0) {
  return convergence_order([&](double h) { return fd_error(target, point, h); }, h0);
}

double point_residual(Suite suite, std::span<const double> point) {
  switch (suite) {
    case Suite::FunctionalEq: {
      const double x = point[0], y = point[1];
      const double w = omega::omega(x, y);
      return scaled(std::exp(w) - (x * w - y), {x * w, y});
    }
    case Suite::OmegaPDE: {
      const OmegaValue v = omega::evaluate(point[0], point[1]);
      return scaled(v.d1 + v.value * v.d2, {v.d1});
    }
    case Suite::EulerAnalytic: {
      double worst = 0.0;
      for (double r : field::euler_residual(point[0], point.subspan(1))) {
        worst = std::max(worst, std::abs(r));
      }
      return worst;
    }
    case Suite::ContinuityAnalytic:
      return std::abs(field::continuity_residual(point[0], point.subspan(1)));
    case Suite::EulerFD:
      return euler_fd_residual(point);
    case Suite::ContinuityFD:
      return continuity_fd_residual(point);
    case Suite::Loci:
      return loci_residual(point);
    case Suite::DivergenceWitness:
      return std::abs(field::divergence(point[0], point.subspan(1)));
  }
  return kInf;
}

ResidualReport run_suite(Suite suite, const GridSpec& grid, double tol) {
  return run_suite(suite, std::span<const GridSpec>(&grid, 1), tol);
}

ResidualReport run_suite(Suite suite, std::span<const GridSpec> grids,
                         double tol) {
  std::vector<std::vector<double>> points;
  for (const GridSpec& g : grids) {
    auto pts = suite == Suite::Loci ? raw_points(g) : grid_points(g);
    if (suite == Suite::Loci) {
      std::erase_if(pts, [](const std::vector<double>& p) { return p[0] == 0.0; });
    }
    points.insert(points.end(), std::make_move_iterator(pts.begin()),
                  std::make_move_iterator(pts.end()));
  }
  if (points.empty()) {
    throw EmptyGrid(std::string(suite_name(suite)) +
                    ": no grid point survives margin filtering");
  }

  std::vector<double> residuals(points.size());
  std::vector<std::string> errors(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    try {
      residuals[i] = point_residual(suite, points[i]);
    } catch (const std::exception& e) {
      residuals[i] = kInf;
      errors[i] = e.what();
    }
  });

  ResidualReport report;
  report.suite = std::string(suite_name(suite));
  report.n_points = points.size();
  report.tolerance = tol;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (!(residuals[i] <= residuals[worst])) worst = i;
    if (!errors[i].empty()) add_note(report, errors[i]);
  }
  report.max_abs = residuals[worst];
  report.mean_abs = pairwise_sum(residuals) / static_cast<double>(residuals.size());
  report.worst_point = points[worst];
  report.pass = suite == Suite::DivergenceWitness ? report.max_abs >= tol
                                                  : report.max_abs <= tol;

  if (const auto target = fd_target_of(suite)) {
    try {
      report.order_estimate =
          convergence_order(*target, report.worst_point, kWorstPointStep);
    } catch (const std::exception& e) {
      add_note(report, std::string("order estimate at worst point ") +
                           point_text(report.worst_point) + ": " + e.what());
    }
  }
  return report;
}

ResidualReport limit_checks(std::span<const double> y_samples, int k_max,
                            double tol) {
  if (k_max < 4) throw std::invalid_argument("limit_checks: k_max must be >= 4");
  ResidualReport report;
  report.suite = "Limits";
  report.tolerance = tol;

  std::vector<double> residuals;
  std::vector<std::vector<double>> finals;

  // Walks x_k, evaluating `measure(Omega)`; the measure must not increase
  // along the sequence. Returns the last kept (x, measure).
  auto run_sequence = [&](double y, double sign, bool toward_zero,
                          auto&& measure, auto&& final_residual) {
    double last_x = 0.0;
    double last_m = kInf;
    bool have = false;
    bool monotone = true;
    for (int k = 1; k <= k_max; ++k) {
      const double mag = toward_zero ? std::pow(10.0, -k) : std::pow(10.0, k);
      const double x = sign * mag;
      const DomainClass c = omega::classify_domain(x, y);
      if (c != DomainClass::Interior && c != DomainClass::Boundary) {
        add_note(report, "skipped " + point_text(std::array{x, y}) + ": " +
                             std::string(to_string(c)));
        continue;
      }
      const double m = measure(omega::omega(x, y));
      if (have && m > last_m + 1e-12 * std::max(1.0, std::abs(last_m))) {
        monotone = false;
        add_note(report, "trend broken at " + point_text(std::array{x, y}));
      }
      last_x = x;
      last_m = m;
      have = true;
    }
    if (!have) return;
    ++report.n_points;
    residuals.push_back(monotone ? final_residual(last_m) : kInf);
    finals.push_back({last_x, y});
  };

  const double k_ln10 = k_max * std::numbers::ln10;
  for (double y : y_samples) {
    if (!std::isfinite(y)) throw std::invalid_argument("limit_checks: y must be finite");
    const auto identity = [](double w) { return w; };
    const auto magnitude = [](double w) { return std::abs(w); };
    const auto within_tol = [](double m) { return m; };
    if (y > 0.0) {
      run_sequence(y, -1.0, true, identity,
                   [](double w) { return std::max(0.0, w - kDivergenceThreshold); });
    } else if (y == 0.0) {
      run_sequence(y, -1.0, true, identity,
                   [k_ln10](double w) { return std::max(0.0, w + 0.5 * k_ln10); });
    } else {
      const double limit = std::log(-y);
      run_sequence(y, -1.0, true, [limit](double w) { return std::abs(w - limit); },
                   within_tol);
      run_sequence(y, 1.0, true, identity,
                   [](double w) { return std::max(0.0, w - kDivergenceThreshold); });
    }
    run_sequence(y, 1.0, false, magnitude, within_tol);
    run_sequence(y, -1.0, false, magnitude, within_tol);
  }

  if (residuals.empty()) throw EmptyGrid("limit_checks: no sequence point in Dom(Omega)");
  std::size_t worst = 0;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (!(residuals[i] <= residuals[worst])) worst = i;
  }
  report.max_abs = residuals[worst];
  report.mean_abs = pairwise_sum(residuals) / static_cast<double>(residuals.size());
  report.worst_point = finals[worst];
  report.pass = report.max_abs <= tol;
  return report;
}

double default_tolerance(Suite suite) {
  switch (suite) {
    case Suite::FunctionalEq: return 1e-11;
    case Suite::OmegaPDE: return 1e-11;
    case Suite::EulerAnalytic: return 1e-11;
    case Suite::ContinuityAnalytic: return 1e-10;
    case Suite::EulerFD: return 1e-4;
    case Suite::ContinuityFD: return 1e-4;
    case Suite::Loci: return 1e-10;
    case Suite::DivergenceWitness: return 0.1;
  }
  return 0.0;
}

std::vector<GridSpec> default_preset(Suite suite, int n) {
  if (n < 1) throw std::invalid_argument("default_preset: n must be >= 1");
  const Axis second{-10.0, 10.0, 33};
  const Axis t_neg{-10.0, -0.1, 33};
  const Axis t_pos{1.5, 10.0, 33};
  switch (suite) {
    case Suite::FunctionalEq:
    case Suite::OmegaPDE:
      return {GridSpec{{t_neg, second}}, GridSpec{{t_pos, second}}};
    case Suite::Loci:
      return {GridSpec{{Axis{-10.0, 10.0, 33}, Axis{-5.0, 5.0, 11}}}};
    case Suite::DivergenceWitness:
      return {GridSpec{{Axis{-1.0, -1.0, 1}, Axis{-5.0, -0.5, 33}}}};
    default: {
      std::vector<Axis> neg{t_neg}, pos{t_pos};
      for (int k = 0; k < n; ++k) {
        neg.push_back(second);
        pos.push_back(second);
      }
      return {GridSpec{neg}, GridSpec{pos}};
    }
  }
}

std::vector<double> default_limit_samples() {
  return {-std::numbers::e * std::numbers::e, -1.0, -0.5, 0.0, 0.5, 5.0};
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace omegaflow::verify
