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

// omegaflow: evaluate W0, Omega and the exact Euler/continuity solution,
// export grid samples, compute loci and run the verification suites.
//
// Exit status: 0 on success, 1 when a verification suite fails, 2 on usage or
// domain errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omegaflow/errors.hpp"
#include "omegaflow/format.hpp"
#include "omegaflow/io.hpp"
#include "omegaflow/lambertw.hpp"
#include "omegaflow/omega.hpp"
#include "omegaflow/verify.hpp"

namespace {

using namespace omegaflow;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a:b" -> {a, b}
std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  double a = 0.0, b = 0.0;
  if (colon == std::string::npos || !parse_real(text.substr(0, colon), a) ||
      !parse_real(text.substr(colon + 1), b) || !std::isfinite(a) ||
      !std::isfinite(b)) {
    throw UsageError("malformed range '" + text + "', expected <min>:<max>");
  }
  return {a, b};
}

void require_finite(const char* flag, double v) {
  if (!std::isfinite(v)) throw UsageError(std::string(flag) + " must be finite");
}

// Writes to --out or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct EvalArgs {
  std::string target;
  double z = std::nan("");
  double x = std::nan("");
  double y = std::nan("");
};

int run_eval(const EvalArgs& a) {
  if (a.target == "w") {
    require_finite("--z", a.z);
    std::cout << format_real(lambertw::w0(a.z)) << '\n';
    return kExitOk;
  }
  require_finite("--x", a.x);
  require_finite("--y", a.y);
  if (a.target == "omega") {
    std::cout << format_real(omega::omega(a.x, a.y)) << '\n';
  } else {
    const auto d = omega::omega_partials(a.x, a.y);
    std::cout << format_real(d.d1) << ' ' << format_real(d.d2) << '\n';
  }
  return kExitOk;
}

struct GridArgs {
  int n = 2;
  std::vector<std::string> t_ranges;
  std::vector<std::string> x_ranges;
  int count = 33;
  double margin = 1e-3;
  std::uint64_t seed = 0;
  std::string mode = "linspace";
};

std::vector<verify::GridSpec> build_grids(const GridArgs& a) {
  if (a.n < 1) throw UsageError("--n must be >= 1");
  if (a.count < 2) throw UsageError("--count must be >= 2");
  require_finite("--margin", a.margin);
  std::vector<std::pair<double, double>> ts;
  if (a.t_ranges.empty()) {
    ts = {{-10.0, -0.1}, {1.5, 10.0}};
  } else {
    for (const auto& r : a.t_ranges) ts.push_back(parse_range(r));
  }
  std::vector<std::pair<double, double>> xs;
  for (const auto& r : a.x_ranges) xs.push_back(parse_range(r));
  if (xs.empty()) xs.push_back({-10.0, 10.0});
  if (xs.size() != 1 && xs.size() != static_cast<std::size_t>(a.n)) {
    throw UsageError("give one --x-range for all axes or exactly n of them");
  }
  std::vector<verify::GridSpec> grids;
  for (const auto& [t0, t1] : ts) {
    verify::GridSpec g;
    g.axes.push_back({t0, t1, a.count});
    for (int k = 0; k < a.n; ++k) {
      const auto& [x0, x1] = xs.size() == 1 ? xs[0] : xs[k];
      g.axes.push_back({x0, x1, a.count});
    }
    g.boundary_margin = a.margin;
    g.seed = a.seed;
    g.mode = a.mode == "random" ? verify::SamplingMode::Random
                                : verify::SamplingMode::Linspace;
    try {
      verify::validate(g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    grids.push_back(std::move(g));
  }
  return grids;
}

int run_sample(const GridArgs& grid, const std::string& format,
               const std::string& out_path) {
  const auto table = sample_grids(build_grids(grid));
  Output out(out_path);
  if (format == "json") {
    write_json(out.stream(), table);
  } else {
    write_csv(out.stream(), table);
  }
  return kExitOk;
}

struct LocusArgs {
  std::string kind;
  double c = 0.0;
  std::string x_range;
  int count = 33;
  std::string format = "csv";
  std::string out;
};

int run_locus(const LocusArgs& a) {
  require_finite("--C", a.c);
  if (a.count < 1) throw UsageError("--count must be >= 1");
  const auto [x0, x1] = parse_range(a.x_range);
  Output out(a.out);
  std::ostream& os = out.stream();
  std::vector<std::array<double, 4>> rows;  // x, y, Omega, target
  for (int i = 0; i < a.count; ++i) {
    const double x =
        a.count == 1 ? x0 : x0 + (x1 - x0) * static_cast<double>(i) / (a.count - 1);
    double y = 0.0, target = 0.0;
    if (a.kind == "zero") {
      y = omega::locus_zero(x);
    } else if (a.kind == "boundary") {
      y = omega::locus_boundary(x);
      target = std::log(x);
    } else {
      y = omega::locus_log_level(a.c, x);
      target = a.c + std::log(y);
    }
    rows.push_back({x, y, omega::omega(x, y), target});
  }
  if (a.format == "json") {
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << (i ? ",\n " : "\n ") << "{\"x\": " << format_real(rows[i][0])
         << ", \"y\": " << format_real(rows[i][1])
         << ", \"omega\": " << format_real(rows[i][2])
         << ", \"target\": " << format_real(rows[i][3]) << "}";
    }
    os << "\n]\n";
  } else {
    os << "x,y,omega,target\n";
    for (const auto& r : rows) {
      os << format_real(r[0]) << ',' << format_real(r[1]) << ','
         << format_real(r[2]) << ',' << format_real(r[3]) << '\n';
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string preset = "default";
  int n = 2;
  std::vector<std::string> tol_overrides;
  int limit_k_max = verify::kDefaultLimitKMax;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  if (a.preset != "default") throw UsageError("unknown preset '" + a.preset + "'");
  if (a.n < 1) throw UsageError("--n must be >= 1");

  std::map<std::string, double> tol;
  for (verify::Suite s : verify::all_suites()) {
    tol[std::string(verify::suite_name(s))] = verify::default_tolerance(s);
  }
  tol["Limits"] = 1e-6;
  for (const auto& o : a.tol_overrides) {
    const auto eq = o.find('=');
    double v = 0.0;
    if (eq == std::string::npos || !tol.contains(o.substr(0, eq)) ||
        !parse_real(o.substr(eq + 1), v) || !std::isfinite(v)) {
      throw UsageError("malformed --tol '" + o + "', expected <suite>=<value>");
    }
    tol[o.substr(0, eq)] = v;
  }

  std::vector<verify::Suite> suites;
  bool limits = false;
  if (a.suite == "all") {
    suites.assign(verify::all_suites().begin(), verify::all_suites().end());
    limits = true;
  } else if (a.suite == "Limits") {
    limits = true;
  } else if (const auto s = verify::parse_suite(a.suite)) {
    suites.push_back(*s);
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }

  std::vector<verify::ResidualReport> reports;
  for (verify::Suite s : suites) {
    const auto grids = verify::default_preset(s, a.n);
    reports.push_back(verify::run_suite(s, grids, tol[std::string(verify::suite_name(s))]));
  }
  if (limits) {
    if (a.limit_k_max < 4) throw UsageError("--limit-kmax must be >= 4");
    const auto ys = verify::default_limit_samples();
    reports.push_back(verify::limit_checks(ys, a.limit_k_max, tol["Limits"]));
  }

  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.suite << "  max=" << format_real(r.max_abs)
              << "  tol=" << format_real(r.tolerance) << "  n=" << r.n_points << '\n';
    for (const auto& note : r.notes) std::cerr << "  note: " << note << '\n';
  }
  Output out(a.out);
  out.stream() << reports_to_json(reports) << '\n';
  return all_pass ? kExitOk : kExitSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambert W, the Omega function and an exact pressureless Euler solution"};
  app.set_config("--config", "", "key=value file; keys are <subcommand>.<flag>");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate W0, Omega or its partials");
  eval_cmd->add_option("target", eval.target, "w | omega | partials")
      ->required()
      ->check(CLI::IsMember({"w", "omega", "partials"}));
  eval_cmd->add_option("--z", eval.z, "W argument");
  eval_cmd->add_option("--x", eval.x, "first Omega argument");
  eval_cmd->add_option("--y", eval.y, "second Omega argument");

  GridArgs grid;
  std::string sample_format = "csv";
  std::string sample_out;
  auto* sample_cmd = app.add_subcommand("sample", "Sample u, rho and div u on a grid");
  sample_cmd->add_option("--n", grid.n, "spatial dimension")->capture_default_str();
  sample_cmd->add_option("--t-range", grid.t_ranges, "t range <min>:<max>, repeatable");
  sample_cmd->add_option("--x-range", grid.x_ranges,
                         "x range <min>:<max>; once for all axes or once per axis");
  sample_cmd->add_option("--count", grid.count, "points per axis")->capture_default_str();
  sample_cmd->add_option("--margin", grid.margin, "relative boundary margin")
      ->capture_default_str();
  sample_cmd->add_option("--seed", grid.seed, "seed for random mode");
  sample_cmd->add_option("--mode", grid.mode, "linspace | random")
      ->check(CLI::IsMember({"linspace", "random"}));
  sample_cmd->add_option("--format", sample_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample_cmd->add_option("--out", sample_out, "output path (default stdout)");

  LocusArgs locus;
  auto* locus_cmd = app.add_subcommand("locus", "Points where Omega takes special values");
  locus_cmd->add_option("--kind", locus.kind, "zero | boundary | loglevel")
      ->required()
      ->check(CLI::IsMember({"zero", "boundary", "loglevel"}));
  locus_cmd->add_option("--C", locus.c, "level for loglevel");
  locus_cmd->add_option("--x-range", locus.x_range, "x range <min>:<max>")->required();
  locus_cmd->add_option("--count", locus.count, "number of x values");
  locus_cmd->add_option("--format", locus.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  locus_cmd->add_option("--out", locus.out, "output path (default stdout)");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", ver.suite, "suite name, Limits, or all")
      ->capture_default_str();
  verify_cmd->add_option("--preset", ver.preset, "grid preset")->capture_default_str();
  verify_cmd->add_option("--n", ver.n, "spatial dimension of field suites")
      ->capture_default_str();
  verify_cmd->add_option("--tol", ver.tol_overrides, "<suite>=<value>, repeatable");
  verify_cmd->add_option("--limit-kmax", ver.limit_k_max, "limit sequence length")
      ->capture_default_str();
  verify_cmd->add_option("--out", ver.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval);
    if (sample_cmd->parsed()) return run_sample(grid, sample_format, sample_out);
    if (locus_cmd->parsed()) return run_locus(locus);
    return run_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "omegaflow: " << e.what() << '\n';
  } catch (const omegaflow::Error& e) {
    std::cerr << "omegaflow: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "omegaflow: " << e.what() << '\n';
  }
  return kExitUsage;
}
