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

// Spawns the omegaflow binary and checks output and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "omegaflow/field.hpp"
#include "omegaflow/format.hpp"
#include "omegaflow/io.hpp"

namespace fs = std::filesystem;
using namespace omegaflow;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("omegaflow_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd =
      std::string("'") + OMEGAFLOW_CLI + "' " + args + " 2>'" + err.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("eval omega on the zero locus") {
  const auto r = run("eval omega --x -1 --y -1");
  CHECK(r.code == 0);
  double v = 1.0;
  REQUIRE(parse_real(r.out.substr(0, r.out.find('\n')), v));
  CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("eval omega outside the domain names Exterior") {
  const auto r = run("eval omega --x 1 --y 0");
  CHECK(r.code == 2);
  CHECK(r.err.find("Exterior") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("eval w and partials") {
  auto r = run("eval w --z 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0.567143290409783", 0) == 0);
  r = run("eval w --z -1");
  CHECK(r.code == 2);
  r = run("eval partials --x 1 --y -2");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.18848") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("--bogus").code == 2);
  CHECK(run("eval").code == 2);
  CHECK(run("eval tau --x 1 --y 1").code == 2);
  CHECK(run("eval omega --x nan --y 1").code == 2);
  CHECK(run("eval omega --x abc --y 1").code == 2);
  CHECK(run("sample --n 0 --t-range -2:-1").code == 2);
  CHECK(run("sample --t-range 3").code == 2);
  CHECK(run("verify --suite Nope").code == 2);
  CHECK(run("verify --tol FunctionalEq").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("locus zero rejects 0 < x < 1") {
  const auto r = run("locus --kind zero --x-range 0.2:0.8 --count 3");
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run("locus --kind zero --x-range -3:-1 --count 3").code == 0);
  CHECK(run("locus --kind boundary --x-range 0.5:3 --count 4").code == 0);
  CHECK(run("locus --kind loglevel --C 1 --x-range -3:-1 --count 3").code == 0);
}

TEST_CASE("verify all passes on the default preset") {
  const fs::path out = scratch() / "report.json";
  const auto r = run("verify --suite all --preset default --out '" +
                     out.string() + "'");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  REQUIRE(j.is_array());
  CHECK(j.size() >= 8);
  for (const auto& rep : j) {
    CAPTURE(rep.dump());
    CHECK(rep["pass"].get<bool>());
  }
}

TEST_CASE("a failing suite exits 1 and still writes its report") {
  const auto r = run("verify --suite FunctionalEq --tol FunctionalEq=0");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK_FALSE(j[0]["pass"].get<bool>());
  CHECK(j[0]["tolerance"].get<double>() == 0.0);
}

TEST_CASE("sample round trip reproduces u and rho exactly") {
  const auto r = run("sample --n 2 --t-range=-10:-0.1 --t-range 1.5:10 "
                     "--x-range=-10:10 --count 9");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const auto table = read_csv(in);
  CHECK(table.n == 2);
  REQUIRE_FALSE(table.rows.empty());
  CHECK(table.rows.size() + table.skipped == 2 * 9 * 9 * 9);
  for (const auto& s : table.rows) {
    const auto u = field::velocity(s.t, s.x);
    const double rho = field::density(s.t, s.x);
    CHECK(u == s.u);
    CHECK(std::memcmp(&rho, &s.rho, sizeof rho) == 0);
  }
}

TEST_CASE("sample JSON output") {
  const fs::path out = scratch() / "samples.json";
  const auto r = run("sample --n 1 --t-range=-2:-1 --count 4 --format json "
                     "--out '" + out.string() + "'");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  REQUIRE(j.is_array());
  CHECK(j.size() == 16);
}

TEST_CASE("flags override the config file") {
  const fs::path cfg = scratch() / "cfg.ini";
  {
    std::ofstream f(cfg);
    f << "sample.count=3\nsample.n=1\n";
  }
  const std::string base = "--config '" + cfg.string() + "' sample --t-range=-2:-1";
  auto r = run(base);
  REQUIRE(r.code == 0);
  std::istringstream a(r.out);
  CHECK(read_csv(a).rows.size() == 9);
  r = run(base + " --count 5");
  REQUIRE(r.code == 0);
  std::istringstream b(r.out);
  const auto t = read_csv(b);
  CHECK(t.n == 1);
  CHECK(t.rows.size() == 25);
  {
    std::ofstream f(cfg);
    f << "count=3\n";
  }
  CHECK(run(base).code == 2);
  CHECK(run("--config /nonexistent/omegaflow.ini eval w --z 1").code == 2);
}
