//
// Copyright (c) 2026 The voigt library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "voigt/errors.hpp"
#include "voigt/harness.hpp"

using namespace voigt;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(VOIGT_CLI_PATH) + " " + args;
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("grid point generation matches the closed forms") {
  const GridSpec g{-200.0, 200.0, 40001, -20.0, 4.0, 71};
  const auto xs = grid_x_values(g);
  const auto ys = grid_y_values(g);
  REQUIRE(xs.size() == 40001);
  REQUIRE(ys.size() == 71);
  CHECK(xs.front() == -200.0);
  CHECK(xs[20000] == -200.0 + 20000 * (400.0 / 40000));
  CHECK(xs.back() == -200.0 + 40000 * (400.0 / 40000));
  CHECK(ys.front() == std::pow(10.0, -20.0));
  CHECK(ys[35] == std::pow(10.0, -20.0 + 35 * (24.0 / 70.0)));
  CHECK(ys.back() == std::pow(10.0, -20.0 + 70 * (24.0 / 70.0)));
  CHECK(grid_size(g) == 2840071LL);

  const GridSpec single{6.3e2, 9.0, 1, -2.0, 5.0, 1};
  CHECK(grid_x_values(single) == std::vector<double>{6.3e2});
  CHECK(grid_y_values(single) == std::vector<double>{1e-2});
}

TEST_CASE("grid spec parsing") {
  const GridSpec g = parse_grid_spec("-1:1:3,0:0:1");
  CHECK(g.x_start == -1.0);
  CHECK(g.x_stop == 1.0);
  CHECK(g.x_count == 3);
  CHECK(g.y_count == 1);
  CHECK_THROWS_AS(parse_grid_spec("bogus"), InvalidInputError);
  CHECK_THROWS_AS(parse_grid_spec("0:1:0,0:0:1"), InvalidInputError);
}

TEST_CASE("grid CSV output: parity, determinism, golden record") {
  const std::string p1 = "/tmp/voigt_grid_a.csv";
  const std::string p2 = "/tmp/voigt_grid_b.csv";
  run_grid({-1.0, 1.0, 3, 0.0, 0.0, 1}, tiny_min(), p1);
  run_grid({-1.0, 1.0, 3, 0.0, 0.0, 1}, tiny_min(), p2);
  const std::string body = slurp(p1);
  CHECK(body == slurp(p2)); // byte-identical rerun

  std::istringstream in(body);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,y,V,L,status");
  double x[3], y[3], v[3], l[3];
  char status[3][16];
  for (int i = 0; i < 3; ++i) {
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%15s", &x[i], &y[i],
                        &v[i], &l[i], status[i]) == 5);
    CHECK(std::string(status[i]) == "ok");
  }
  CHECK(v[0] == v[2]);  // V even
  CHECK(l[0] == -l[2]); // L odd
  CHECK(l[1] == 0.0);   // x = 0 column
  std::remove(p1.c_str());
  std::remove(p2.c_str());

  const std::string p3 = "/tmp/voigt_grid_c.csv";
  run_grid({6.3e2, 6.3e2, 1, -2.0, -2.0, 1}, tiny_min(), p3);
  std::istringstream one(slurp(p3));
  std::string line;
  std::getline(one, line); // header
  REQUIRE(std::getline(one, line));
  double gx, gy, gv, gl;
  char st[16];
  REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%15s", &gx, &gy, &gv, &gl,
                      st) == 5);
  CHECK(std::fabs(gv - 1.421495882224242e-8) <= 7e-15 * 1.421495882224242e-8);
  std::remove(p3.c_str());
}

TEST_CASE("self-comparison is exactly zero") {
  std::ostringstream sink;
  const ErrorSummary s = run_compare({-20.0, 20.0, 41, -6.0, 2.0, 9},
                                     tiny_min(), CompareReference::tiny_min,
                                     sink);
  CHECK(s.max_rel_v == 0.0);
  CHECK(s.max_rel_l == 0.0);
  CHECK(s.points_evaluated + s.points_skipped == grid_size({-20.0, 20.0, 41, -6.0, 2.0, 9}));
  // the x = 0 column has L = 0 and is skipped
  CHECK(s.points_skipped == 9);
}

TEST_CASE("compare against the oracle stays inside its regions") {
  std::ostringstream sink;
  const ErrorSummary s = run_compare({-6.0, 6.0, 7, -1.0, 1.0, 3}, tiny_min(),
                                     CompareReference::oracle, sink);
  CHECK(s.points_evaluated > 0);
  CHECK(s.max_rel_v <= 1e-12);
  CHECK(s.max_rel_l <= 1e-12);
}

TEST_CASE("bench basics") {
  std::ostringstream out;
  const GridSpec tinygrid{-5.0, 5.0, 21, -4.0, 0.0, 5};
  const auto rows = run_bench(tinygrid, {tiny_min(), 1e-4}, 3, 1, out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ratio_to_tiny_min == 1.0);
  CHECK(rows[1].median_seconds > 0.0);
  CHECK_FALSE(rows[0].low_confidence);

  const auto one = run_bench(tinygrid, {1e-8}, 1, 1, out);
  REQUIRE(one.size() == 2); // tiny_min baseline prepended
  CHECK(one[1].low_confidence);

  const auto par = run_bench(tinygrid, {1e-4}, 1, 2, out);
  CHECK(par.back().median_seconds > 0.0);

  CHECK_THROWS_AS(run_bench(tinygrid, {}, 3, 1, out), InvalidInputError);
}

TEST_CASE("verify passes and reports every golden point") {
  std::ostringstream out;
  CHECK(run_verify(out));
  CHECK(golden_points().size() >= 30);
}

TEST_CASE("cli exit codes and eval output") {
  CHECK(run_cli("eval 0 0 > /tmp/voigt_eval0.txt 2>/dev/null") == 0);
  {
    const std::string body = slurp("/tmp/voigt_eval0.txt");
    CHECK(body.find("V=1 ") != std::string::npos);
    CHECK(body.find("L=0") != std::string::npos);
  }

  CHECK(run_cli("eval 6.3 1e-20 --tiny=1.43e-17 > /tmp/voigt_eval1.txt 2>/dev/null") == 0);
  {
    const std::string body = slurp("/tmp/voigt_eval1.txt");
    const size_t pos = body.find("V=");
    REQUIRE(pos != std::string::npos);
    const double v = std::strtod(body.c_str() + pos + 2, nullptr);
    CHECK(std::fabs(v - 5.792460778844102e-18) <= 7e-15 * 5.792460778844102e-18);
  }

  // overflow domain -> 3, bad usage -> 2, verify -> 0
  CHECK(run_cli("eval 1 -40 2>/dev/null") == 3);
  CHECK(run_cli("eval 2>/dev/null") == 2);
  CHECK(run_cli("bench --tiny-list= --repeats=1 --grid=0:1:2,0:0:1 2>/dev/null >/dev/null") == 2);
  CHECK(run_cli("frobnicate 2>/dev/null") == 2);

  // derivatives flag emits the four partials
  CHECK(run_cli("eval 2 1 --derivatives > /tmp/voigt_eval2.txt 2>/dev/null") == 0);
  CHECK(slurp("/tmp/voigt_eval2.txt").find("dl_dy=") != std::string::npos);

  // clamp warning goes to stderr
  CHECK(run_cli("eval 1 1 --tiny=1 2>/tmp/voigt_eval3.txt >/dev/null") == 0);
  CHECK(slurp("/tmp/voigt_eval3.txt").find("warning") != std::string::npos);

  std::remove("/tmp/voigt_eval0.txt");
  std::remove("/tmp/voigt_eval1.txt");
  std::remove("/tmp/voigt_eval2.txt");
  std::remove("/tmp/voigt_eval3.txt");
}
