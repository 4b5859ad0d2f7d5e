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
#include <random>

#include <doctest.h>

#include "voigt/errors.hpp"
#include "voigt/harness.hpp"
#include "voigt/oracle.hpp"

using namespace voigt;

namespace {
double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("oracle at the origin") {
  const OracleResult r = oracle_w({0.0, 0.0});
  CHECK(r.v == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.l == 0.0);
  CHECK(r.est_abs_err <= 1e-15);
  CHECK(r.method == OracleMethod::segment_quadrature);
}

TEST_CASE("oracle agrees with the engine at 1 + i") {
  const AccuracyControl ctl = accuracy_from_tiny(tiny_min());
  const FaddeyevaValue w = faddeyeva({1.0, 1.0}, ctl);
  const OracleResult r = oracle_w({1.0, 1.0});
  CHECK(rel_err(w.v, r.v) <= 1e-12);
  CHECK(rel_err(w.l, r.l) <= 1e-12);
}

TEST_CASE("oracle reproduces a tabulated point") {
  const OracleResult r = oracle_w({6.3e-2, 10.0});
  CHECK(rel_err(r.v, 5.613881832823887e-2) <= 1e-12);
  CHECK(rel_err(r.l, 3.502232333332985e-4) <= 1e-12);
}

TEST_CASE("oracle input and region errors") {
  CHECK_THROWS_AS(oracle_w({0.0, -1.0}), InvalidInputError);
  CHECK_THROWS_AS(oracle_w({std::nan(""), 1.0}), InvalidInputError);
  // declared oscillatory failure: x*y > 200 inside |z| <= 50
  CHECK_THROWS_AS(oracle_w({30.0, 10.0}), ConvergenceFailureError);
  // gap between the quadrature disc and the asymptotic annulus
  CHECK_THROWS_AS(oracle_w({60.0, 60.0}), ConvergenceFailureError);
  CHECK_THROWS_AS(oracle_w_linear({80.0, 1.0}), ConvergenceFailureError);
  // explicit unreachable target
  CHECK_THROWS_AS(oracle_w({1.0, 1.0}, 1e-40), ConvergenceFailureError);
}

TEST_CASE("oracle covers every tabulated |z| <= 50 row at 1e-12") {
  for (const GoldenPoint& gp : golden_points()) {
    if (gp.x * gp.x + gp.y * gp.y > 2500.0) continue;
    const OracleResult r = oracle_w({gp.x, gp.y});
    CHECK(rel_err(r.v, gp.v) <= 1e-12);
    if (gp.check_l) CHECK(rel_err(r.l, gp.l) <= 1e-12);
  }
}

TEST_CASE("segment and scaled-linear paths agree within their estimates") {
  std::mt19937_64 rng(2024ULL);
  std::uniform_real_distribution<double> ur(0.02, 5.0);
  std::uniform_real_distribution<double> uph(0.0, 1.0);
  int tested = 0;
  while (tested < 200) {
    const double r = ur(rng);
    const double ph = uph(rng) * 1.5707963267948966;
    const double x = r * std::cos(ph);
    const double y = r * std::sin(ph);
    // explicit no-op targets: the linear path's honest estimate blows past
    // the default near the imaginary axis, which is exactly what the
    // 2*max(est) comparison is meant to absorb
    const OracleResult a = oracle_w({x, y}, 1.0);
    const OracleResult b = oracle_w_linear({x, y}, 1.0);
    const double allow = 2.0 * std::max(a.est_abs_err, b.est_abs_err);
    CHECK(std::fabs(a.v - b.v) <= allow);
    CHECK(std::fabs(a.l - b.l) <= allow);
    ++tested;
  }
}

TEST_CASE("asymptotic region handles the far tabulated rows") {
  const OracleResult r = oracle_w({3.9e4, 1.0});
  CHECK(r.method == OracleMethod::asymptotic);
  CHECK(rel_err(r.v, 3.709333226385423e-10) <= 1e-12);
  CHECK(rel_err(r.l, 1.446639957339204e-5) <= 1e-12);
}

TEST_CASE("naive sums are monotone in n_max and match closed one-term forms") {
  CHECK_THROWS_AS(oracle_sums_naive(1.0, 1.0, 0.5, 0), InvalidInputError);

  const double a = 0.5, x = 2.0, y = 0.5;
  SumSet prev = oracle_sums_naive(x, y, a, 1);
  for (int n = 2; n <= 40; ++n) {
    const SumSet cur = oracle_sums_naive(x, y, a, n);
    CHECK(cur.s1 >= prev.s1);
    CHECK(cur.s2 >= prev.s2);
    CHECK(cur.s3 >= prev.s3);
    CHECK(cur.s4 >= prev.s4);
    CHECK(cur.s5 >= prev.s5);
    prev = cur;
  }

  const SumSet one = oracle_sums_naive(x, y, a, 1);
  const double den = a * a + y * y;
  CHECK(one.s1 == doctest::Approx(std::exp(-(a * a + x * x)) / den).epsilon(1e-15));
  CHECK(one.s5 ==
        doctest::Approx(a * std::exp(-(a - x) * (a - x)) / den).epsilon(1e-15));

  const SumSet sym = oracle_sums_naive(0.0, 1.0, 0.5, 60);
  CHECK(sym.s2 == sym.s3);
  CHECK(sym.s4 == sym.s5);
}

TEST_CASE("bracket reference vanishes only to its class accuracy at y = 5") {
  // The y-only bracket is zeroed by the engine for y >= 5. Its true size
  // there is set by the Lorentzian tail of the expansion error, measured as
  // a few machine epsilon relative to erfcx(5) at a = 1/2 and growing to
  // ~1e-4 relative at a = 1; the zeroing is safe within each accuracy class.
  const double e5 = erfcx_real(5.0);
  struct Row {
    double a;
    double bound; // |bracket| / erfcx(5) must stay below this
  };
  for (const Row r : {Row{0.36, 1e-15}, Row{0.5, 2e-15}, Row{0.7, 1e-7},
                      Row{1.0, 1e-3}}) {
    const double b = static_cast<double>(detail::imag_bracket_ref(5.0, r.a));
    CHECK(std::fabs(b) / e5 <= r.bound);
  }
  // and it only shrinks as y grows past 5
  for (double y : {6.0, 8.0, 10.0}) {
    const double b5 = std::fabs(static_cast<double>(detail::imag_bracket_ref(5.0, 0.5)));
    const double by = std::fabs(static_cast<double>(detail::imag_bracket_ref(y, 0.5)));
    CHECK(by <= b5);
  }
}
