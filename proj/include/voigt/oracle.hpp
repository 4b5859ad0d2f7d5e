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
#pragma once

#include "voigt/engine.hpp"

namespace voigt {

enum class OracleMethod {
  segment_quadrature, ///< adaptive quadrature of the two path segments
  asymptotic,         ///< large-modulus expansion with correction terms
  scaled_linear_path, ///< quadrature along the scaled straight 0 -> z path
};

/// Slow independent reference value. Shares no code with the engine.
struct OracleResult {
  double v;
  double l;
  double est_abs_err; ///< bound on the absolute error of either component
  OracleMethod method;
};

/// Reference w(z) for y >= 0. Quadrature inside |z| <= 50 (declared
/// ConvergenceFailure for x*y > 200), asymptotic expansion for |z|^2 >= 1e4,
/// ConvergenceFailure in between. target_abs_err <= 0 selects the default
/// 1e-14 * max(|V|, |L|, 1e3 r_min).
OracleResult oracle_w(ComplexPoint z, double target_abs_err = 0.0);

/// Same function through the scaled straight-path integral along 0 -> z,
/// usable for |z| <= 50. Exists as the second, independent quadrature route.
OracleResult oracle_w_linear(ComplexPoint z, double target_abs_err = 0.0);

/// Literal term-by-term evaluation of the five sums: one fresh exponential
/// per term per sum, index order 1..n_max, no recurrences, no two-wing
/// ordering. Compensated long double accumulation inside.
SumSet oracle_sums_naive(double x, double y, double a, int n_max);

namespace detail {

/// erfcx by direct quadrature of (2/sqrt(pi)) Int_0^inf e^{-u^2-2yu} du;
/// referee for the fast kernel.
double erfcx_by_quadrature(double y);

/// (s5 - s4)/2 from the naive sums, differenced in long double.
long double naive_s45_half_diff(double x, double y, double a, int n_max);

/// Reference value of the imaginary-part bracket
/// -erfcx(y) + (a/(pi y))[1 + 2 sum e^{-a^2 n^2} y^2/(y^2+a^2 n^2)],
/// summed to long double accuracy.
long double imag_bracket_ref(double y, double a);

} // namespace detail
} // namespace voigt
