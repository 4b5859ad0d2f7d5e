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

#include "voigt/scalar_kernels.hpp"

namespace voigt {

/// Evaluation point z = x + iy. Both parts must be finite.
struct ComplexPoint {
  double x;
  double y;
};

/// w(z) = V + iL. V is the Voigt line-shape function for y > 0.
struct FaddeyevaValue {
  double v;
  double l;
};

/// Accuracy knob. `tiny` is the target relative error of the underlying
/// cosh-series representation of e^{t^2}; the expansion parameter a and the
/// series break threshold are derived from it.
struct AccuracyControl {
  double tiny_requested;
  double tiny_effective; ///< clamped into [tiny_min, 1e-4]
  double a;              ///< pi / sqrt(ln(2/tiny_effective)), in (0, 1]
  double conv_tol;       ///< max(tiny_effective, eps); loop break threshold
  bool clamped;          ///< true when tiny_requested was out of range
};

/// The five truncated sums plus two companion accumulators gathered in the
/// same loop pass:
///  - s45_sinh: (s5 - s4)/2 rebuilt in sinh form, cancellation-free; only
///    populated for x <= 5e-4.
///  - sb: sum e^{-a^2 n^2} y^2/(y^2 + a^2 n^2), the y-only part of the
///    imaginary-part bracket; only populated for x < x_big and y < 5.
struct SumSet {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 0.0;
  double s5 = 0.0;
  int n_used = 0;
  double s45_sinh = 0.0;
  double sb = 0.0;
};

/// Smallest useful tiny for the current precision (2 e^{-pi^2/a^2} at the
/// deepest usable a).
double tiny_min();

/// Derive the accuracy control block from a requested tiny. Out-of-range
/// (including non-finite) requests are clamped, never rejected; the `clamped`
/// flag carries the warning.
AccuracyControl accuracy_from_tiny(double tiny);

/// Last index whose Sigma1 exponential factor can stay above r_min.
/// Requires 0 <= x < x_big.
int n_cut_sigma1(double a, double x, const PlatformLimits& limits);

/// Same bound for Sigma2/Sigma4. Requires 0 <= x < x_big.
int n_cut_sigma24(double a, double x, const PlatformLimits& limits);

/// Evaluate the five sums for x >= 0, y >= 0. Single loop; one fresh
/// exponential per cycle for x < x_big (running products supply the rest),
/// at most one per wing otherwise. Underflow terminates series naturally.
SumSet compute_sums(double x, double y, const AccuracyControl& ctl,
                    const PlatformLimits& limits);

/// Assemble (V, L) in the first quadrant from the sums. x > 0 expected
/// (x = 0 is short-circuited by faddeyeva()).
FaddeyevaValue assemble_first_quadrant(double x, double y,
                                       const AccuracyControl& ctl,
                                       const SumSet& sums,
                                       const PlatformLimits& limits);

/// Full-plane evaluation: first-quadrant series plus the parity reflection
/// in x and the w(-z) = 2 e^{-z^2} - w(z) relation for y < 0.
/// Throws InvalidInputError on NaN/Inf, OverflowDomainError when y < 0 and
/// y^2 - x^2 > ln(r_max).
FaddeyevaValue faddeyeva(ComplexPoint z, const AccuracyControl& ctl);

/// Convenience overload at full accuracy (tiny = tiny_min).
FaddeyevaValue faddeyeva(ComplexPoint z);

namespace detail {
// x at and below which (s5 - s4)/2 switches to the sinh form; the direct
// difference loses ~1/(4ax) digits to cancellation, so the window covers
// everything where that amplification is measurable
inline constexpr double kSinhSmallX = 0.5;
// largest 2anx the 3-term odd Taylor expansion of sinh may see; above it the
// term falls back to std::sinh
inline constexpr double kSinhTaylorMax = 1e-2;
} // namespace detail

} // namespace voigt
