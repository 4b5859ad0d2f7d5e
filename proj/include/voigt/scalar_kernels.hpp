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

namespace voigt {

/// Floating-point limits of the working precision, captured from the runtime
/// environment once (never hard-coded, so wider-precision builds inherit the
/// right cutoffs).
struct PlatformLimits {
  double eps;       ///< relative machine accuracy
  double r_min;     ///< smallest positive normal value
  double r_max;     ///< largest finite value
  double x_big;     ///< sqrt(-ln r_min); beyond it e^{-x^2} underflows
  double log_r_max; ///< ln(r_max), the negative-y overflow guard
};

/// Process-wide immutable limits.
const PlatformLimits& platform_limits() noexcept;

/// Scaled complementary error function e^{y^2} erfc(y) for y >= 0.
/// Decays like 1/(y sqrt(pi)); never overflows. Throws InvalidInputError for
/// negative or non-finite arguments.
double erfcx_real(double y);

/// sin(u)/u with the removable singularity filled in: exactly 1 at u = 0.
/// Even in u by construction.
double sinc_safe(double u) noexcept;

namespace detail {

long double erfcx_ld(long double y);
// the two branches, exposed so the seam agreement is directly testable
long double erfcx_series_ld(long double y) noexcept;
long double erfcx_lcf_ld(long double y);

inline constexpr long double kErfcxSwitch = 2.2L;

} // namespace detail
} // namespace voigt
