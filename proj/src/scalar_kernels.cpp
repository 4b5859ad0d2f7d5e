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
#include "voigt/scalar_kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "voigt/errors.hpp"

namespace voigt {

const PlatformLimits& platform_limits() noexcept {
  static const PlatformLimits lim = [] {
    PlatformLimits p{};
    p.eps = std::numeric_limits<double>::epsilon();
    p.r_min = std::numeric_limits<double>::min();
    p.r_max = std::numeric_limits<double>::max();
    p.x_big = std::sqrt(-std::log(p.r_min));
    p.log_r_max = std::log(p.r_max);
    return p;
  }();
  return lim;
}

double sinc_safe(double u) noexcept {
  const double v = std::fabs(u);
  if (v == 0.0) return 1.0;
  return std::sin(v) / v;
}

namespace detail {

// erfcx(y) = e^{y^2} - (2/sqrt(pi)) * sum_{m>=0} 2^m y^{2m+1} / (2m+1)!!
// The sum is all-positive; the single subtraction amplifies rounding by
// e^{y^2}/erfcx(y), which stays below ~600 for y <= 2.2 and is absorbed by
// the long double working precision.
long double erfcx_series_ld(long double y) noexcept {
  constexpr long double two_over_sqrtpi =
      2.0L * std::numbers::inv_sqrtpi_v<long double>;
  const long double y2 = y * y;
  long double term = y;
  long double sum = y;
  for (int m = 1; m < 256; ++m) {
    term *= 2.0L * y2 / static_cast<long double>(2 * m + 1);
    sum += term;
    if (term < sum * 0x1p-68L) break;
  }
  return std::exp(y2) - two_over_sqrtpi * sum;
}

// Laplace continued fraction, sqrt(pi) erfcx(y) = 1/(y+ (1/2)/(y+ (2/2)/(y+ ...)))
// via modified Lentz. Converges in < 100 cycles for y >= 2.
long double erfcx_lcf_ld(long double y) {
  constexpr long double tiny = 1e-4900L;
  long double f = tiny;
  long double c = f;
  long double d = 0.0L;
  for (int j = 1; j <= 400; ++j) {
    const long double a = (j == 1) ? 1.0L : 0.5L * static_cast<long double>(j - 1);
    d = y + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0L / d;
    c = y + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 0x1p-64L)
      return f * std::numbers::inv_sqrtpi_v<long double>;
  }
  throw InternalError("erfcx: continued fraction failed to converge");
}

long double erfcx_ld(long double y) {
  if (y == 0.0L) return 1.0L;
  if (y < kErfcxSwitch) return erfcx_series_ld(y);
  return erfcx_lcf_ld(y);
}

} // namespace detail

double erfcx_real(double y) {
  if (!std::isfinite(y) || y < 0.0)
    throw InvalidInputError("erfcx_real: argument must be finite and >= 0");
  return static_cast<double>(detail::erfcx_ld(static_cast<long double>(y)));
}

} // namespace voigt
