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

#include <numbers>

#include "voigt/engine.hpp"

namespace voigt {

/// First partials of V and L at (x, y). The L partials are the Cauchy-Riemann
/// images of the V partials and are copied, not recomputed.
struct DerivativeSet {
  double dv_dx;
  double dv_dy;
  double dl_dx;
  double dl_dy;
};

/// dV/dx = 2(yL - xV), dV/dy = 2(xL + yV) - 2/sqrt(pi). `w` is trusted to be
/// faddeyeva(z); relative accuracy of dV/dx degrades where yL ~ xV (the
/// subtraction is not protected; judge that region by absolute error).
inline DerivativeSet derivatives_at(ComplexPoint z, FaddeyevaValue w) noexcept {
  constexpr double two_over_sqrtpi = 2.0 * std::numbers::inv_sqrtpi;
  const double dv_dx = 2.0 * (z.y * w.l - z.x * w.v);
  const double dv_dy = 2.0 * (z.x * w.l + z.y * w.v) - two_over_sqrtpi;
  return {dv_dx, dv_dy, -dv_dy, dv_dx};
}

} // namespace voigt
