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
#include "voigt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voigt/errors.hpp"

namespace voigt {

namespace {

constexpr double kPi = std::numbers::pi;

double tiny_min_impl(const PlatformLimits& lim) {
  // a = 1/2 is the deepest useful setting on 16-digit platforms; wider
  // precisions push a down the Table-1 ladder.
  double a0 = 0.5;
  if (lim.eps < 1e-30)
    a0 = 0.36;
  else if (lim.eps < 1e-17)
    a0 = 0.4;
  return 2.0 * std::exp(-(kPi * kPi) / (a0 * a0));
}

} // namespace

double tiny_min() { return tiny_min_impl(platform_limits()); }

AccuracyControl accuracy_from_tiny(double tiny) {
  const PlatformLimits& lim = platform_limits();
  const double lo = tiny_min_impl(lim);
  const double hi = 1e-4;
  AccuracyControl ctl{};
  ctl.tiny_requested = tiny;
  double t = tiny;
  if (!(t >= lo))
    t = lo; // catches NaN and everything below range
  else if (t > hi)
    t = hi;
  ctl.tiny_effective = t;
  ctl.clamped = !(tiny >= lo && tiny <= hi);
  ctl.a = kPi / std::sqrt(std::log(2.0 / t));
  ctl.conv_tol = std::max(t, lim.eps);
  return ctl;
}

int n_cut_sigma1(double a, double x, const PlatformLimits& limits) {
  if (!(x >= 0.0) || x >= limits.x_big)
    throw InvalidInputError("n_cut_sigma1: requires 0 <= x < x_big");
  const double m = -std::log(limits.r_min);
  return static_cast<int>(std::ceil(std::sqrt(m - x * x) / a));
}

int n_cut_sigma24(double a, double x, const PlatformLimits& limits) {
  if (!(x >= 0.0) || x >= limits.x_big)
    throw InvalidInputError("n_cut_sigma24: requires 0 <= x < x_big");
  return static_cast<int>(std::ceil((limits.x_big - x) / a));
}

namespace {

// Single-loop evaluation for x < x_big. Sigma1/2/4 run over n = 1.. with the
// one-exponential-per-cycle recurrences; Sigma3/5 march outward from the term
// peak at n0 = ceil(x/a), with ratio chains built from hoisted constants.
SumSet sums_below_xbig(double x, double y, const AccuracyControl& ctl,
                       const PlatformLimits& lim, int n0, double delta) {
  const double a = ctl.a;
  const double tol = ctl.conv_tol;
  const double y2 = y * y;
  SumSet out{};

  const bool want_sb = y < 5.0;
  const bool want_sinh = x <= detail::kSinhSmallX;

  const double exp_x2 = std::exp(-x * x);
  const double em2ax = std::exp(-2.0 * a * x);
  const double ep2ax = std::exp(2.0 * a * x);

  const bool plain_wing = (n0 == 1);
  double wr = 0.0, wl = 0.0, rr = 0.0, rl = 0.0, rho = 0.0;
  if (!plain_wing) {
    wr = std::exp(-delta * delta);
    wl = std::exp(-(delta - a) * (delta - a));
    rr = std::exp(-2.0 * a * delta - a * a);
    rl = std::exp(2.0 * a * delta - 3.0 * a * a);
    rho = std::exp(-2.0 * a * a);
  }

  // 2(n_cut+1) bounds the Sigma1/2/4 range; the wing term covers the
  // two-wing tail, which is what matters when x is close to x_big.
  const long cap = std::max<long>(2L * (n_cut_sigma1(a, x, lim) + 1),
                                  static_cast<long>(4.0 * lim.x_big / a) + 64);

  double c2 = exp_x2; // e^{-x^2 - 2axn} running
  double c3 = exp_x2; // e^{-x^2 + 2axn} running (plain-wing path only)
  bool done = false;
  long n = 0;
  while (n < cap) {
    ++n;
    const double an = a * static_cast<double>(n);
    const double an2 = an * an;
    const double den = an2 + y2;
    const double ean2 = std::exp(-an2);
    c2 *= em2ax;

    const double t1 = ean2 * exp_x2 / den;
    const double t2 = ean2 * c2 / den;
    const double t4 = an * t2;

    double t3, t5;
    if (plain_wing) {
      c3 *= ep2ax;
      const double e3 = ean2 * c3;
      t3 = e3 / den;
      t5 = an * t3;
    } else {
      const double amr = a * static_cast<double>(n0 + n - 1);
      const double t3r = wr / (amr * amr + y2);
      t3 = t3r;
      t5 = amr * t3r;
      const long ml = n0 - n;
      if (ml >= 1) {
        const double aml = a * static_cast<double>(ml);
        const double t3l = wl / (aml * aml + y2);
        t3 += t3l;
        t5 += aml * t3l;
      }
      wr *= rr;
      rr *= rho;
      wl *= rl;
      rl *= rho;
    }

    out.s1 += t1;
    out.s2 += t2;
    out.s3 += t3;
    out.s4 += t4;
    out.s5 += t5;

    bool conv = (t1 == 0.0 || t1 < tol * out.s1) &&
                (t2 == 0.0 || t2 < tol * out.s2) &&
                (t3 == 0.0 || t3 < tol * out.s3) &&
                (t4 == 0.0 || t4 < tol * out.s4) &&
                (t5 == 0.0 || t5 < tol * out.s5);
    if (want_sb) {
      const double tb = ean2 * (y2 / den);
      out.sb += tb;
      conv = conv && (tb == 0.0 || tb < tol * out.sb);
    }
    if (want_sinh) {
      const double u = 2.0 * an * x;
      const double u2 = u * u;
      const double sh = (u <= detail::kSinhTaylorMax)
                            ? u * (1.0 + u2 / 6.0 + u2 * u2 / 120.0)
                            : std::sinh(u);
      const double th = an * (ean2 * exp_x2) / den * sh;
      out.s45_sinh += th;
      conv = conv && (th == 0.0 || th < tol * out.s45_sinh);
    }
    if (conv) {
      done = true;
      break;
    }
  }
  if (!done)
    throw InternalError("compute_sums: cycle cap reached below x_big");
  out.n_used = static_cast<int>(n);
  return out;
}

// x >= x_big: Sigma1/2/4 are machine-truncated to zero; only the peak-centred
// Sigma3/5 wings contribute. Exponents are tracked additively and
// exponentiated only while above ln(r_min), at most one exp per wing.
SumSet sums_above_xbig(double y, const AccuracyControl& ctl,
                       const PlatformLimits& lim, long n0, double delta) {
  const double a = ctl.a;
  const double tol = ctl.conv_tol;
  const double y2 = y * y;
  const double ln_rmin = std::log(lim.r_min);
  SumSet out{};

  const long cap = static_cast<long>(4.0 * lim.x_big / a) + 64;
  bool right_dead = false;
  bool left_dead = false;
  bool done = false;
  long n = 0;
  while (n < cap) {
    ++n;
    double t3 = 0.0, t5 = 0.0;
    if (!right_dead) {
      const double d = delta + a * static_cast<double>(n - 1);
      const double ex = -d * d;
      if (ex >= ln_rmin) {
        const double e = std::exp(ex);
        const double am = a * static_cast<double>(n0 + n - 1);
        const double q = e / (am * am + y2);
        t3 += q;
        t5 += am * q;
      } else {
        right_dead = true;
      }
    }
    const long ml = n0 - n;
    if (ml >= 1 && !left_dead) {
      const double d = a * static_cast<double>(n) - delta; // = x - a*ml
      const double ex = -d * d;
      if (ex >= ln_rmin) {
        const double e = std::exp(ex);
        const double am = a * static_cast<double>(ml);
        const double q = e / (am * am + y2);
        t3 += q;
        t5 += am * q;
      } else {
        left_dead = true;
      }
    }
    out.s3 += t3;
    out.s5 += t5;
    const bool conv = (t3 == 0.0 && t5 == 0.0) ||
                      (t3 < tol * out.s3 && t5 < tol * out.s5);
    if (conv) {
      done = true;
      break;
    }
  }
  if (!done)
    throw InternalError("compute_sums: cycle cap reached in two-wing branch");
  out.n_used = static_cast<int>(n);
  return out;
}

} // namespace

SumSet compute_sums(double x, double y, const AccuracyControl& ctl,
                    const PlatformLimits& limits) {
  if (!(std::isfinite(x) && std::isfinite(y)) || x < 0.0 || y < 0.0)
    throw InvalidInputError("compute_sums: requires finite x >= 0, y >= 0");

  long n0 = static_cast<long>(std::ceil(x / ctl.a));
  if (n0 < 1) n0 = 1;
  double delta = std::fma(ctl.a, static_cast<double>(n0), -x);
  if (delta < 0.0) { // ceil computed one short after rounding
    ++n0;
    delta = std::fma(ctl.a, static_cast<double>(n0), -x);
  }

  if (x < limits.x_big)
    return sums_below_xbig(x, y, ctl, limits, static_cast<int>(n0), delta);
  return sums_above_xbig(y, ctl, limits, n0, delta);
}

FaddeyevaValue assemble_first_quadrant(double x, double y,
                                       const AccuracyControl& ctl,
                                       const SumSet& sums,
                                       const PlatformLimits& limits) {
  const double a = ctl.a;
  const double two_a_pi = 2.0 * a / kPi;

  if (x >= limits.x_big) {
    // e^{-x^2}-scaled terms have underflowed; only the peak sums survive.
    return {two_a_pi * 0.5 * y * sums.s3, two_a_pi * 0.5 * sums.s5};
  }

  const double exp_x2 = std::exp(-x * x);
  const double ecx = erfcx_real(y);
  const double u = x * y;
  const double su = std::sin(u);
  const double cu2 = std::cos(2.0 * u);

  const double v = exp_x2 * ecx * cu2 +
                   two_a_pi * x * exp_x2 * su * sinc_safe(u) +
                   two_a_pi * (0.5 * y * (sums.s2 + sums.s3) - y * cu2 * sums.s1);

  // First three terms of the imaginary part, jointly. The y-only factor
  // d31 = 1 + 2*sb - (pi y / a) erfcx(y) vanishes to machine accuracy for
  // y >= 5 and is taken as exactly zero there.
  double first3 = 0.0;
  if (y < 5.0) {
    const double d31 = 1.0 + 2.0 * sums.sb - (kPi / a) * y * ecx;
    first3 = two_a_pi * x * exp_x2 * sinc_safe(2.0 * u) * d31;
  }
  const double tail = (x <= detail::kSinhSmallX) ? sums.s45_sinh
                                                 : 0.5 * (sums.s5 - sums.s4);
  return {v, first3 + two_a_pi * tail};
}

namespace {

FaddeyevaValue first_quadrant(double x, double y, const AccuracyControl& ctl,
                              const PlatformLimits& lim) {
  const SumSet sums = compute_sums(x, y, ctl, lim);
  return assemble_first_quadrant(x, y, ctl, sums, lim);
}

} // namespace

FaddeyevaValue faddeyeva(ComplexPoint z, const AccuracyControl& ctl) {
  const PlatformLimits& lim = platform_limits();
  if (!(std::isfinite(z.x) && std::isfinite(z.y)))
    throw InvalidInputError("faddeyeva: non-finite input");
  const double x = z.x;
  const double y = z.y;

  if (std::fabs(x) < lim.r_min) {
    // pure-imaginary axis: w(iy) = erfcx(y) for y >= 0, reflected below
    if (y >= 0.0) return {erfcx_real(y), 0.0};
    if (y * y > lim.log_r_max)
      throw OverflowDomainError("faddeyeva: exp(y^2 - x^2) overflows");
    return {2.0 * std::exp(y * y) - erfcx_real(-y), 0.0};
  }

  if (y < 0.0) {
    if (y * y - x * x > lim.log_r_max)
      throw OverflowDomainError("faddeyeva: exp(y^2 - x^2) overflows");
    const FaddeyevaValue wm = faddeyeva({-x, -y}, ctl);
    const double e = std::exp(y * y - x * x);
    const double u = x * y;
    return {2.0 * e * std::cos(2.0 * u) - wm.v,
            -2.0 * e * std::sin(2.0 * u) - wm.l};
  }

  if (x < 0.0) {
    const FaddeyevaValue w = first_quadrant(-x, y, ctl, lim);
    return {w.v, -w.l};
  }
  return first_quadrant(x, y, ctl, lim);
}

FaddeyevaValue faddeyeva(ComplexPoint z) {
  static const AccuracyControl ctl = accuracy_from_tiny(tiny_min());
  return faddeyeva(z, ctl);
}

} // namespace voigt
