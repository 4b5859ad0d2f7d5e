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
#include "voigt/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <vector>

#include "voigt/errors.hpp"

namespace voigt {
namespace {

using cld = std::complex<long double>;

constexpr long double kInvSqrtPiL = std::numbers::inv_sqrtpi_v<long double>;
constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kEpsL = 1.08420217248550443401e-19L;

// ---------------------------------------------------------------------------
// Nested Clenshaw-Curtis rules (17/33 points, shared nodes), computed once.
// ---------------------------------------------------------------------------

struct CCRule {
  std::array<long double, 33> node; // cos(k pi / 32), k = 0..32
  std::array<long double, 33> w32;
  std::array<long double, 17> w16;  // acts on node[2j]
};

std::array<long double, 33> cc_weights_33() {
  std::array<long double, 33> w{};
  const int n = 32;
  for (int k = 0; k <= n; ++k) {
    const long double th = kPiL * k / n;
    long double v = 1.0L;
    for (int j = 1; j < n / 2; ++j)
      v -= 2.0L * std::cos(2.0L * j * th) / (4.0L * j * j - 1.0L);
    v -= std::cos(n * th) / (static_cast<long double>(n) * n - 1.0L);
    const long double ck = (k == 0 || k == n) ? 0.5L : 1.0L;
    w[k] = 2.0L / n * ck * v;
  }
  return w;
}

std::array<long double, 17> cc_weights_17() {
  std::array<long double, 17> w{};
  const int n = 16;
  for (int k = 0; k <= n; ++k) {
    const long double th = kPiL * k / n;
    long double v = 1.0L;
    for (int j = 1; j < n / 2; ++j)
      v -= 2.0L * std::cos(2.0L * j * th) / (4.0L * j * j - 1.0L);
    v -= std::cos(n * th) / (static_cast<long double>(n) * n - 1.0L);
    const long double ck = (k == 0 || k == n) ? 0.5L : 1.0L;
    w[k] = 2.0L / n * ck * v;
  }
  return w;
}

const CCRule& cc_rule() {
  static const CCRule rule = [] {
    CCRule r{};
    for (int k = 0; k <= 32; ++k) r.node[k] = std::cos(kPiL * k / 32.0L);
    r.w32 = cc_weights_33();
    r.w16 = cc_weights_17();
    // sanity: exactness on 1 and x^2 over [-1, 1]
    long double s0 = 0.0L, s2 = 0.0L;
    for (int k = 0; k <= 32; ++k) {
      s0 += r.w32[k];
      s2 += r.w32[k] * r.node[k] * r.node[k];
    }
    if (std::fabs(s0 - 2.0L) > 1e-17L || std::fabs(s2 - 2.0L / 3.0L) > 1e-17L)
      throw InternalError("quadrature weight construction failed self-check");
    return r;
  }();
  return rule;
}

struct QuadOut {
  cld value;
  long double err; // |re| + |im| error bound
  long double l1;  // sum of per-panel |value|, tracks internal cancellation
  bool converged;
};

struct Panel {
  long double a, b;
  cld i32;
  long double err;
  long double l1;
};

struct PanelWorse {
  bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

template <class F>
Panel eval_panel(F&& f, long double a, long double b) {
  const CCRule& r = cc_rule();
  const long double c = 0.5L * (a + b);
  const long double h = 0.5L * (b - a);
  std::array<cld, 33> fv;
  for (int k = 0; k <= 32; ++k) fv[k] = f(c + h * r.node[k]);
  cld i32{0.0L, 0.0L}, i16{0.0L, 0.0L};
  for (int k = 0; k <= 32; ++k) i32 += r.w32[k] * fv[k];
  for (int j = 0; j <= 16; ++j) i16 += r.w16[j] * fv[2 * j];
  i32 *= h;
  i16 *= h;
  const long double err =
      std::fabs(i32.real() - i16.real()) + std::fabs(i32.imag() - i16.imag());
  const long double l1 = std::fabs(i32.real()) + std::fabs(i32.imag());
  return Panel{a, b, i32, err, l1};
}

// Adaptive bisection, worst panel first. Stops when the summed error bound
// drops under max(rel_tol * |I|, 4 eps_L * l1, abs_floor).
template <class F>
QuadOut quad_adaptive(F&& f, long double a, long double b,
                      long double rel_tol = 5e-18L,
                      long double abs_floor = 1e-400L,
                      int max_panels = 30000) {
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
  Panel first = eval_panel(f, a, b);
  cld total = first.i32;
  long double err_total = first.err;
  long double l1_total = first.l1;
  heap.push(first);
  int n_panels = 1;
  while (true) {
    const long double mag =
        std::fabs(total.real()) + std::fabs(total.imag());
    const long double goal =
        std::max({rel_tol * mag, 4.0L * kEpsL * l1_total, abs_floor});
    if (err_total <= goal) return {total, err_total, l1_total, true};
    if (n_panels >= max_panels) return {total, err_total, l1_total, false};
    Panel worst = heap.top();
    heap.pop();
    total -= worst.i32;
    err_total -= worst.err;
    l1_total -= worst.l1;
    const long double mid = 0.5L * (worst.a + worst.b);
    for (const Panel& child :
         {eval_panel(f, worst.a, mid), eval_panel(f, mid, worst.b)}) {
      total += child.i32;
      err_total += child.err;
      l1_total += child.l1;
      heap.push(child);
    }
    ++n_panels;
  }
}

// ---------------------------------------------------------------------------
// erfcx by quadrature: (2/sqrt(pi)) Int_0^inf e^{-u^2 - 2yu} du
// ---------------------------------------------------------------------------

struct ErfcxQuad {
  long double value;
  long double err;
};

ErfcxQuad erfcx_quad_ld(long double y) {
  // integrand underflows past u^2 + 2yu = 11600 even in long double
  const long double upper = -y + std::sqrt(y * y + 11600.0L);
  QuadOut q = quad_adaptive(
      [y](long double u) { return cld(std::exp(-u * u - 2.0L * y * u), 0.0L); },
      0.0L, upper);
  if (!q.converged)
    throw ConvergenceFailureError("oracle erfcx quadrature did not converge");
  return {2.0L * kInvSqrtPiL * q.value.real(),
          2.0L * kInvSqrtPiL * (q.err + 4.0L * kEpsL * q.l1)};
}

// ---------------------------------------------------------------------------
// Segment-path evaluation: w(z) = (cos 2xy - i sin 2xy) (A + iB) with
//   A = e^{-x^2} erfcx(y) - (2/sqrt(pi)) Is,  B = (2/sqrt(pi)) Ic,
//   Ic + i Is = Int_0^x e^{u^2 - x^2} (cos + i sin)(2yu) du.
// ---------------------------------------------------------------------------

OracleResult oracle_segment(double xd, double yd, double target_abs_err) {
  const long double x = std::fabs(static_cast<long double>(xd));
  const long double y = static_cast<long double>(yd);

  const ErfcxQuad ecx = erfcx_quad_ld(y);

  cld seg{0.0L, 0.0L};
  long double seg_err = 0.0L;
  long double seg_l1 = 0.0L;
  if (x > 0.0L) {
    QuadOut q = quad_adaptive(
        [x, y](long double u) {
          const long double mag = std::exp((u - x) * (u + x));
          const long double ph = 2.0L * y * u;
          return cld(mag * std::cos(ph), mag * std::sin(ph));
        },
        0.0L, x);
    if (!q.converged)
      throw ConvergenceFailureError("oracle segment quadrature did not converge");
    seg = q.value;
    seg_err = q.err;
    seg_l1 = q.l1;
  }

  const long double two_isp = 2.0L * kInvSqrtPiL;
  const long double ex2 = std::exp(-x * x);
  const long double A = ex2 * ecx.value - two_isp * seg.imag();
  const long double B = two_isp * seg.real();
  const long double th = 2.0L * x * y;
  const long double c = std::cos(th);
  const long double s = std::sin(th);
  const long double v = c * A + s * B;
  const long double l = c * B - s * A;

  const long double err_ab = ex2 * ecx.err + two_isp * seg_err +
                             4.0L * kEpsL * (ex2 * ecx.value + two_isp * seg_l1);
  const long double est =
      err_ab + kEpsL * th * (std::fabs(A) + std::fabs(B)) +
      4.0L * kEpsL * (std::fabs(v) + std::fabs(l));

  OracleResult out{};
  out.v = static_cast<double>(v);
  out.l = static_cast<double>((xd < 0.0) ? -l : l);
  out.est_abs_err = static_cast<double>(est) +
                    platform_limits().eps * std::max(std::fabs(out.v), std::fabs(out.l));
  out.method = OracleMethod::segment_quadrature;
  (void)target_abs_err;
  return out;
}

// ---------------------------------------------------------------------------
// Large-modulus expansion w(z) = (i/sqrt(pi) z)(1 + 1/(2z^2) + 3/(4z^4) + ...)
// ---------------------------------------------------------------------------

OracleResult oracle_asymptotic(double xd, double yd) {
  const cld z(static_cast<long double>(xd), static_cast<long double>(yd));
  const cld zi2 = 1.0L / (z * z);
  constexpr long double c1 = 0.5L, c2 = 0.75L, c3 = 1.875L, c4 = 6.5625L,
                        c5 = 29.53125L;
  const cld p = 1.0L + zi2 * (c1 + zi2 * (c2 + zi2 * (c3 + zi2 * c4)));
  const cld w = cld(0.0L, 1.0L) * p / z * kInvSqrtPiL;
  const long double az = std::abs(z);
  const long double tail = c5 * std::pow(std::abs(zi2), 5.0L) / az * kInvSqrtPiL;

  OracleResult out{};
  out.v = static_cast<double>(w.real());
  out.l = static_cast<double>(w.imag());
  out.est_abs_err =
      static_cast<double>(tail + 8.0L * kEpsL * std::abs(w)) +
      platform_limits().eps * std::max(std::fabs(out.v), std::fabs(out.l));
  out.method = OracleMethod::asymptotic;
  return out;
}

void check_oracle_point(double x, double y) {
  if (!(std::isfinite(x) && std::isfinite(y)))
    throw InvalidInputError("oracle_w: non-finite input");
  if (y < 0.0)
    throw InvalidInputError("oracle_w: lower half-plane not covered");
}

double default_target(double v, double l) {
  return 1e-14 * std::max({std::fabs(v), std::fabs(l),
                           platform_limits().r_min * 1e3});
}

OracleResult finish(OracleResult r, double target_abs_err) {
  const double target =
      (target_abs_err > 0.0) ? target_abs_err : default_target(r.v, r.l);
  if (!(r.est_abs_err <= target))
    throw ConvergenceFailureError("oracle_w: error estimate above target");
  return r;
}

} // namespace

OracleResult oracle_w(ComplexPoint z, double target_abs_err) {
  check_oracle_point(z.x, z.y);
  const double r2 = z.x * z.x + z.y * z.y;
  if (r2 >= 1e4)
    return finish(oracle_asymptotic(z.x, z.y), target_abs_err);
  if (r2 <= 2500.0) {
    if (std::fabs(z.x) * z.y > 200.0)
      throw ConvergenceFailureError(
          "oracle_w: oscillatory regime x*y > 200 is out of the declared "
          "quadrature region");
    return finish(oracle_segment(z.x, z.y, target_abs_err), target_abs_err);
  }
  throw ConvergenceFailureError("oracle_w: |z| between 50 and 100 is outside "
                                "both oracle regions");
}

OracleResult oracle_w_linear(ComplexPoint z, double target_abs_err) {
  check_oracle_point(z.x, z.y);
  if (z.x * z.x + z.y * z.y > 2500.0)
    throw ConvergenceFailureError("oracle_w_linear: |z| > 50 unsupported");

  const long double x = static_cast<long double>(z.x);
  const long double y = static_cast<long double>(z.y);
  const long double re_mz2 = (y - x) * (y + x); // Re(-z^2) = y^2 - x^2
  const long double im_mz2 = -2.0L * x * y;

  QuadOut q = quad_adaptive(
      [re_mz2, im_mz2](long double t) {
        const long double g = 1.0L - t * t;
        const long double mag = std::exp(re_mz2 * g);
        const long double ph = im_mz2 * g;
        return cld(mag * std::cos(ph), mag * std::sin(ph));
      },
      0.0L, 1.0L);
  if (!q.converged)
    throw ConvergenceFailureError("oracle_w_linear: quadrature did not converge");

  const cld ez2(std::exp(re_mz2) * std::cos(im_mz2),
                std::exp(re_mz2) * std::sin(im_mz2));
  const cld zl(x, y);
  const cld w = ez2 + cld(0.0L, 2.0L * kInvSqrtPiL) * zl * q.value;

  const long double zmag = std::abs(zl);
  const long double est =
      2.0L * kInvSqrtPiL * zmag * (q.err + 8.0L * kEpsL * q.l1) +
      8.0L * kEpsL * std::abs(ez2) + 4.0L * kEpsL * std::abs(w);

  OracleResult out{};
  out.v = static_cast<double>(w.real());
  out.l = static_cast<double>(w.imag());
  out.est_abs_err = static_cast<double>(est) +
                    platform_limits().eps * std::max(std::fabs(out.v), std::fabs(out.l));
  out.method = OracleMethod::scaled_linear_path;
  const double target = (target_abs_err > 0.0)
                            ? target_abs_err
                            : default_target(out.v, out.l);
  if (!(out.est_abs_err <= target))
    throw ConvergenceFailureError("oracle_w_linear: error estimate above target");
  return out;
}

// ---------------------------------------------------------------------------
// Literal sums
// ---------------------------------------------------------------------------

namespace {

struct NeumaierLD {
  long double s = 0.0L;
  long double c = 0.0L;
  void add(long double v) {
    const long double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  long double get() const { return s + c; }
};

} // namespace

SumSet oracle_sums_naive(double xd, double yd, double ad, int n_max) {
  if (n_max < 1)
    throw InvalidInputError("oracle_sums_naive: n_max must be >= 1");
  const long double x = xd, y = yd, a = ad;
  NeumaierLD s1, s2, s3, s4, s5;
  for (int n = 1; n <= n_max; ++n) {
    const long double an = a * n;
    const long double den = an * an + y * y;
    s1.add(std::exp(-(an * an + x * x)) / den);
    s2.add(std::exp(-(an + x) * (an + x)) / den);
    s3.add(std::exp(-(an - x) * (an - x)) / den);
    s4.add(an * std::exp(-(an + x) * (an + x)) / den);
    s5.add(an * std::exp(-(an - x) * (an - x)) / den);
  }
  SumSet out{};
  out.s1 = static_cast<double>(s1.get());
  out.s2 = static_cast<double>(s2.get());
  out.s3 = static_cast<double>(s3.get());
  out.s4 = static_cast<double>(s4.get());
  out.s5 = static_cast<double>(s5.get());
  out.n_used = n_max;
  return out;
}

namespace detail {

double erfcx_by_quadrature(double y) {
  if (!std::isfinite(y) || y < 0.0)
    throw InvalidInputError("erfcx_by_quadrature: argument must be >= 0");
  return static_cast<double>(erfcx_quad_ld(static_cast<long double>(y)).value);
}

long double naive_s45_half_diff(double xd, double yd, double ad, int n_max) {
  const long double x = xd, y = yd, a = ad;
  NeumaierLD s4, s5;
  for (int n = 1; n <= n_max; ++n) {
    const long double an = a * n;
    const long double den = an * an + y * y;
    s4.add(an * std::exp(-(an + x) * (an + x)) / den);
    s5.add(an * std::exp(-(an - x) * (an - x)) / den);
  }
  return 0.5L * (s5.get() - s4.get());
}

long double imag_bracket_ref(double yd, double ad) {
  if (!(yd > 0.0))
    throw InvalidInputError("imag_bracket_ref: requires y > 0");
  const long double y = yd, a = ad;
  NeumaierLD sum;
  for (int n = 1; n <= 4000; ++n) {
    const long double an = a * n;
    const long double t = std::exp(-an * an) * (y * y) / (y * y + an * an);
    sum.add(t);
    if (t < 1e-24L * sum.get() && n > 4) break;
  }
  return -voigt::detail::erfcx_ld(y) +
         a / (kPiL * y) * (1.0L + 2.0L * sum.get());
}

} // namespace detail
} // namespace voigt
