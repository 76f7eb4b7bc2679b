#include "gl3/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/fft.hpp"
#include "gl3/reduce.hpp"

namespace gl3 {

namespace {

constexpr double kFourPiSq = 4.0 * kPi * kPi;
constexpr double kEightPiCu = 8.0 * kPi * kPi * kPi;
// Hard rail on the series argument; far below it the alternating terms have
// already consumed the double-precision budget.
constexpr double kSeriesRange = 1e3;
constexpr int kSeriesCap = 400;
// Margin at which a gamma argument counts as sitting on a nonpositive
// integer: reciprocal factors become exact zeros, numerator factors make the
// parameters degenerate.
constexpr double kZeroMargin = 1e-9;

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

// (base)^n for the small integer exponents d; avoids std::pow phase fuzz.
cx int_pow(cx base, int n) {
  cx out(1.0, 0.0);
  for (int k = 0; k < n; ++k) out *= base;
  return out;
}

// (+-1)^n without a round trip through floating-point pow.
double pm_pow(int sign, int n) { return (sign < 0 && (n & 1)) ? -1.0 : 1.0; }

void check_signed_torus(const SignedTorusPoint& y) {
  if (y.y1 == 0.0 || y.y2 == 0.0) {
    throw RangeExceeded("signed torus point: both coordinates must be nonzero");
  }
}

void check_tol(double tol, const char* who) {
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw RangeExceeded(std::string(who) + ": tol must lie in (0, 1)");
  }
}

// Per-axis table of the three-factor denominator gamma products.  zero[n]
// flags rows annihilated by a reciprocal gamma at a nonpositive integer.
struct AxisTable {
  std::vector<cx> logden;
  std::vector<char> zero;
};

AxisTable axis_table(const std::array<cx, 3>& c, int len) {
  AxisTable t;
  t.logden.resize(len);
  t.zero.assign(len, 0);
  for (int n = 0; n < len; ++n) {
    cx acc(0.0, 0.0);
    for (const cx& ci : c) {
      const cx arg = ci + double(n);
      if (near_gamma_pole(arg, kZeroMargin)) {
        t.zero[n] = 1;
        break;
      }
      acc += log_gamma(arg);
    }
    if (!t.zero[n]) t.logden[n] = acc;
  }
  return t;
}

double contour_step(double tol, double base_height, double step, double* height) {
  *height = (tol < 3e-8) ? 2.0 * base_height : base_height;
  return step;
}

// Smooth roll-off over the outer quarter of a truncated contour; kills the
// boundary term of the trapezoid without touching the bulk.
double taper(double abs_t, double height) {
  const double a = abs_t / height;
  if (a <= 0.75) return 1.0;
  const double c = std::cos(kTwoPi * (a - 0.75));
  return c * c;
}

// Legality of a shifted abscissa: the axis gamma factor has poles at
// Re s = pole_re - k, and the evaluator collects exactly the k = 0 residue,
// so sigma must sit between the k = 0 and k = 1 poles; it must also stay
// inside the Mellin strip (-(d-1)/2, 3/4) shared by the Q factor and the
// Bessel residue transform.
void check_mb_window(int d, double pole_re, double sigma, const char* axis) {
  const double lo = std::max(pole_re - 1.0, -0.5 * (d - 1)) + 0.1;
  const double hi = std::min(pole_re, 0.75) - 0.1;
  if (!(sigma >= lo && sigma <= hi)) {
    throw PoleOnContour(std::string("kernel_eval_mb: abscissa ") + axis +
                        " outside the single-residue window");
  }
}

cx log_q(int d, cx s) {
  return log_gamma(0.5 * (d - 1) + s) - log_gamma(0.5 * (d + 1) - s);
}

cx kernel_mb_w4(const SpectralPoint& p, const SignedTorusPoint& y,
                const KernelContour& ct, double tol) {
  const int d = p.d;
  const int e1 = sign_of(y.y1);
  const cx tr = 3.0 * p.r;
  check_mb_window(d, -tr.real(), ct.s1, "s1");
  const double x = kEightPiCu * std::abs(y.y1);
  const double lx = std::log(x);
  double height = 0.0;
  const double h = contour_step(tol, 800.0, 0.04, &height);
  const int n = static_cast<int>(std::lround(height / h));
  const cx phase = cx(0.0, 0.5 * e1 * kPi);
  // The gamma factor concentrates near Im s = -Im(3r); recentering the
  // contour nodes there keeps the mass away from the taper at every r.
  const double off = tr.imag();
  std::vector<cx> terms(2 * n + 1);
  for (int j = -n; j <= n; ++j) {
    const cx s(ct.s1, j * h - off);
    const cx lv =
        (1.0 - p.r - s) * lx + log_q(d, s) + log_gamma(s + tr) + phase * (s + tr);
    terms[n + j] = std::exp(lv) * taper(std::abs(j) * h, height);
  }
  const cx line = pairwise_sum(terms) * (h / kTwoPi);
  const cx residue = std::exp((1.0 + 2.0 * p.r) * lx) * q_factor(d, -tr);
  return int_pow(cx(0.0, double(e1)), d) / kFourPiSq * (residue + line);
}

cx kernel_mb_wl(const SpectralPoint& p, const SignedTorusPoint& y,
                const KernelContour& ct, double tol) {
  const int e1 = sign_of(y.y1);
  const int e2 = sign_of(y.y2);
  if (e1 > 0 && e2 > 0) return cx(0.0, 0.0);
  // Sign chamber: 0 = (-,-), 1 = (-,+), 2 = (+,-).
  const int kind = (e1 < 0 && e2 < 0) ? 0 : (e1 < 0 ? 1 : 2);
  const int d = p.d;
  const cx tr = 3.0 * p.r;
  check_mb_window(d, -tr.real(), ct.s1, "s1");
  check_mb_window(d, tr.real(), ct.s2, "s2");

  const double hp = 0.5 * kPi;
  const double x1 = kFourPiSq * std::abs(y.y1);
  const double x2 = kFourPiSq * std::abs(y.y2);
  const double lx1 = std::log(x1);
  const double lx2 = std::log(x2);

  // Residues of the k = 0 crossings, in closed form: shifting an axis across
  // its beta-factor pole leaves a one-dimensional integral that is exactly
  // the Mellin inversion of J_{d-1}(2 sqrt(u)) on the other axis.
  const cx p1 = std::exp((1.0 + tr) * lx1) * q_factor(d, -tr);
  const cx p2 = std::exp((1.0 - tr) * lx2) * q_factor(d, tr);
  const double mj1 = x1 * std::cyl_bessel_j(double(d - 1), 2.0 * std::sqrt(x1));
  const double mj2 = x2 * std::cyl_bessel_j(double(d - 1), 2.0 * std::sqrt(x2));

  double height = 0.0;
  const double h = contour_step(tol, 600.0, 0.05, &height);
  const int n = static_cast<int>(std::lround(height / h));

  // Log tables of the two axis factors and the coupling factor, over the full
  // contour range (axes) and twice that range (coupling argument s1 + s2).
  // The axis gamma factors concentrate near Im s1 = -Im(3r) and
  // Im s2 = +Im(3r); recentering each axis there restores the r = 0 profile
  // that the tilt, taper and strip geometry below is shaped for, while the
  // coupling argument s1 + s2 is offset-free because the two shifts cancel.
  const double off = tr.imag();
  std::vector<cx> lf1(2 * n + 1), lf2(2 * n + 1), lg(4 * n + 1);
  for (int j = -n; j <= n; ++j) {
    const cx s1(ct.s1, j * h - off);
    const cx s2(ct.s2, j * h + off);
    cx v1 = (1.0 - s1) * lx1 + log_q(d, s1);
    cx v2 = (1.0 - s2) * lx2 + log_q(d, s2);
    if (kind == 0 || kind == 2) {
      v1 += log_gamma(s1 + tr);
    } else {
      v1 -= log_gamma(1.0 - s1 - tr);
    }
    if (kind == 0 || kind == 1) {
      v2 += log_gamma(s2 - tr);
    } else {
      v2 -= log_gamma(1.0 + tr - s2);
    }
    lf1[n + j] = v1;
    lf2[n + j] = v2;
  }
  const double su = ct.s1 + ct.s2;
  for (int m = -2 * n; m <= 2 * n; ++m) {
    const cx u(su, m * h);
    if (kind == 0) {
      // 1/Gamma(u) is entire; at a gamma pole it is an exact zero.
      lg[2 * n + m] = near_gamma_pole(u) ? cx(-1e30, 0.0) : -log_gamma(u);
    } else {
      lg[2 * n + m] = log_gamma(1.0 - u);
    }
  }

  // Weighted half-axis arrays: w[j] = f(sign j h) e^{tilt sign j h}, tapered.
  // The tilt offsets the exponential growth/decay so every stored value is
  // polynomially bounded; negative halves skip j = 0 to avoid double counts.
  auto half = [&](const std::vector<cx>& lf, int sign, double tilt) {
    std::vector<cx> w(static_cast<std::size_t>(n) + 1, cx(0.0, 0.0));
    for (int j = (sign > 0 ? 0 : 1); j <= n; ++j) {
      const double t = sign * j * h;
      w[j] = std::exp(lf[n + sign * j] + cx(tilt * t, 0.0)) * taper(std::abs(t), height);
    }
    return w;
  };
  // Coupling array along u = sign m h, m = 0..2n, carrying the inverse tilt.
  auto g_same = [&](int sign, double tilt) {
    std::vector<cx> g(2 * static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= 2 * n; ++m) {
      const double u = sign * m * h;
      g[m] = std::exp(lg[2 * n + sign * m] - cx(tilt * u, 0.0));
    }
    return g;
  };
  auto dot = [&](const std::vector<cx>& ab, const std::vector<cx>& g) {
    std::vector<cx> terms(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) terms[m] = ab[m] * g[m];
    return pairwise_sum(terms);
  };
  // One same-sign quadrant, collapsed by FFT: sum_{j,k} a_j b_k g_{j+k}.
  auto quad_same = [&](int sign, double tilt) {
    const std::vector<cx> a = half(lf1, sign, tilt);
    const std::vector<cx> b = half(lf2, sign, tilt);
    return dot(linear_convolution(a, b), g_same(sign, tilt));
  };
  // One mixed-sign quadrant (sign1 on axis 1, -sign1 on axis 2): reverse the
  // negative-half array so the convolution index m pairs with u = (m - n) h.
  auto quad_mixed = [&](int sign1, double tilt) {
    const std::vector<cx> a = half(lf1, sign1, tilt);
    const std::vector<cx> b = half(lf2, -sign1, tilt);
    const std::vector<cx>& neg = (sign1 > 0) ? b : a;
    std::vector<cx> rev(neg.rbegin(), neg.rend());
    const std::vector<cx> ab = (sign1 > 0) ? linear_convolution(a, rev)
                                           : linear_convolution(rev, b);
    std::vector<cx> g(2 * static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= 2 * n; ++m) {
      const double u = (m - n) * h;
      g[m] = std::exp(lg[2 * n + (m - n)] - cx(tilt * u, 0.0));
    }
    return dot(ab, g);
  };

  cx csum(0.0, 0.0);
  if (kind != 0) {
    // Both gamma factors decay on one diagonal and the coupling factor on the
    // other; a +-pi/2 tilt per quadrant keeps all four FFT-collapsible.
    const double tilt_pm = (kind == 1) ? -hp : hp;
    csum = quad_same(+1, -hp) + quad_same(-1, hp) + quad_mixed(+1, tilt_pm) +
           quad_mixed(-1, -tilt_pm);
  } else {
    // The (-,-) coupling factor 1/Gamma(s1+s2) grows on both mixed-sign
    // diagonals, so no shared tilt exists there.  The mixed quadrants instead
    // decay like e^{-pi min(|t1|, |t2|)} and are summed directly on strips of
    // width w along each axis, rebalancing the far factor against the
    // coupling growth row by row; outside the strips the integrand is below
    // e^{-pi w} and is dropped.
    const std::vector<cx> a_pp = half(lf1, +1, hp);
    const std::vector<cx> b_pp = half(lf2, +1, hp);
    const std::vector<cx> a_mm = half(lf1, -1, -hp);
    const std::vector<cx> b_mm = half(lf2, -1, -hp);
    const std::vector<cx> g_pp = g_same(+1, hp);
    const std::vector<cx> g_mm = g_same(-1, -hp);
    csum += dot(linear_convolution(a_pp, b_pp), g_pp);
    csum += dot(linear_convolution(a_mm, b_mm), g_mm);

    const int kw = static_cast<int>(std::lround(12.0 / h));
    std::vector<cx> raw1(2 * kw + 1), raw2(2 * kw + 1), rawg(4 * kw + 1);
    for (int j = -kw; j <= kw; ++j) {
      raw1[kw + j] = std::exp(lf1[n + j]);
      raw2[kw + j] = std::exp(lf2[n + j]);
    }
    for (int m = -2 * kw; m <= 2 * kw; ++m) rawg[2 * kw + m] = std::exp(lg[2 * n + m]);

    cx strips(0.0, 0.0);
    // Quadrant t1 >= 0, t2 < 0: near-axis strip k <= kw over all j ...
    for (int k = 1; k <= kw; ++k) {
      cx corner(0.0, 0.0);
      for (int j = 0; j <= kw; ++j) corner += raw1[kw + j] * rawg[2 * kw + j - k];
      cx tail(0.0, 0.0);
      for (int j = kw + 1; j <= n; ++j) tail += a_pp[j] * g_pp[j - k];
      strips += raw2[kw - k] * (corner + std::exp(-hp * k * h) * tail);
    }
    // ... plus the far half k > kw of the strip j <= kw.
    for (int j = 0; j <= kw; ++j) {
      cx tail(0.0, 0.0);
      for (int k = kw + 1; k <= n; ++k) tail += b_mm[k] * g_mm[k - j];
      strips += raw1[kw + j] * std::exp(-hp * j * h) * tail;
    }
    // Mirror quadrant t1 < 0, t2 >= 0.
    for (int j = 1; j <= kw; ++j) {
      cx corner(0.0, 0.0);
      for (int k = 0; k <= kw; ++k) corner += raw2[kw + k] * rawg[2 * kw + k - j];
      cx tail(0.0, 0.0);
      for (int k = kw + 1; k <= n; ++k) tail += b_pp[k] * g_pp[k - j];
      strips += raw1[kw - j] * (corner + std::exp(-hp * j * h) * tail);
    }
    for (int k = 0; k <= kw; ++k) {
      cx tail(0.0, 0.0);
      for (int j = kw + 1; j <= n; ++j) tail += a_mm[j] * g_mm[j - k];
      strips += raw2[kw + k] * std::exp(-hp * k * h) * tail;
    }
    csum += strips;
  }

  const cx line2 = csum * ((h / kTwoPi) * (h / kTwoPi));
  cx inner;
  if (kind == 0) {
    inner = pm_pow(-1, d) * (p1 * mj2 + p2 * mj1 + line2);
  } else if (kind == 1) {
    inner = p2 * mj1 + line2;
  } else {
    inner = p1 * mj2 + line2;
  }
  const cx pref =
      std::exp(p.r * cx(std::log(std::abs(y.y2)) - std::log(std::abs(y.y1)), 0.0)) /
      kFourPiSq;
  return pref * inner;
}

}  // namespace

cx q_factor(int d, cx s) {
  if (d < 2) throw RangeExceeded("q_factor: d must be at least 2");
  const cx num = 0.5 * (d - 1) + s;
  const cx den = 0.5 * (d + 1) - s;
  if (near_gamma_pole(num)) {
    throw PoleOfGamma("q_factor: gamma pole at (d-1)/2 + s");
  }
  if (near_gamma_pole(den)) return cx(0.0, 0.0);
  return std::exp(log_gamma(num) - log_gamma(den));
}

cx j_wl_series(const std::array<cx, 3>& mu, const SignedTorusPoint& y, double tol) {
  check_signed_torus(y);
  check_tol(tol, "j_wl_series");
  const double x1 = kFourPiSq * std::abs(y.y1);
  const double x2 = kFourPiSq * std::abs(y.y2);
  if (x1 > kSeriesRange || x2 > kSeriesRange) {
    throw RangeExceeded("j_wl_series: |4 pi^2 y| above 1e3");
  }
  const cx a = mu[0] - mu[2];
  if (near_gamma_pole(a + 1.0, kZeroMargin)) {
    throw DegenerateParameter(
        "j_wl_series: mu1 - mu3 at a negative integer puts the numerator "
        "gamma on a pole at every order");
  }

  const std::array<cx, 3> c1{a + 1.0, mu[1] - mu[2] + 1.0, cx(1.0, 0.0)};
  const std::array<cx, 3> c2{cx(1.0, 0.0), mu[0] - mu[1] + 1.0, a + 1.0};
  const AxisTable t1 = axis_table(c1, kSeriesCap + 1);
  const AxisTable t2 = axis_table(c2, kSeriesCap + 1);
  std::vector<cx> lognum(2 * kSeriesCap + 1);
  lognum[0] = log_gamma(a + 1.0);
  for (int k = 0; k < 2 * kSeriesCap; ++k) {
    lognum[k + 1] = lognum[k] + std::log(a + 1.0 + double(k));
  }

  const double lx1 = std::log(x1);
  const double lx2 = std::log(x2);
  const int sg1 = sign_of(y.y1);
  const int sg2 = sign_of(y.y2);
  // Terms keep growing roughly until the index passes 2 sqrt(x); only beyond
  // that gate is a run of small terms evidence of convergence.
  const int gate1 = static_cast<int>(2.0 * std::sqrt(x1)) + 8;
  const int gate2 = static_cast<int>(2.0 * std::sqrt(x2)) + 8;

  cx total(0.0, 0.0);
  int row_small = 0;
  bool outer_done = false;
  for (int n1 = 0; n1 <= kSeriesCap && !outer_done; ++n1) {
    if (t1.zero[n1]) continue;
    const double base1 = double(n1) * lx1;
    const double rsg = pm_pow(sg1, n1);
    cx row(0.0, 0.0);
    int small = 0;
    bool inner_done = false;
    for (int n2 = 0; n2 <= kSeriesCap; ++n2) {
      if (t2.zero[n2]) continue;
      const cx term = (rsg * pm_pow(sg2, n2)) *
                      std::exp(lognum[n1 + n2] - t1.logden[n1] - t2.logden[n2] +
                               cx(base1 + double(n2) * lx2, 0.0));
      row += term;
      if (std::abs(term) <= tol * (std::abs(total + row) + 1e-300)) {
        if (++small >= 3 && n2 >= gate2) {
          inner_done = true;
          break;
        }
      } else {
        small = 0;
      }
    }
    if (!inner_done) {
      throw NonConvergent("j_wl_series: inner series still growing at order 400");
    }
    total += row;
    if (std::abs(row) <= tol * (std::abs(total) + 1e-300)) {
      if (++row_small >= 3 && n1 >= gate1) outer_done = true;
    } else {
      row_small = 0;
    }
  }
  if (!outer_done) {
    throw NonConvergent("j_wl_series: series still growing at order 400");
  }
  return std::exp((1.0 - mu[2]) * lx1 + (1.0 + mu[0]) * lx2) * total;
}

cx j_w4_series(const std::array<cx, 3>& mu, double y1, double tol) {
  if (y1 == 0.0) throw RangeExceeded("j_w4_series: y1 must be nonzero");
  check_tol(tol, "j_w4_series");
  if (kFourPiSq * std::abs(y1) > kSeriesRange) {
    throw RangeExceeded("j_w4_series: |4 pi^2 y1| above 1e3");
  }
  const double x = kEightPiCu * std::abs(y1);
  const cx c1 = mu[0] - mu[2] + 1.0;
  const cx c2 = mu[1] - mu[2] + 1.0;
  const double lx = std::log(x);
  const cx step(0.0, y1 < 0.0 ? 1.0 : -1.0);  // (-i sgn y1)^n accumulator
  const int gate = static_cast<int>(2.0 * std::sqrt(x)) + 8;
  cx total(0.0, 0.0);
  cx phase(1.0, 0.0);
  int small = 0;
  bool done = false;
  for (int n = 0; n <= kSeriesCap && !done; ++n, phase *= step) {
    if (near_gamma_pole(c1 + double(n), kZeroMargin) ||
        near_gamma_pole(c2 + double(n), kZeroMargin)) {
      continue;
    }
    const cx term = phase * std::exp(cx(double(n) * lx - log_factorial(n), 0.0) -
                                     log_gamma(c1 + double(n)) -
                                     log_gamma(c2 + double(n)));
    total += term;
    if (std::abs(term) <= tol * (std::abs(total) + 1e-300)) {
      if (++small >= 3 && n >= gate) done = true;
    } else {
      small = 0;
    }
  }
  if (!done) {
    throw NonConvergent("j_w4_series: series still growing at order 400");
  }
  return std::exp((1.0 - mu[2]) * lx) * total;
}

cx kernel_eval_series(KernelTag tag, const SpectralPoint& p,
                      const SignedTorusPoint& y, double tol) {
  check_signed_torus(y);
  const auto mu = mu_params(p);
  if (tag == KernelTag::kI) return cx(1.0, 0.0);
  if (tag == KernelTag::kW5) {
    // K_{w5}(y; r) = K_{w4}((-y2, y1); -r).
    return kernel_eval_series(KernelTag::kW4, SpectralPoint{p.d, -p.r},
                              SignedTorusPoint{-y.y2, y.y1}, tol);
  }
  const int e1 = sign_of(y.y1);
  const int e2 = sign_of(y.y2);
  if (tag == KernelTag::kWl && e1 > 0 && e2 > 0) return cx(0.0, 0.0);

  const cx pcos = std::cos(kPi * (0.5 * p.d + 3.0 * p.r));
  if (std::abs(pcos) <= 1e-8) {
    throw DegeneratePrefactor(
        "kernel prefactor cos(pi (d/2 + 3r)) vanishes; the removable "
        "singularity is not resolved here");
  }
  if (tag == KernelTag::kW4) {
    const auto mu4 = weyl_apply(WeylWord::kW4, mu);
    const cx shear =
        std::exp(cx(0.0, -0.5 * kPi * e1) * (0.5 * (p.d - 1.0) - 3.0 * p.r));
    const cx combo = int_pow(cx(0.0, -double(e1)), p.d) *
                     (j_w4_series(mu4, y.y1, tol) * shear - j_w4_series(mu, y.y1, tol));
    return combo / (4.0 * kPi * pcos);
  }
  // w_l: indicator-weighted combination over the sign chamber.
  cx sum(0.0, 0.0);
  if (e1 < 0) {
    sum += pm_pow(e2, p.d) * j_wl_series(weyl_apply(WeylWord::kW4, mu), y, tol);
  }
  if (e2 < 0) {
    sum += pm_pow(-e1, p.d) * j_wl_series(mu, y, tol);
  }
  if (e1 * e2 < 0) {
    sum -= pm_pow(-e1, p.d) * j_wl_series(weyl_apply(WeylWord::kW3, mu), y, tol);
  }
  return sum / (-4.0 * kPi * pcos);
}

cx kernel_eval_mb(KernelTag tag, const SpectralPoint& p, const SignedTorusPoint& y,
                  KernelContour contour, double tol) {
  check_signed_torus(y);
  check_tol(tol, "kernel_eval_mb");
  (void)mu_params(p);
  if (tag == KernelTag::kW4) return kernel_mb_w4(p, y, contour, tol);
  if (tag == KernelTag::kWl) return kernel_mb_wl(p, y, contour, tol);
  throw RangeExceeded(
      "kernel_eval_mb: only the w4 and wl kernels have a Mellin-Barnes route");
}

cx kernel_eval_auto(KernelTag tag, const SpectralPoint& p,
                    const SignedTorusPoint& y, double tol) {
  check_signed_torus(y);
  check_tol(tol, "kernel_eval_auto");
  (void)mu_params(p);
  if (tag == KernelTag::kI) return cx(1.0, 0.0);
  if (tag == KernelTag::kW5) {
    // Same reduction the series route uses: K_{w5}(y; r) = K_{w4}((-y2, y1); -r).
    return kernel_eval_auto(KernelTag::kW4, SpectralPoint{p.d, -p.r},
                            SignedTorusPoint{-y.y2, y.y1}, tol);
  }
  if (tag == KernelTag::kWl && y.y1 > 0.0 && y.y2 > 0.0) return cx(0.0, 0.0);

  // Cancellation estimate for the ascending series: decimal digits lost to the
  // alternating-term growth before decay sets in.  Calibrated against the
  // Mellin-Barnes route over a logarithmic grid in y; the fit is worst (and
  // these bounds tightest) near Im r = 0 and only improves away from it.
  double lost = 0.0;
  if (tag == KernelTag::kW4) {
    lost = (3.0 * std::cbrt(kEightPiCu * std::abs(y.y1)) + 2.0) / std::log(10.0);
  } else {
    lost = 1.25 * (std::sqrt(kFourPiSq * std::abs(y.y1)) +
                   std::sqrt(kFourPiSq * std::abs(y.y2))) +
           1.0;
  }
  const double target = std::clamp(tol, 1e-12, 1e-3);
  if (lost <= 15.66 + std::log10(target)) {
    try {
      return kernel_eval_series(tag, p, y, std::min(1e-10, target));
    } catch (const DegeneratePrefactor&) {
      // cos(pi (d/2 + 3r)) ~ 0: the contour route resolves this removable
      // singularity, so fall through to it.
    }
  }
  const double floor = (tag == KernelTag::kWl) ? 1e-7 : 1e-8;
  return kernel_eval_mb(tag, p, y, KernelContour{}, std::max(tol, floor));
}

}  // namespace gl3
