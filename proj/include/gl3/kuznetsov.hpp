// Spectral-side machinery built on the Whittaker, kernel and Kloosterman
// modules: the H_w integral transforms, Kontorovich-Lebedev inversion and
// its round-trip diagnostic, truncated geometric-side sums of the Kuznetsov
// formula, the Weyl-law main term, the two error-diagnostic integrals, and
// the smoothed spectral-window indicator.
//
// The full Kuznetsov identity (spectral side = geometric side) needs
// cusp-form data that no closed form provides, so this module exposes the
// geometric side and its convergence diagnostics only; the spectral side
// appears solely through the main-term weight spec^d.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gl3/kernels.hpp"
#include "gl3/kloosterman.hpp"
#include "gl3/types.hpp"
#include "gl3/whittaker.hpp"

namespace gl3 {

// A spectral test function r -> F(r), holomorphic and Schwartz-class on the
// strip |Re r| < strip.  Both properties are caller-asserted; decay is a
// scale hint used to seed truncation of vertical-line quadratures.
struct TestFunction {
  std::function<cx(cx)> eval;
  double strip = 0.25;
  double decay = 1.0;
};

// A window on the unitary spectral line i*R, either the box
// { i t : lo <= t <= hi } or the ball { r : |r - i center| < radius }.
struct SpectralWindow {
  enum class Shape { kBox, kBall } shape = Shape::kBox;
  double lo = 0.0;
  double hi = 0.0;
  double center = 0.0;
  double radius = 0.0;

  static SpectralWindow box(double lo, double hi) {
    SpectralWindow w;
    w.shape = Shape::kBox;
    w.lo = lo;
    w.hi = hi;
    return w;
  }
  static SpectralWindow ball(double center, double radius) {
    SpectralWindow w;
    w.shape = Shape::kBall;
    w.center = center;
    w.radius = radius;
    return w;
  }
};

// Logarithmic quadrature grid on Y+: n x n points with log y_i uniform over
// [lo, hi].  The default is the reference grid for the inversion
// round-trip; its window is wide enough that both the y -> 0 oscillatory
// tail and the exponential large-y decay are below the 1e-3 target for
// d <= 3 under refinement.
struct LogGrid {
  double lo = -5.0;
  double hi = 2.5;
  int n = 80;
};

// H_w(F; y) = (1/|y1 y2|) int_{Re r=0} F(r) K^d_w(y, r) spec^d(r) dr,
// by midpoint-trapezoid quadrature along the line, extended outward until
// two consecutive node blocks contribute below tol relative to the running
// sum.  K_I = 1 needs no kernel evaluation, and the (+,+) orthant of w_l
// returns an exact 0.  Throws NonConvergent if the truncation never
// settles; kernel-range errors propagate.
cx h_transform(KernelTag w, int d, const TestFunction& F,
               const SignedTorusPoint& y, double tol = 1e-8);

// F^flat(y) = int_{Re r=0} F(r) W^{d*}(y, r) sin^d(r) dr, returned as the
// (2d+1)-coordinate row vector.
std::vector<cx> kl_flat(const TestFunction& F, int d, const TorusPoint& y,
                        double tol = 1e-6);

// f^sharp(r) = int_{Y+} f(y) conj(W^{d*}(y, r))^T dy, dy = dy1 dy2/(y1y2)^3,
// over the given log grid.  f must produce (2d+1)-coordinate vectors
// (DimensionMismatch otherwise); r must sit on the unitary line.
cx kl_sharp(const std::function<std::vector<cx>(const TorusPoint&)>& f, int d,
            const LogGrid& grid, cx r, double tol = 1e-6);

struct KlRoundtripReport {
  std::vector<cx> recovered;   // (F^flat)^sharp at the sample points
  std::vector<cx> reference;   // F at the sample points
  double max_rel_error = 0.0;  // relative where |F| >= 1e-8, absolute below
};

// Composes flat then sharp on the log grid and compares against F at the
// sample points (all on Re r = 0).  The Whittaker rows are shared between
// the two stages, the r < 0 half-line is folded by the conjugation symmetry
// of W on the unitary line, and the y1 <-> y2 half of the grid is completed
// through the dual functional equation, so each grid point costs one row
// evaluation per node.
KlRoundtripReport kl_roundtrip(const TestFunction& F, int d,
                               const std::vector<cx>& samples,
                               double tol = 1e-6, const LogGrid& grid = {});

// Truncated geometric side of the Kuznetsov formula for characters m, n:
// the four terms
//   K_I  = [|m1|=|n1|][|m2|=|n2|] H_I(F; (1,1)),
//   K_4  = sum_{eps} sum_{eps1 m2 c1 = n1 c2^2} S_{w4}(psi_m, psi_{eps n}, c)
//          / (c1 c2) * H_{w4}(F; (eps1 eps2 m1 m2^2 n2 / (c2^3 n1), 1)),
//   K_5  = sum_{eps} sum_{eps2 m1 c2 = n2 c1^2} S_{w5}(psi_m, psi_{eps n}, c)
//          / (c1 c2) * H_{w5}(F; (1, eps1 eps2 m1^2 m2 n1 / (c1^3 n2))),
//   K_l  = sum_{eps} sum_{c1,c2} S_{wl}(psi_m, psi_{eps n}, c) / (c1 c2)
//          * H_{wl}(F; (eps2 m1 n2 c2 / c1^2, eps1 m2 n1 c1 / c2^2)),
// with every c-sum truncated at c1, c2 <= cutoff.  Kernel arguments are
// assembled in exact integer rationals before conversion to floating torus
// points.  shell_* records sum |term| over the terms with max(c1,c2) = k at
// index k-1; the magnitude of the last populated shell is the tail
// heuristic.
struct GeometricSideReport {
  cx k_identity{};
  cx k_w4{};
  cx k_w5{};
  cx k_wl{};
  int cutoff = 0;
  std::vector<double> shell_w4;
  std::vector<double> shell_w5;
  std::vector<double> shell_wl;
  cx total() const { return k_identity + k_w4 + k_w5 + k_wl; }
};

GeometricSideReport geometric_side(const TestFunction& F, int d,
                                   const CharacterIndex& m,
                                   const CharacterIndex& n, int cutoff,
                                   double tol = 1e-8);

// (3/2pi) int_window spec^d(r) dr by the exact antiderivative of the
// quadratic polynomial spec^d along the unitary line:
//   (3(d-1)/(32 pi^5)) [ ((d-1)/2)^2 (b-a) + 3 (b^3 - a^3) ],
// where [a, b] is the window's parameter interval.  Empty windows give 0.
double weyl_main_term(const SpectralWindow& window, int d);

// The two error-diagnostic integrals attached to the spectral estimate:
//   E1 = int_{Re r=0}       |F(r)| (d + |r|)^{1+epsilon} |dr|,
//   E2 = int_{Re r=-1/4-eta} (|F(r)| + |F(-r)|) d (d + |r|)^{-1/2+epsilon}
//        |dr|,
// with 0 < eta < F.strip required.  Throws NonConvergent if the tails never
// settle (F of insufficient decay).
std::pair<double, double> error_diagnostics(const TestFunction& F, int d,
                                            double eta = 0.01,
                                            double epsilon = 0.01);

// The smoothed indicator of a box window: the entire function
//   F(r) = sqrt(log(d+T)/pi) int_lo^hi exp(log(d+T) (r - i t')^2) dt',
// a unit-mass Gaussian mollification of the window's characteristic
// function.  On the unitary line it is within exp(-log(d+T) dist^2)-type
// error of the sharp indicator, and off the line it obeys
// |F(r)| << (d+T)^{Re(r)^2} plus a rapidly-decaying remainder.  Requires
// the box shape and hi > lo.
TestFunction smoothed_indicator(const SpectralWindow& window, int d,
                                double T);

}  // namespace gl3
