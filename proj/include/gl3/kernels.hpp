// Kernel functions attached to the four relevant Weyl cells: the power
// series J_{w_l} and J_{w_4}, the kernel combinations K_I, K_{w_4}, K_{w_5},
// K_{w_l} built from them, and independent Mellin-Barnes evaluations of the
// w_4 and w_l kernels used to cross-check the series route.
#pragma once

#include <array>

#include "gl3/types.hpp"
#include "gl3/whittaker.hpp"

namespace gl3 {

// Torus point with signed coordinates.  The signs epsilon = (sgn y1, sgn y2)
// select which power-series terms enter each kernel combination.
struct SignedTorusPoint {
  double y1 = 1.0;
  double y2 = 1.0;
};

enum class KernelTag { kI, kW4, kW5, kWl };

// Q(d, s) = Gamma((d-1)/2 + s) / Gamma((d+1)/2 - s).  Throws PoleOfGamma at
// numerator poles; denominator poles give an exact zero.
cx q_factor(int d, cx s);

// J_{w_l}(y, mu) = |4 pi^2 y1|^{1-mu3} |4 pi^2 y2|^{1+mu1}
//     * sum_{n1,n2 >= 0} Gamma(n1 + n2 + mu1 - mu3 + 1)
//         * (4 pi^2 y1)^{n1} (4 pi^2 y2)^{n2}
//         / prod_{i=1..3} [Gamma(n1 + mui - mu3 + 1) Gamma(n2 + mu1 - mui + 1)].
// Reciprocal gamma factors at nonpositive integers annihilate the term, so
// permuted parameter orderings whose denominators degenerate stay finite.
// Parameter orderings with mu1 - mu3 at a nonpositive integer put the shared
// numerator gamma on a pole at every order and are rejected with
// DegenerateParameter.  Practical range |4 pi^2 y_i| <= 1e3; beyond it the
// alternating series loses too many digits and RangeExceeded is thrown.
cx j_wl_series(const std::array<cx, 3>& mu, const SignedTorusPoint& y,
               double tol = 1e-12);

// J_{w_4}(y, mu) = |8 pi^3 y1|^{1-mu3}
//     * sum_{n >= 0} (-8 pi^3 i y1)^n
//         / (n! Gamma(n + 1 + mu1 - mu3) Gamma(n + 1 + mu2 - mu3)).
// Only y1 enters.  Same range rule as j_wl_series on |4 pi^2 y1|.
cx j_w4_series(const std::array<cx, 3>& mu, double y1, double tol = 1e-12);

// The kernel functions at spectral point p = {d, r}, mu = mu_params(p):
//   K_I = 1,
//   4 pi cos(pi (d/2 + 3r)) K_{w_4}(y; r)
//       = (-e1 i)^d [ J_{w_4}(y, mu^{w_4}) e^{-e1 i (pi/2) ((d-1)/2 - 3r)}
//                     - J_{w_4}(y, mu) ],
//   K_{w_5}(y; r) = K_{w_4}((-y2, y1); -r),
//   -4 pi cos(pi (d/2 + 3r)) K_{w_l}(y; r)
//       = [e1 = -1] e2^d J_{w_l}(y, mu^{w_4})
//         + [e2 = -1] (-e1)^d J_{w_l}(y, mu)
//         - [e1 e2 = -1] (-e1)^d J_{w_l}(y, mu^{w_3}),
// where e1 = sgn y1, e2 = sgn y2 and [..] is an indicator.  K_{w_l} vanishes
// identically on the (+, +) sign chamber.  Throws DegeneratePrefactor when
// |cos(pi (d/2 + 3r))| <= 1e-8 (the combinations have removable
// singularities there, which this evaluator does not resolve).
cx kernel_eval_series(KernelTag tag, const SpectralPoint& p,
                      const SignedTorusPoint& y, double tol = 1e-12);

// Contour abscissae for the Mellin-Barnes evaluations.  Both evaluators
// shift the textbook contours left across exactly the rightmost pole of the
// beta-type gamma factor on each axis, picking up that residue in closed
// form, so a legal abscissa must sit between that pole and the next one and
// right of the Q-factor poles: sigma in (max(-1, -(d-1)/2), 0) up to 0.1
// margins, adjusted by -+ Re(3r) on the s1/s2 axis.  PoleOnContour otherwise.
// The margin is an accuracy guard, not just a legality one: trapezoid
// aliasing decays like exp(-2 pi dist / step), so an abscissa 0.05 from the
// d = 2 Q-factor pole at -1/2 costs four digits.  The defaults sit at the
// d = 2 window midpoint, at least 0.25 from every pole family for all d.
struct KernelContour {
  double s1 = -0.25;
  double s2 = -0.25;
};

// Independent Mellin-Barnes route for tags kW4 and kWl (RangeExceeded for
// the other tags; K_I needs no check and K_{w_5} reduces to K_{w_4}):
//   K_{w_4}(y; r) = (e1 i)^d / (4 pi^2)
//       * int |8 pi^3 y1|^{1 - r - s} Q(d, s) Gamma(s + 3r)
//             e^{e1 i pi (s + 3r)/2} ds / (2 pi i),
//   K_{w_l}(y; r) = (1 / 4 pi^2) |y2 / y1|^r
//       * int int |4 pi^2 y1|^{1 - s1} |4 pi^2 y2|^{1 - s2}
//             B^{sgn(y)}(s, r) Q(d, s1) Q(d, s2) ds2 ds1 / (2 pi i)^2,
// with B^{--} = (-1)^d Gamma(s1 + 3r) Gamma(s2 - 3r) / Gamma(s1 + s2),
//      B^{-+} = Gamma(s2 - 3r) Gamma(1 - s1 - s2) / Gamma(1 - s1 - 3r),
//      B^{+-} = Gamma(s1 + 3r) Gamma(1 - s1 - s2) / Gamma(1 + 3r - s2),
//      B^{++} = 0.
// After the contour shift the crossed poles contribute Bessel-J terms
// (Mellin pair Gamma(nu/2 + s) / Gamma(1 + nu/2 - s) <-> J_nu(2 sqrt u) at
// nu = d - 1); the remaining line integrals are summed by tapered
// trapezoids, with the double integral collapsed through FFT convolutions
// of exponentially rebalanced quadrant arrays.  Tolerances below 3e-8
// double the truncation height; the practical floor is about 1e-7.
cx kernel_eval_mb(KernelTag tag, const SpectralPoint& p,
                  const SignedTorusPoint& y, KernelContour contour = {},
                  double tol = 1e-7);

// Accuracy-routed kernel evaluation.  The alternating power series loses
// digits to cancellation as |y| grows -- measured against the Mellin-Barnes
// route, about 1.25 (sqrt|4 pi^2 y1| + sqrt|4 pi^2 y2|) + 1 decimal digits
// for the w_l combination and (3 (8 pi^3 |y1|)^{1/3} + 2) / ln 10 for the
// w_4 one, worst at small |Im r| -- so each call estimates that loss and
// uses the series only while the estimate stays below tol; beyond it the
// call routes to kernel_eval_mb on the default contour (never sharper than
// its ~1e-7/1e-8 floor).  kW5 goes through the kW4 reduction, and a series
// DegeneratePrefactor near cos(pi (d/2 + 3r)) = 0 falls back to the
// Mellin-Barnes route, which resolves that removable singularity.
cx kernel_eval_auto(KernelTag tag, const SpectralPoint& p,
                    const SignedTorusPoint& y, double tol = 1e-8);

}  // namespace gl3
