// Quadrature engines used throughout the library:
//
//  * mb_integrate -- iterated trapezoid rule on vertical contours for
//    Mellin-Barnes integrals (1 to 3 dimensions) whose integrands decay
//    exponentially along the contour.  Trapezoid sums on such analytic
//    integrands converge geometrically under node refinement.  The engine
//    checks declared pole families against the contour before evaluating
//    and refines adaptively (height doubling + spacing halving).
//
//  * tanh_sinh / tanh_sinh_2d -- double-exponential quadrature on [0,1]
//    (and its product square) for endpoint power singularities.  The
//    complementary coordinate 1-x is produced directly from the node map,
//    so integrands may track it without cancellation.
//
//  * ibp_tail_upper / ibp_tail_lower -- two-term integration-by-parts
//    completion of one-sided tails for oscillatory integrands with only
//    algebraic magnitude decay, given log-derivative data at the edge.
#pragma once

#include <functional>
#include <vector>

#include "gl3/types.hpp"

namespace gl3 {

enum class PoleSide { left, right };

// A family of poles { base - k : k >= 0 } (left) or { base + k : k >= 0 }
// (right) in one contour variable.  Only the extremal member matters for
// contour legality, which is what the engine checks.
struct PoleFamily {
  cx base;
  PoleSide side;
};

struct ContourSpec {
  double abscissa = 0.0;
  double height = 16.0;  // initial half-height of the truncated contour
  int nodes = 64;        // initial node count (>= 16)
  enum class Adaptivity { fixed, doubling } adaptivity = Adaptivity::doubling;
};

struct MbIntegrand {
  int dims = 1;
  // Evaluates the integrand at s = (s_1..s_dims); implementations should sum
  // log-gamma terms and exponentiate once.
  std::function<cx(const std::vector<cx>&)> eval;
  // Declared pole families per dimension (outer index = dimension).
  std::vector<std::vector<PoleFamily>> poles;
};

// Integrates f over the product of vertical contours with measure
// prod ds_i / (2 pi i).  Throws PoleOnContour if a declared family sits
// within `pole_margin` of a contour, NonConvergent after 20 refinements.
cx mb_integrate(const MbIntegrand& f, const std::vector<ContourSpec>& contours,
                double tol, double pole_margin = 1e-6);

// Double-exponential quadrature of integral_0^1 f(x, 1-x) dx.  Nodes with
// min(x, 1-x) < edge_cut are skipped (edge_cut also guards against
// overflow/underflow at extreme nodes; it is floored at 1e-290).
cx tanh_sinh(const std::function<cx(double, double)>& f, double tol,
             int max_level = 10, double edge_cut = 0.0);

// Product-grid version on [0,1]^2, f(x1, 1-x1, x2, 1-x2).
cx tanh_sinh_2d(const std::function<cx(double, double, double, double)>& f,
                double tol, int max_level = 9, double edge_cut = 0.0);

// Tail completions: with L(t) = log f(t) along the real integration
// parameter, L1 = L'(T), L2 = L''(T) at the edge node and f = f(T),
//   integral_T^inf  f dt ~ -f/L1 - f L2/L1^3   (upper),
//   integral_-inf^-T f dt ~ +f/L1 + f L2/L1^3  (lower, data taken at -T).
cx ibp_tail_upper(cx f, cx L1, cx L2);
cx ibp_tail_lower(cx f, cx L1, cx L2);

// Composite Simpson weights for an n-point uniform grid (n odd).
std::vector<double> simpson_weights(int n, double h);

}  // namespace gl3
