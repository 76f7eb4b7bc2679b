// Completed Whittaker functions of the generalized principal series on
// GL(3): the row vector W^{d*}(y, r) = (W^{d*}_{-d}, ..., W^{d*}_d)
// evaluated from its double Mellin-Barnes integral, the completion factor
// Lambda^*(r), Weyl-orbit bookkeeping for the spectral parameters mu(r),
// the leading small-y coefficients, and the dual functional equation
// residual.
#pragma once

#include <array>
#include <vector>

#include "gl3/types.hpp"
#include "gl3/wigner.hpp"

namespace gl3 {

// A spectral point of the generalized principal series: the minimal
// K-type weight d >= 2 and the spectral parameter r.  Unitary spectrum has
// purely imaginary r; small real parts are accepted as long as the
// integration contours stay clear of the integrand's poles.
struct SpectralPoint {
  int d = 2;
  cx r{};
};

// Coordinates of the torus element y = diag(y1 y2, y1, 1), both positive.
struct TorusPoint {
  double y1 = 1.0;
  double y2 = 1.0;
};

// mu(r) = ((d-1)/2 + r, -(d-1)/2 + r, -2r); the entries sum to zero.
std::array<cx, 3> mu_params(const SpectralPoint& p);

// Weyl action on spectral triples, as coordinate permutations:
//   w2: (mu2, mu1, mu3)   w3: (mu1, mu3, mu2)   w4: (mu3, mu1, mu2)
//   w5: (mu2, mu3, mu1)   wl: (mu3, mu2, mu1).
std::array<cx, 3> weyl_apply(WeylWord w, const std::array<cx, 3>& mu);

// The completion factor
//   Lambda^*(r) = ((-1)^d / pi) (2 pi)^{-(d-1)/2 - 3r}
//                 Gamma(d) Gamma((d+1)/2 + 3r).
cx lambda_star(const SpectralPoint& p);

// Contour abscissas (Re s1, Re s2) for the double Mellin-Barnes integral.
// Any pair with all gamma-factor arguments in the right half plane is
// legal, and all legal pairs give the same value.
struct WhittakerContour {
  double s1 = 1.0;
  double s2 = 1.0;
};

// The single coordinate W^{d*}_{m'}(y, r), |m'| <= d.  The integral is
// evaluated on nested trapezoid grids along the two contours; the result is
// accepted once successive grids agree to tol * max(1, |value|).
cx whittaker_entry(const SpectralPoint& p, const TorusPoint& y, int mprime,
                   const WhittakerContour& contour = {}, double tol = 1e-9);

// The full row vector (W^{d*}_{-d}, ..., W^{d*}_d) in one pass; the
// quadrature tables are shared across coordinates.
std::vector<cx> whittaker_vector(const SpectralPoint& p, const TorusPoint& y,
                                 const WhittakerContour& contour = {},
                                 double tol = 1e-9);

// One leading term of W^{d*}_{m'} as y -> 0:
//   value(y) = coefficient * (2 pi y1)^{1 - nu[2]} * (2 pi y2)^{1 + nu[0]},
// where nu is the (Weyl-permuted) spectral triple carrying the exponents.
struct PowerTerm {
  std::array<cx, 3> nu{};
  cx coefficient{};
  cx value(const TorusPoint& y) const;
};

// The two leading coefficients of W^{d*}_{m'} as y -> 0: the r1 term has
// exponent triple mu^{w4} and the r2 term (present only for m' = d) has
// exponent triple mu.  Requires r != 0, where the exponent lattices are
// disjoint.
struct LeadingTerms {
  PowerTerm r1;
  PowerTerm r2;
};
LeadingTerms leading_coefficients(const SpectralPoint& p, int mprime);

// Max-norm residual, over the 2d+1 coordinates, of the dual functional
// equation
//   W^{d*}(y, r) = (-1)^d W^{d*}((y2, y1), -r) D^d(v_{--} wl),
// where D^d is the Wigner matrix of the rotation v_{--} wl.  Requires
// Re r = 0.
double dual_check(const SpectralPoint& p, const TorusPoint& y,
                  double tol = 1e-9);

}  // namespace gl3
