// Stade's formula for the Rankin-Selberg pairing of two completed
// Whittaker vectors of the generalized principal series,
//
//   Psi^d(r, r', t) = int_{Y+} W^{d*}(y, r) W^{d*}(y, r')^T (y1^2 y2)^t dy,
//   dy = dy1 dy2 / (y1 y2)^3,
//
// in closed form, two independent integral oracles for it, and the three
// spectral weights it induces.
#pragma once

#include "gl3/types.hpp"
#include "gl3/whittaker.hpp"

namespace gl3 {

struct StadeParams {
  int d = 2;
  cx r{};
  cx rprime{};
  cx t{};
};

// The closed form
//   2^{4-d-4t-r-r'} pi^{2-3t} Gamma(t+r+r') Gamma((d-1)/2+t+r-2r')
//   Gamma((d-1)/2+t+r'-2r) Gamma(d-1+t+r+r') Gamma(t/2-r-r') / Gamma(3t/2).
// Throws PoleOfGamma when a numerator gamma argument sits within 1e-6 of a
// nonpositive integer; returns 0 where Gamma(3t/2) has a pole.
cx stade_closed(const StadeParams& p);

// First oracle: the elementary double integral over [0,1]^2,
//
//   (2 pi)^{4-3t} / (2^{d+2} pi^2) Gamma(d-1+2t-r-r') Gamma(d-1+t+r+r')
//   * int x1^{E1-1} (1-x1)^{F1-1} x2^{E2-1} (1-x2)^{F2-1}
//         (1 + sqrt(x1 x2) + sqrt(1-x1) sqrt(1-x2))^d
//         (sqrt(x1) + sqrt(x2))^{-(d-1+2t-r-r')}
//         (sqrt(1-x1) + sqrt(1-x2))^{-(d-1+t+r+r')} dx,
//
//   E1 = ((d-1)/2 + 2t + 2r - r')/2,  F1 = ((d-1)/2 + t + r' - 2r)/2,
//
// and E2, F2 with r and r' exchanged, by tanh-sinh quadrature.  Valid for
// 0 < Re t < 2/3 (outside that range the closed form is the analytic
// continuation and the integral description fails); all four edge
// exponents must have positive real part.  Tolerances much below 1e-7 are
// not generally reachable: large imaginary parameter parts make the edge
// singularities oscillate, which slows the tanh-sinh error decay.
cx stade_oracle_elementary(const StadeParams& p, double tol = 1e-7);

// Second oracle: the defining Y+ integral itself, on a logarithmic Simpson
// grid with Whittaker rows from the whittaker module.  Accuracy is
// governed by the grid; tol is forwarded (scaled down) to the row
// evaluations.
struct DirectGrid {
  int panels1 = 0;  // Simpson panels per axis (even); 0 = derive the grid
  int panels2 = 0;
  double lo1 = 0.0, hi1 = 0.0;  // windows in u = log y
  double lo2 = 0.0, hi2 = 0.0;
};

// The grid the direct oracle uses when given the all-zero default.  The
// slowest integrand decay rates toward y -> 0 are e^{2 Re(t) u1} and
// e^{Re(t) u2} (the Whittaker vectors contribute y1^2 and y2^2 at worst
// through the squared leading towers), so the windows reach down to where
// those tails fall below `tail`, with Simpson steps near `step`.  Requires
// Re t >= 0.2 to keep the window finite.
DirectGrid direct_grid(const StadeParams& p, double step = 0.2,
                       double tail = 1e-5);

cx stade_oracle_direct(const StadeParams& p, const DirectGrid& grid = {},
                       double tol = 1e-3);

// The spectral weights at a spectral point, defined through
//   1/sin^d(r) := (2 pi i / 3) lim_{t->0+} t Psi(r,-r,t)
//              =  2^{5-d} pi^3 i Gamma(d-1) Gamma((d-1)/2-3r) Gamma((d-1)/2+3r),
//   1/cos^d(r) := Psi^d(r,-r,1)
//              =  (2^{1-d}/pi) Gamma(d) Gamma((d+1)/2+3r) Gamma((d+1)/2-3r),
//   spec^d(r)  := sin^d(r)/cos^d(r)
//              =  (1/(16 pi^4 i)) (d-1) ((d-1)/2-3r) ((d-1)/2+3r).
struct SpectralWeights {
  cx sin_weight;
  cx cos_weight;
  cx spec_weight;
};
SpectralWeights spectral_weights(const SpectralPoint& p);

}  // namespace gl3
