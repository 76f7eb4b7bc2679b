// Complex log-gamma, digamma and trigamma via the Stirling series with
// upward recurrence, plus log-factorial/binomial tables and the beta
// function.  log_gamma is accurate to ~1e-13 relative (in the exponentiated
// sense) for |z| <= 1e3 and detects gamma poles within a 1e-12 margin.
#pragma once

#include "gl3/types.hpp"

namespace gl3 {

// True if z lies within `margin` of a nonpositive integer (a gamma pole).
bool near_gamma_pole(cx z, double margin = 1e-12);

// Principal-branch-based log of Gamma(z); the imaginary part is continuous
// along the recurrence/reflection path used internally, so differences of
// log_gamma values are only meaningful after exponentiation.  Throws
// PoleOfGamma when z is within 1e-12 of a nonpositive integer.
cx log_gamma(cx z);

// Gamma(z) = exp(log_gamma(z)).
cx gamma_fn(cx z);

// psi(z) = Gamma'(z)/Gamma(z).  Same pole rule as log_gamma.
cx digamma(cx z);

// psi'(z).  Same pole rule as log_gamma.
cx trigamma(cx z);

// B(u, v) = Gamma(u)Gamma(v)/Gamma(u+v), in the log domain.  When u+v sits
// on a gamma pole (within margin) the limit value 0 is returned.
cx beta_fn(cx u, cx v);

// log n! (cached table; n >= 0).
double log_factorial(int n);

// log C(n, k); requires 0 <= k <= n.
double log_binomial(int n, int k);

// C(n, k) as a double.
double binomial(int n, int k);

}  // namespace gl3
