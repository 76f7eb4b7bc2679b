// Small shared aliases and constants.
#pragma once

#include <complex>

namespace gl3 {

using cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kLogTwoPi = 1.837877066409345483560659472811235279;  // log(2*pi)
inline constexpr double kLogTwo = 0.693147180559945309417232121458176568;    // log 2

inline cx cis(double t) { return {std::cos(t), std::sin(t)}; }

// e(x) = exp(2*pi*i*x), the normalized additive character.
inline cx unit_character(double x) { return cis(kTwoPi * x); }

// x^s for real x > 0 and complex s, evaluated in the log domain.
inline cx rpow(double x, cx s) { return std::exp(s * std::log(x)); }

}  // namespace gl3
