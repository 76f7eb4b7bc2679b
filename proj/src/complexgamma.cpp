// Stirling-series implementations of log Gamma, psi and psi' on the complex
// plane.  Arguments left of Re z = 0.5 go through the reflection formula; the
// remaining ones are lifted by upward recurrence until |z| is large enough
// for the asymptotic series.
#include "gl3/complexgamma.hpp"

#include <cmath>
#include <vector>

#include "gl3/errors.hpp"

namespace gl3 {

namespace {

constexpr double kStirlingRadius = 10.0;

// B_{2k} / (2k (2k-1)) for the log-gamma series, k = 1..11.
constexpr double kLogGammaCoeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
};

// B_{2k} / (2k) for the digamma series, k = 1..10.
constexpr double kDigammaCoeff[] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
};

// B_{2k} for the trigamma series, k = 1..11.
constexpr double kBernoulli2k[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
};

void check_pole(cx z) {
  if (near_gamma_pole(z)) {
    throw PoleOfGamma("gamma argument within 1e-12 of a nonpositive integer: re=" +
                      std::to_string(z.real()) + " im=" + std::to_string(z.imag()));
  }
}

// log sin(pi z), stable for large |Im z|; imaginary part may differ from the
// principal branch by 2 pi k, which is harmless after exponentiation.
cx log_sin_pi(cx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), |e^{2 pi i z}| <= 1 here.
  cx q = std::exp(cx(0.0, 2.0 * kPi) * z);
  return cx(-std::log(2.0), kPi / 2.0) - cx(0.0, kPi) * z + std::log(1.0 - q);
}

// cot(pi z), stable for large |Im z|.
cx cot_pi(cx z) {
  if (z.imag() < 0.0) return std::conj(cot_pi(std::conj(z)));
  cx q = std::exp(cx(0.0, 2.0 * kPi) * z);
  return cx(0.0, 1.0) * (q + 1.0) / (q - 1.0);
}

cx log_gamma_stirling(cx z) {
  cx inv = 1.0 / z;
  cx inv2 = inv * inv;
  cx term = inv;
  cx series = 0.0;
  for (double c : kLogGammaCoeff) {
    series += c * term;
    term *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLogTwoPi + series;
}

cx digamma_stirling(cx z) {
  cx inv = 1.0 / z;
  cx inv2 = inv * inv;
  cx term = inv2;
  cx series = 0.0;
  for (double c : kDigammaCoeff) {
    series += c * term;
    term *= inv2;
  }
  return std::log(z) - 0.5 * inv - series;
}

cx trigamma_stirling(cx z) {
  cx inv = 1.0 / z;
  cx inv2 = inv * inv;
  cx term = inv * inv2;
  cx series = 0.0;
  for (double c : kBernoulli2k) {
    series += c * term;
    term *= inv2;
  }
  return inv + 0.5 * inv2 + series;
}

}  // namespace

bool near_gamma_pole(cx z, double margin) {
  if (z.real() > 0.5) return false;
  double k = std::round(z.real());
  if (k > 0.0) return false;
  return std::abs(z - cx(k, 0.0)) < margin;
}

cx log_gamma(cx z) {
  check_pole(z);
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cx shift = 0.0;
  while (std::abs(z) < kStirlingRadius) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift;
}

cx gamma_fn(cx z) { return std::exp(log_gamma(z)); }

cx digamma(cx z) {
  check_pole(z);
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi * cot_pi(z);
  }
  cx shift = 0.0;
  while (std::abs(z) < kStirlingRadius) {
    shift += 1.0 / z;
    z += 1.0;
  }
  return digamma_stirling(z) - shift;
}

cx trigamma(cx z) {
  check_pole(z);
  if (z.real() < 0.5) {
    cx s = std::exp(-2.0 * log_sin_pi(z));
    return kPi * kPi * s - trigamma(1.0 - z);
  }
  cx shift = 0.0;
  while (std::abs(z) < kStirlingRadius) {
    cx inv = 1.0 / z;
    shift += inv * inv;
    z += 1.0;
  }
  return trigamma_stirling(z) + shift;
}

cx beta_fn(cx u, cx v) {
  // B(u, v) -> 0 in the limit where u+v is a gamma pole but u, v are not.
  if (near_gamma_pole(u + v)) return cx(0.0, 0.0);
  return std::exp(log_gamma(u) + log_gamma(v) - log_gamma(u + v));
}

double log_factorial(int n) {
  if (n < 0) throw RangeExceeded("log_factorial: negative argument");
  static const std::vector<double> table = [] {
    std::vector<double> t(4097);
    for (int i = 0; i <= 4096; ++i) t[i] = std::lgamma(static_cast<double>(i) + 1.0);
    return t;
  }();
  if (n < static_cast<int>(table.size())) return table[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw RangeExceeded("log_binomial: need 0 <= k <= n");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double binomial(int n, int k) { return std::exp(log_binomial(n, k)); }

}  // namespace gl3
