#include "gl3/stade.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/quadrature.hpp"
#include "gl3/reduce.hpp"

namespace gl3 {
namespace {

constexpr double kLnPi = 1.1447298858494001741;
constexpr double kLnTwoPi = 1.8378770664093454836;

void check_d(int d) {
  if (d < 2 || d > 16)
    throw RangeExceeded("spectral weight d must lie in [2, 16]");
}

}  // namespace

cx stade_closed(const StadeParams& p) {
  check_d(p.d);
  const cx rr = p.r + p.rprime;
  const double hd = 0.5 * (p.d - 1);
  const cx args[5] = {p.t + rr, hd + p.t + p.r - 2.0 * p.rprime,
                      hd + p.t + p.rprime - 2.0 * p.r,
                      double(p.d - 1) + p.t + rr, 0.5 * p.t - rr};
  for (const cx& a : args)
    if (near_gamma_pole(a, 1e-6))
      throw PoleOfGamma("Stade closed form hits a gamma pole");
  const cx denom_arg = 1.5 * p.t;
  if (near_gamma_pole(denom_arg)) return cx(0.0, 0.0);
  cx lg = (4.0 - p.d - 4.0 * p.t - rr) * kLogTwo + (2.0 - 3.0 * p.t) * kLnPi -
          log_gamma(denom_arg);
  for (const cx& a : args) lg += log_gamma(a);
  return std::exp(lg);
}

cx stade_oracle_elementary(const StadeParams& p, double tol) {
  check_d(p.d);
  const double rt = p.t.real();
  if (!(rt > 0.0) || !(rt < 2.0 / 3.0))
    throw RangeExceeded(
        "elementary description of the Stade integral needs 0 < Re t < 2/3");
  const double hd = 0.5 * (p.d - 1);
  const cx e1 = 0.5 * (hd + 2.0 * p.t + 2.0 * p.r - p.rprime);
  const cx f1 = 0.5 * (hd + p.t + p.rprime - 2.0 * p.r);
  const cx e2 = 0.5 * (hd + 2.0 * p.t + 2.0 * p.rprime - p.r);
  const cx f2 = 0.5 * (hd + p.t + p.r - 2.0 * p.rprime);
  for (const cx& e : {e1, f1, e2, f2})
    if (!(e.real() > 0.0))
      throw RangeExceeded("elementary Stade integrand is not integrable");
  const cx a = double(p.d - 1) + 2.0 * p.t - p.r - p.rprime;
  const cx b = double(p.d - 1) + p.t + p.r + p.rprime;
  const cx pref = std::exp((4.0 - 3.0 * p.t) * kLnTwoPi -
                           (p.d + 2) * kLogTwo - 2.0 * kLnPi + log_gamma(a) +
                           log_gamma(b));
  const int d = p.d;
  auto f = [&](double x1, double omx1, double x2, double omx2) -> cx {
    const double s1 = std::sqrt(x1), s2 = std::sqrt(x2);
    const double u1 = std::sqrt(omx1), u2 = std::sqrt(omx2);
    const cx lg = (e1 - 1.0) * std::log(x1) + (f1 - 1.0) * std::log(omx1) +
                  (e2 - 1.0) * std::log(x2) + (f2 - 1.0) * std::log(omx2) +
                  double(d) * std::log(1.0 + s1 * s2 + u1 * u2) -
                  a * std::log(s1 + s2) - b * std::log(u1 + u2);
    return std::exp(lg);
  };
  return pref * tanh_sinh_2d(f, 0.2 * tol, 10, 1e-70);
}

DirectGrid direct_grid(const StadeParams& p, double step, double tail) {
  check_d(p.d);
  if (p.t.real() < 0.2)
    throw RangeExceeded(
        "direct Stade oracle needs Re t >= 0.2 for a finite window");
  if (!(step > 0.0) || !(tail > 0.0 && tail < 1.0))
    throw RangeExceeded("direct Stade grid needs step > 0 and 0 < tail < 1");
  DirectGrid g;
  g.hi1 = g.hi2 = 2.5;
  g.lo1 = std::min(-4.0, std::log(tail) / (2.0 * p.t.real()));
  g.lo2 = std::min(-4.0, std::log(tail) / p.t.real());
  auto even_panels = [&](double lo, double hi) {
    int n = static_cast<int>(std::ceil((hi - lo) / step));
    return n + n % 2;
  };
  g.panels1 = even_panels(g.lo1, g.hi1);
  g.panels2 = even_panels(g.lo2, g.hi2);
  return g;
}

cx stade_oracle_direct(const StadeParams& p, const DirectGrid& grid,
                       double tol) {
  check_d(p.d);
  const DirectGrid g =
      (grid.panels1 == 0 && grid.panels2 == 0) ? direct_grid(p) : grid;
  if (g.panels1 < 2 || g.panels1 % 2 != 0 || g.panels2 < 2 ||
      g.panels2 % 2 != 0)
    throw RangeExceeded("direct Stade grid needs even panel counts >= 2");
  if (!(g.hi1 > g.lo1) || !(g.hi2 > g.lo2))
    throw RangeExceeded("direct Stade grid window is empty");
  const double inner_tol = std::max(1e-10, 1e-3 * tol);
  // W(y, conj r) = conj W(y, r), so a single row per grid point suffices
  // when r' = -r on the unitary axis.
  const bool conjugate_pair = std::abs(p.rprime + p.r) < 1e-15 &&
                              std::abs(p.r.real()) < 1e-15;
  const double h1 = (g.hi1 - g.lo1) / g.panels1;
  const double h2 = (g.hi2 - g.lo2) / g.panels2;
  auto simpson_w = [](int i, int n) {
    if (i == 0 || i == n) return 1.0;
    return (i % 2 == 1) ? 4.0 : 2.0;
  };
  std::vector<cx> contrib;
  contrib.reserve(static_cast<std::size_t>(g.panels1 + 1) * (g.panels2 + 1));
  for (int i = 0; i <= g.panels1; ++i) {
    const double u1 = g.lo1 + i * h1;
    for (int j = 0; j <= g.panels2; ++j) {
      const double u2 = g.lo2 + j * h2;
      const TorusPoint y{std::exp(u1), std::exp(u2)};
      const auto wr = whittaker_vector({p.d, p.r}, y, {}, inner_tol);
      cx s = 0.0;
      if (conjugate_pair) {
        for (const cx& w : wr) s += std::norm(w);
      } else {
        const auto wp = whittaker_vector({p.d, p.rprime}, y, {}, inner_tol);
        for (std::size_t k = 0; k < wr.size(); ++k) s += wr[k] * wp[k];
      }
      const cx measure =
          std::exp((2.0 * p.t - 2.0) * u1 + (p.t - 2.0) * u2);
      contrib.push_back(simpson_w(i, g.panels1) * simpson_w(j, g.panels2) * s *
                        measure);
    }
  }
  return pairwise_sum(contrib) * (h1 / 3.0) * (h2 / 3.0);
}

SpectralWeights spectral_weights(const SpectralPoint& p) {
  check_d(p.d);
  const cx tr = 3.0 * p.r;
  const double hd = 0.5 * (p.d - 1);
  const cx inv_sin = std::exp((5.0 - p.d) * kLogTwo + 3.0 * kLnPi) *
                     cx(0.0, 1.0) * gamma_fn(cx(p.d - 1, 0.0)) *
                     gamma_fn(hd - tr) * gamma_fn(hd + tr);
  const cx inv_cos = std::exp((1.0 - p.d) * kLogTwo - kLnPi) *
                     gamma_fn(cx(p.d, 0.0)) * gamma_fn(hd + 1.0 + tr) *
                     gamma_fn(hd + 1.0 - tr);
  const cx spec = cx(0.0, -1.0) / (16.0 * std::pow(kPi, 4)) * double(p.d - 1) *
                  (hd - tr) * (hd + tr);
  return {1.0 / inv_sin, 1.0 / inv_cos, spec};
}

}  // namespace gl3
