#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/kernels.hpp"
#include "gl3/types.hpp"
#include "gl3/whittaker.hpp"

using gl3::cx;
using gl3::KernelContour;
using gl3::KernelTag;
using gl3::SignedTorusPoint;
using gl3::SpectralPoint;
using gl3::WeylWord;

namespace {

constexpr double kFourPiSq = 4.0 * gl3::kPi * gl3::kPi;
constexpr double kEightPiCu = 8.0 * gl3::kPi * gl3::kPi * gl3::kPi;

double rel_diff(cx a, cx b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  return denom < 1e-300 ? 0.0 : std::abs(a - b) / denom;
}

// Order-(0,0) term of j_wl_series, rebuilt from raw gamma factors.
cx j_wl_leading(const std::array<cx, 3>& mu, const SignedTorusPoint& y) {
  const double x1 = kFourPiSq * std::abs(y.y1);
  const double x2 = kFourPiSq * std::abs(y.y2);
  cx den(1.0, 0.0);
  for (int i = 0; i < 3; ++i) {
    den *= gl3::gamma_fn(mu[i] - mu[2] + 1.0) * gl3::gamma_fn(mu[0] - mu[i] + 1.0);
  }
  return std::exp((1.0 - mu[2]) * std::log(x1) + (1.0 + mu[0]) * std::log(x2)) *
         gl3::gamma_fn(mu[0] - mu[2] + 1.0) / den;
}

// Order-0 term of j_w4_series.
cx j_w4_leading(const std::array<cx, 3>& mu, double y1) {
  const double x = kEightPiCu * std::abs(y1);
  return std::exp((1.0 - mu[2]) * std::log(x)) /
         (gl3::gamma_fn(mu[0] - mu[2] + 1.0) * gl3::gamma_fn(mu[1] - mu[2] + 1.0));
}

double sgn_pow(double s, int n) { return (s < 0.0 && (n & 1)) ? -1.0 : 1.0; }

}  // namespace

TEST_CASE("q factor gamma ratio") {
  // Q(2, 0) = Gamma(1/2) / Gamma(3/2) = 2.
  CHECK(rel_diff(gl3::q_factor(2, cx(0.0, 0.0)), cx(2.0, 0.0)) < 1e-14);
  // Q(3, 1/2) = Gamma(3/2) / Gamma(3/2) = 1.
  CHECK(rel_diff(gl3::q_factor(3, cx(0.5, 0.0)), cx(1.0, 0.0)) < 1e-14);
  const cx s(-0.3, 0.8);
  CHECK(rel_diff(gl3::q_factor(4, s),
                 gl3::gamma_fn(1.5 + s) / gl3::gamma_fn(2.5 - s)) < 1e-13);
  // Numerator pole at (d-1)/2 + s = 0; denominator pole gives a clean zero.
  CHECK_THROWS_AS(gl3::q_factor(2, cx(-0.5, 0.0)), gl3::PoleOfGamma);
  CHECK(std::abs(gl3::q_factor(2, cx(1.5, 0.0))) == 0.0);
  CHECK_THROWS_AS(gl3::q_factor(1, cx(0.0, 0.0)), gl3::RangeExceeded);
}

TEST_CASE("j_wl series leading term and guards") {
  const SpectralPoint p{3, cx(0.0, 0.4)};
  const auto mu = gl3::mu_params(p);
  // At |4 pi^2 y| = 1e-3 the order-(0,0) term carries all but O(1e-3).
  const double ysmall = 1e-3 / kFourPiSq;
  const SignedTorusPoint y{ysmall, ysmall};
  CHECK(rel_diff(gl3::j_wl_series(mu, y), j_wl_leading(mu, y)) < 5e-3);

  CHECK_THROWS_AS(gl3::j_wl_series(mu, {30.0, 0.1}), gl3::RangeExceeded);
  CHECK_THROWS_AS(gl3::j_wl_series(mu, {0.1, 0.0}), gl3::RangeExceeded);
  CHECK_THROWS_AS(gl3::j_wl_series(mu, y, 2.0), gl3::RangeExceeded);
  // mu^{w5} has mu1 - mu3 = 1 - d, a nonpositive integer: every order sits on
  // a numerator gamma pole.
  for (int d : {2, 3, 5}) {
    const auto mud = gl3::mu_params({d, cx(0.0, 0.4)});
    CHECK_THROWS_AS(
        gl3::j_wl_series(gl3::weyl_apply(WeylWord::kW5, mud), {0.1, 0.1}),
        gl3::DegenerateParameter);
  }
}

TEST_CASE("j_wl sign relations across the Weyl orbit") {
  for (int d : {2, 3, 5}) {
    const auto mu = gl3::mu_params({d, cx(0.0, 0.3)});
    const auto mu2 = gl3::weyl_apply(WeylWord::kW2, mu);
    const auto mu4 = gl3::weyl_apply(WeylWord::kW4, mu);
    const auto mul = gl3::weyl_apply(WeylWord::kWl, mu);
    for (const SignedTorusPoint& y :
         {SignedTorusPoint{-0.12, 0.07}, SignedTorusPoint{0.25, -0.4},
          SignedTorusPoint{-0.3, -0.15}}) {
      const cx base = gl3::j_wl_series(mu, y);
      CHECK(rel_diff(gl3::j_wl_series(mu2, y), sgn_pow(y.y2, d - 1) * base) < 1e-10);
      CHECK(rel_diff(gl3::j_wl_series(mul, y),
                     sgn_pow(y.y1, d - 1) * gl3::j_wl_series(mu4, y)) < 1e-10);
    }
    // At larger arguments the alternating double series loses digits to
    // cancellation (roughly e^{2(sqrt X1 + sqrt X2)} * eps), so the same
    // identities hold only to a looser bound there.
    const SignedTorusPoint big{-1.1, -0.3};
    CHECK(rel_diff(gl3::j_wl_series(mu2, big),
                   sgn_pow(big.y2, d - 1) * gl3::j_wl_series(mu, big)) < 1e-6);
    CHECK(rel_diff(gl3::j_wl_series(mul, big),
                   sgn_pow(big.y1, d - 1) * gl3::j_wl_series(mu4, big)) < 1e-6);
  }
}

TEST_CASE("j_w4 series leading term, w5 relation, tolerance consistency") {
  const auto mu3 = gl3::mu_params({3, cx(0.0, 0.4)});
  const double ysmall = 1e-3 / kEightPiCu;
  CHECK(rel_diff(gl3::j_w4_series(mu3, ysmall), j_w4_leading(mu3, ysmall)) < 5e-3);

  // J_{w4}(y, mu^{w5}) = (-i sgn y1)^{d-1} J_{w4}(y, mu^{w4}): shifting the
  // mu^{w5} series by n -> n + d - 1 (its first d - 1 terms vanish against
  // 1/Gamma(n + 2 - d)) reproduces the mu^{w4} series term by term.
  for (int d : {2, 3, 4}) {
    const auto mu = gl3::mu_params({d, cx(0.0, 0.35)});
    const auto mu4 = gl3::weyl_apply(WeylWord::kW4, mu);
    const auto mu5 = gl3::weyl_apply(WeylWord::kW5, mu);
    for (double y1 : {0.2, -0.2}) {
      const cx i_eps(0.0, y1 < 0.0 ? 1.0 : -1.0);
      cx fac(1.0, 0.0);
      for (int k = 0; k < d - 1; ++k) fac *= i_eps;
      CHECK(rel_diff(gl3::j_w4_series(mu5, y1), fac * gl3::j_w4_series(mu4, y1)) <
            1e-10);
    }
  }

  // Loose and tight tolerances agree to the loose one at a large argument.
  const double ybig = 100.0 / kEightPiCu;
  const cx loose = gl3::j_w4_series(mu3, ybig, 1e-8);
  const cx tight = gl3::j_w4_series(mu3, ybig, 1e-12);
  CHECK(rel_diff(loose, tight) < 1e-7);
  CHECK_THROWS_AS(gl3::j_w4_series(mu3, 0.0), gl3::RangeExceeded);
}

TEST_CASE("kernel combinations: identity, vanishing chamber, degeneracies") {
  const SpectralPoint p{2, cx(0.0, 0.3)};
  CHECK(gl3::kernel_eval_series(KernelTag::kI, p, {0.3, -0.7}) == cx(1.0, 0.0));
  // K_{wl} vanishes identically on the (+,+) chamber.
  CHECK(std::abs(gl3::kernel_eval_series(KernelTag::kWl, p, {0.4, 0.9})) == 0.0);
  // cos(pi (d/2 + 3r)) = 0 at d = 3, r = 0.
  CHECK_THROWS_AS(gl3::kernel_eval_series(KernelTag::kW4, {3, cx(0.0, 0.0)}, {0.1, 0.1}),
                  gl3::DegeneratePrefactor);
  CHECK_THROWS_AS(gl3::kernel_eval_series(KernelTag::kWl, {3, cx(0.0, 0.0)}, {-0.1, 0.1}),
                  gl3::DegeneratePrefactor);
  CHECK_THROWS_AS(gl3::kernel_eval_series(KernelTag::kW4, p, {0.0, 0.1}),
                  gl3::RangeExceeded);

  // The w5 kernel is the w4 kernel at the rotated torus point and -r; four
  // applications of the rotation (y1, y2) -> (-y2, y1) return the start.
  const SignedTorusPoint y{0.21, -0.33};
  CHECK(rel_diff(gl3::kernel_eval_series(KernelTag::kW5, p, y),
                 gl3::kernel_eval_series(KernelTag::kW4, {p.d, -p.r},
                                         {-y.y2, y.y1})) < 1e-15);
  SignedTorusPoint z = y;
  for (int k = 0; k < 4; ++k) z = SignedTorusPoint{-z.y2, z.y1};
  CHECK(z.y1 == y.y1);
  CHECK(z.y2 == y.y2);
}

TEST_CASE("kernel small-y truncation to the order-zero terms") {
  const double ys = 1e-3 / kFourPiSq;
  // w_l on the (-,-) chamber at d = 2, r = 0.3i.
  {
    const SpectralPoint p{2, cx(0.0, 0.3)};
    const auto mu = gl3::mu_params(p);
    const auto mu4 = gl3::weyl_apply(WeylWord::kW4, mu);
    const SignedTorusPoint y{-ys, -ys};
    const cx pcos = std::cos(gl3::kPi * (0.5 * p.d + 3.0 * p.r));
    const cx lead = (sgn_pow(-1.0, p.d) * j_wl_leading(mu4, y) + j_wl_leading(mu, y)) /
                    (-4.0 * gl3::kPi * pcos);
    CHECK(rel_diff(gl3::kernel_eval_series(KernelTag::kWl, p, y), lead) < 0.03);
  }
  // w4 at d = 3, r = 0.2i.
  {
    const SpectralPoint p{3, cx(0.0, 0.2)};
    const auto mu = gl3::mu_params(p);
    const auto mu4 = gl3::weyl_apply(WeylWord::kW4, mu);
    const double y1 = 1e-3 / kEightPiCu;
    const cx pcos = std::cos(gl3::kPi * (0.5 * p.d + 3.0 * p.r));
    const cx shear = std::exp(cx(0.0, -0.5 * gl3::kPi) * (0.5 * (p.d - 1.0) - 3.0 * p.r));
    cx mip(1.0, 0.0);
    for (int k = 0; k < p.d; ++k) mip *= cx(0.0, -1.0);
    const cx lead =
        mip * (j_w4_leading(mu4, y1) * shear - j_w4_leading(mu, y1)) /
        (4.0 * gl3::kPi * pcos);
    CHECK(rel_diff(gl3::kernel_eval_series(KernelTag::kW4, p, {y1, 1.0}), lead) < 0.03);
  }
}

TEST_CASE("w4 kernel: series and Mellin-Barnes routes agree") {
  // Pinned spot: d = 2, r = 0.4i, y1 = 0.05.
  {
    const SpectralPoint p{2, cx(0.0, 0.4)};
    const SignedTorusPoint y{0.05, 1.0};
    CHECK(rel_diff(gl3::kernel_eval_series(KernelTag::kW4, p, y),
                   gl3::kernel_eval_mb(KernelTag::kW4, p, y)) < 1e-6);
  }
  for (int d : {2, 3, 4}) {
    for (double rho : {0.2, 0.7}) {
      const SpectralPoint p{d, cx(0.0, rho)};
      for (double y1 : {0.05, -0.05, 0.3, -0.3}) {
        const SignedTorusPoint y{y1, 1.0};
        const cx a = gl3::kernel_eval_series(KernelTag::kW4, p, y);
        const cx b = gl3::kernel_eval_mb(KernelTag::kW4, p, y);
        CAPTURE(d);
        CAPTURE(rho);
        CAPTURE(y1);
        CHECK(rel_diff(a, b) < 1e-6);
      }
    }
  }
}

TEST_CASE("wl kernel: series and Mellin-Barnes routes agree") {
  // Pinned spot: d = 2, r = 0.3i, y = (-0.1, -0.1).
  {
    const SpectralPoint p{2, cx(0.0, 0.3)};
    const SignedTorusPoint y{-0.1, -0.1};
    CHECK(rel_diff(gl3::kernel_eval_series(KernelTag::kWl, p, y),
                   gl3::kernel_eval_mb(KernelTag::kWl, p, y)) < 1e-6);
  }
  const std::array<std::array<double, 2>, 2> mags{{{0.1, 0.2}, {0.5, 0.15}}};
  const std::array<std::array<double, 2>, 3> signs{{{-1.0, -1.0}, {-1.0, 1.0}, {1.0, -1.0}}};
  for (int d : {2, 3, 4}) {
    for (double rho : {0.2, 0.7}) {
      const SpectralPoint p{d, cx(0.0, rho)};
      for (const auto& sg : signs) {
        for (const auto& m : mags) {
          const SignedTorusPoint y{sg[0] * m[0], sg[1] * m[1]};
          const cx a = gl3::kernel_eval_series(KernelTag::kWl, p, y);
          const cx b = gl3::kernel_eval_mb(KernelTag::kWl, p, y);
          CAPTURE(d);
          CAPTURE(rho);
          CAPTURE(y.y1);
          CAPTURE(y.y2);
          CHECK(rel_diff(a, b) < 1e-6);
        }
      }
    }
  }
  // The Mellin-Barnes route also vanishes on the (+,+) chamber.
  CHECK(std::abs(gl3::kernel_eval_mb(KernelTag::kWl, {2, cx(0.0, 0.3)}, {0.2, 0.4})) ==
        0.0);
}

TEST_CASE("adaptive kernel router agrees with the contour route across scales") {
  // The router must hand back series values inside the cancellation-safe
  // region and contour values beyond it, with no seam at the crossover.
  SUBCASE("long element") {
    for (int d : {2, 3}) {
      for (double rho : {0.3, 5.0}) {
        const SpectralPoint p{d, cx(0.0, rho)};
        for (double m : {0.02, 0.3, 2.0, 10.0}) {
          for (double s2 : {-1.0, 1.0}) {
            const SignedTorusPoint y{-m, s2 * 0.7 * m};
            const cx a = gl3::kernel_eval_auto(KernelTag::kWl, p, y, 1e-6);
            const cx b = gl3::kernel_eval_mb(KernelTag::kWl, p, y, {}, 1e-8);
            CAPTURE(d);
            CAPTURE(rho);
            CAPTURE(m);
            CAPTURE(s2);
            CHECK(rel_diff(a, b) < 2e-6);
          }
        }
      }
    }
  }
  SUBCASE("w4 and the w5 reduction") {
    for (int d : {2, 3}) {
      for (double rho : {0.3, 5.0}) {
        const SpectralPoint p{d, cx(0.0, rho)};
        for (double m : {0.01, 0.2, 1.5, 12.0}) {
          for (double s1 : {-1.0, 1.0}) {
            const SignedTorusPoint y{s1 * m, -0.8};
            const cx a = gl3::kernel_eval_auto(KernelTag::kW4, p, y, 1e-6);
            const cx b = gl3::kernel_eval_mb(KernelTag::kW4, p, y, {}, 1e-8);
            CAPTURE(d);
            CAPTURE(rho);
            CAPTURE(m);
            CAPTURE(s1);
            CHECK(rel_diff(a, b) < 2e-6);
          }
        }
      }
    }
    // K_{w5}(y; r) = K_{w4}((-y2, y1); -r) must survive the routing layer.
    for (double m : {0.1, 3.0}) {
      const cx a = gl3::kernel_eval_auto(KernelTag::kW5, {3, cx(0.0, 1.2)},
                                         {0.9, m}, 1e-6);
      const cx b = gl3::kernel_eval_mb(KernelTag::kW4, {3, cx(0.0, -1.2)},
                                       {-m, 0.9}, {}, 1e-8);
      CHECK(rel_diff(a, b) < 2e-6);
    }
  }
  SUBCASE("trivial tags and the vanishing chamber") {
    CHECK(gl3::kernel_eval_auto(KernelTag::kI, {4, cx(0.0, 2.0)}, {0.3, -0.5}) ==
          cx(1.0, 0.0));
    CHECK(gl3::kernel_eval_auto(KernelTag::kWl, {2, cx(0.0, 0.3)}, {0.2, 0.4}) ==
          cx(0.0, 0.0));
  }
  SUBCASE("degenerate series prefactor falls back to the contour route") {
    // At d = 3, r = 0 the series prefactor cos(pi (d/2 + 3r)) vanishes; the
    // contour route has no such factor and resolves the removable point.
    const SpectralPoint p{3, cx(0.0, 0.0)};
    for (auto tag : {KernelTag::kW4, KernelTag::kWl}) {
      const SignedTorusPoint y{-0.05, -0.3};
      CHECK_THROWS_AS(gl3::kernel_eval_series(tag, p, y), gl3::DegeneratePrefactor);
      const cx a = gl3::kernel_eval_auto(tag, p, y, 1e-6);
      const cx b = gl3::kernel_eval_mb(tag, p, y, {}, 1e-8);
      CHECK(rel_diff(a, b) < 1e-8);
    }
  }
}

TEST_CASE("mellin-barnes contours are shift invariant at large spectral height") {
  // The gamma mass along each axis migrates to Im s = -+ 3 Im r; two distinct
  // abscissa pairs must still integrate to the same kernel value.
  for (double t : {4.0, 8.0}) {
    const SpectralPoint p{2, cx(0.0, t)};
    const SignedTorusPoint y{-0.4, -0.6};
    const cx a = gl3::kernel_eval_mb(KernelTag::kWl, p, y, {-0.25, -0.25}, 1e-7);
    const cx b = gl3::kernel_eval_mb(KernelTag::kWl, p, y, {-0.30, -0.20}, 1e-7);
    const cx c = gl3::kernel_eval_mb(KernelTag::kW4, p, y, {-0.25, -0.25}, 1e-8);
    const cx d = gl3::kernel_eval_mb(KernelTag::kW4, p, y, {-0.35, -0.25}, 1e-8);
    CAPTURE(t);
    CHECK(rel_diff(a, b) < 1e-7);
    CHECK(rel_diff(c, d) < 1e-7);
    // The tempered-line kernel stays order one; unbounded growth here would
    // make every geometric-side sum diverge.
    CHECK(std::abs(a) < 10.0);
    CHECK(std::abs(c) < 10.0);
  }
}

TEST_CASE("mellin-barnes contour legality") {
  const SpectralPoint p{2, cx(0.0, 0.3)};
  const SignedTorusPoint y{-0.1, -0.1};
  CHECK_THROWS_AS(gl3::kernel_eval_mb(KernelTag::kWl, p, y, {-0.25, 0.2}),
                  gl3::PoleOnContour);
  CHECK_THROWS_AS(gl3::kernel_eval_mb(KernelTag::kWl, p, y, {0.45, -0.25}),
                  gl3::PoleOnContour);
  CHECK_THROWS_AS(gl3::kernel_eval_mb(KernelTag::kW4, p, y, {-0.005, -0.25}),
                  gl3::PoleOnContour);
  // At d = 2 the Q-factor pole at -1/2 forbids abscissae near -0.45; at
  // d = 3 the same contour is legal.
  CHECK_THROWS_AS(gl3::kernel_eval_mb(KernelTag::kW4, p, y, {-0.45, -0.25}),
                  gl3::PoleOnContour);
  CHECK_NOTHROW(gl3::kernel_eval_mb(KernelTag::kW4, {3, cx(0.0, 0.3)}, y,
                                    {-0.45, -0.25}));
  CHECK_THROWS_AS(gl3::kernel_eval_mb(KernelTag::kI, p, y), gl3::RangeExceeded);
  CHECK_THROWS_AS(gl3::kernel_eval_mb(KernelTag::kW5, p, y), gl3::RangeExceeded);
}
