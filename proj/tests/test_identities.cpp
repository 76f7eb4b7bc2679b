#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/hypergeometric.hpp"
#include "gl3/identities.hpp"
#include "gl3/quadrature.hpp"
#include "gl3/rng.hpp"
#include "gl3/types.hpp"

using gl3::cx;

namespace {

double rel_diff(cx a, cx b) {
  double denom = std::max(std::abs(a), std::abs(b));
  if (denom < 1e-14) denom = 1.0;
  return std::abs(a - b) / denom;
}

}  // namespace

TEST_CASE("pfq_series elementary cases") {
  // 1F0(a;;z) = (1-z)^{-a}
  cx a(0.7, 0.2);
  cx v = gl3::pfq_series({a}, {}, cx(0.4, 0.0), 1e-13);
  CHECK(rel_diff(v, std::exp(-a * std::log(0.6))) < 1e-12);

  // 2F1(1,1;2;z) = -log(1-z)/z
  cx w = gl3::pfq_series({cx(1.0, 0.0), cx(1.0, 0.0)}, {cx(2.0, 0.0)}, cx(0.3, 0.0), 1e-13);
  CHECK(rel_diff(w, cx(-std::log(0.7) / 0.3, 0.0)) < 1e-12);

  // 0F0(;;z) = e^z
  cx e = gl3::pfq_series({}, {}, cx(0.8, -0.3), 1e-13);
  CHECK(rel_diff(e, std::exp(cx(0.8, -0.3))) < 1e-12);
}

TEST_CASE("pfq_series terminating and error cases") {
  // 2F1(-3, 2; 1.5; 0.7) summed directly.
  cx direct = 0.0, term = 1.0;
  for (int n = 0; n <= 3; ++n) {
    if (n > 0) {
      double dn = n - 1.0;
      term *= (cx(-3.0, 0.0) + dn) * (cx(2.0, 0.0) + dn) /
              ((cx(1.5, 0.0) + dn) * (dn + 1.0)) * 0.7;
    }
    direct += term;
  }
  cx got = gl3::pfq_series({cx(-3.0, 0.0), cx(2.0, 0.0)}, {cx(1.5, 0.0)}, cx(0.7, 0.0), 1e-13);
  CHECK(rel_diff(got, direct) < 1e-13);

  // Termination happens before the lower-parameter pole is reached.
  cx early = gl3::pfq_series({cx(-2.0, 0.0), cx(1.0, 0.0)}, {cx(-5.0, 0.0)}, cx(0.3, 0.0), 1e-13);
  CHECK(rel_diff(early, cx(1.129, 0.0)) < 1e-12);

  CHECK_THROWS_AS(gl3::pfq_series({cx(1.0, 0.0), cx(1.0, 0.0)}, {cx(-2.0, 0.0)},
                                  cx(0.3, 0.0), 1e-12),
                  gl3::DegenerateParameter);
  CHECK_THROWS_AS(gl3::pfq_series({cx(1.0, 0.0), cx(1.0, 0.0)}, {cx(2.0, 0.0)},
                                  cx(1.2, 0.0), 1e-12),
                  gl3::RangeExceeded);
  CHECK_THROWS_AS(gl3::pfq_series({cx(1.0, 0.0), cx(1.0, 0.0), cx(1.0, 0.0)},
                                  {cx(2.0, 0.0)}, cx(0.3, 0.0), 1e-12),
                  gl3::RangeExceeded);
}

TEST_CASE("gauss_2f1_at_1 against the closed gamma form") {
  auto closed = [](cx a, cx b, cx c) {
    return std::exp(gl3::log_gamma(c) + gl3::log_gamma(c - a - b) -
                    gl3::log_gamma(c - a) - gl3::log_gamma(c - b));
  };
  CHECK(rel_diff(gl3::gauss_2f1_at_1(cx(1.0, 0.0), cx(1.0, 0.0), cx(3.0, 0.0), 1e-11),
                 cx(2.0, 0.0)) < 1e-10);
  CHECK(rel_diff(gl3::gauss_2f1_at_1(cx(0.5, 0.0), cx(0.5, 0.0), cx(2.0, 0.0), 1e-11),
                 cx(4.0 / gl3::kPi, 0.0)) < 1e-10);
  // Slow decay: theta = 0.45 exercises the fitted tail.
  cx slow = gl3::gauss_2f1_at_1(cx(0.9, 0.0), cx(0.85, 0.0), cx(2.2, 0.0), 1e-11);
  CHECK(rel_diff(slow, closed(cx(0.9, 0.0), cx(0.85, 0.0), cx(2.2, 0.0))) < 1e-10);
  cx cplx = gl3::gauss_2f1_at_1(cx(0.5, 0.3), cx(0.7, -0.2), cx(2.0, 0.4), 1e-11);
  CHECK(rel_diff(cplx, closed(cx(0.5, 0.3), cx(0.7, -0.2), cx(2.0, 0.4))) < 1e-10);
  // Terminating numerator parameter bypasses the tail machinery.
  cx fin = gl3::gauss_2f1_at_1(cx(-4.0, 0.0), cx(0.7, 0.0), cx(1.9, 0.0), 1e-12);
  cx fin_ref = gl3::pfq_series({cx(-4.0, 0.0), cx(0.7, 0.0)}, {cx(1.9, 0.0)}, cx(1.0, 0.0), 1e-12);
  CHECK(rel_diff(fin, fin_ref) < 1e-12);
  CHECK_THROWS_AS(gl3::gauss_2f1_at_1(cx(1.0, 0.0), cx(1.0, 0.0), cx(1.5, 0.0), 1e-9),
                  gl3::NonConvergent);
}

TEST_CASE("alternating_2f1_at_minus1") {
  // 2F1(1,1;2;-1) = log 2.
  cx v = gl3::alternating_2f1_at_minus1(cx(1.0, 0.0), cx(1.0, 0.0), cx(2.0, 0.0), 1e-11);
  CHECK(rel_diff(v, cx(gl3::kLogTwo, 0.0)) < 1e-10);

  // 2F1(1/2,1;3/2;-1) = pi/4.
  cx w = gl3::alternating_2f1_at_minus1(cx(0.5, 0.0), cx(1.0, 0.0), cx(1.5, 0.0), 1e-11);
  CHECK(rel_diff(w, cx(gl3::kPi / 4.0, 0.0)) < 1e-10);

  // Independent Euler-integral oracle:
  // 2F1(a,b;c;-1) = Gamma(c)/(Gamma(b)Gamma(c-b)) * int x^{b-1}(1-x)^{c-b-1}(1+x)^{-a}.
  cx a(0.3, 0.1), b(0.4, 0.0), c(1.5, 0.0);
  auto f = [&](double x, double omx) {
    return std::exp((b - 1.0) * std::log(x) + (c - b - 1.0) * std::log(omx) -
                    a * std::log1p(x));
  };
  cx integral = gl3::tanh_sinh(f, 1e-12);
  cx oracle = integral / gl3::beta_fn(b, c - b);
  cx got = gl3::alternating_2f1_at_minus1(a, b, c, 1e-11);
  CHECK(rel_diff(got, oracle) < 1e-10);
}

TEST_CASE("pfq3_at_1") {
  // A matching upper/lower pair cancels, leaving a 2F1 at unit argument.
  cx u1(0.6, 0.2), u2(0.8, -0.1), l1(2.4, 0.3), x(0.77, 0.0);
  cx reduced = gl3::pfq3_at_1(u1, u2, x, l1, x, 1e-11);
  CHECK(rel_diff(reduced, gl3::gauss_2f1_at_1(u1, u2, l1, 1e-11)) < 1e-10);

  // Invariance under the Thomae transformation
  // 3F2(al,be,ga; de,ep; 1) = G(de)G(ep)G(s) / (G(al)G(s+be)G(s+ga))
  //                           * 3F2(de-al, ep-al, s; s+be, s+ga; 1)
  // with s = de+ep-al-be-ga.
  cx al(0.5, 0.1), be(0.3, -0.2), ga(0.4, 0.0), de(1.2, 0.2), ep(1.1, -0.1);
  cx s = de + ep - al - be - ga;
  cx left = gl3::pfq3_at_1(al, be, ga, de, ep, 1e-11);
  cx pref = std::exp(gl3::log_gamma(de) + gl3::log_gamma(ep) + gl3::log_gamma(s) -
                     gl3::log_gamma(al) - gl3::log_gamma(s + be) - gl3::log_gamma(s + ga));
  cx right = pref * gl3::pfq3_at_1(de - al, ep - al, s, s + be, s + ga, 1e-11);
  CHECK(rel_diff(left, right) < 1e-10);

  // Terminating upper parameter matches the direct series.
  cx fin = gl3::pfq3_at_1(cx(-3.0, 0.0), u1, u2, l1, cx(1.7, 0.0), 1e-12);
  cx fin_ref = gl3::pfq_series({cx(-3.0, 0.0), u1, u2}, {l1, cx(1.7, 0.0)},
                               cx(1.0, 0.0), 1e-12);
  CHECK(rel_diff(fin, fin_ref) < 1e-12);

  CHECK_THROWS_AS(gl3::pfq3_at_1(cx(1.0, 0.0), cx(1.0, 0.0), cx(0.5, 0.0),
                                 cx(1.2, 0.0), cx(1.3, 0.0), 1e-9),
                  gl3::NonConvergent);
  CHECK_THROWS_AS(gl3::pfq3_at_1(u1, u2, x, cx(-2.0, 0.0), l1, 1e-9),
                  gl3::DegenerateParameter);
}

TEST_CASE("hurwitz_zeta") {
  CHECK(rel_diff(gl3::hurwitz_zeta(cx(2.0, 0.0), 10.0), gl3::trigamma(cx(10.0, 0.0))) < 1e-12);
  const double zeta3 = 1.2020569031595942854;
  double partial = 0.0;
  for (int k = 1; k <= 11; ++k) partial += 1.0 / (static_cast<double>(k) * k * k);
  CHECK(rel_diff(gl3::hurwitz_zeta(cx(3.0, 0.0), 12.0), cx(zeta3 - partial, 0.0)) < 1e-12);

  cx s(2.5, 0.7);
  const double a = 3.0;
  cx brute = 0.0;
  const int N = 100000;
  for (int k = N - 1; k >= 0; --k) brute += gl3::rpow(k + a, -s);
  brute += gl3::rpow(N + a, 1.0 - s) / (s - 1.0) + 0.5 * gl3::rpow(N + a, -s) +
           s * gl3::rpow(N + a, -s - 1.0) / 12.0;
  CHECK(rel_diff(gl3::hurwitz_zeta(s, a), brute) < 1e-11);
  CHECK_THROWS_AS(gl3::hurwitz_zeta(cx(0.5, 0.0), 10.0), gl3::RangeExceeded);
  CHECK_THROWS_AS(gl3::hurwitz_zeta(cx(2.0, 0.0), 1.0), gl3::RangeExceeded);
}

TEST_CASE("identity tag names round-trip") {
  const auto& tags = gl3::all_identity_tags();
  CHECK(tags.size() == gl3::kIdentityTagCount);
  for (gl3::IdentityTag t : tags) {
    auto back = gl3::identity_tag_from_name(gl3::identity_tag_name(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(!gl3::identity_tag_from_name("NoSuchIdentity").has_value());
}

TEST_CASE("pinned identity cases") {
  // Pfaff at a=b=1, c=2: both sides equal 2 log 2.
  gl3::IdentityCase pfaff{gl3::IdentityTag::kPfaff,
                          {{"a", cx(1.0, 0.0)}, {"b", cx(1.0, 0.0)}, {"c", cx(2.0, 0.0)}}};
  auto rep = gl3::verify_identity(pfaff, 1e-9);
  CHECK(rep.pass);
  CHECK(rel_diff(rep.lhs, cx(2.0 * gl3::kLogTwo, 0.0)) < 1e-9);

  gl3::IdentityCase gauss{gl3::IdentityTag::kGaussThm,
                          {{"a", cx(1.0, 0.0)}, {"b", cx(1.0, 0.0)}, {"c", cx(3.0, 0.0)}}};
  rep = gl3::verify_identity(gauss, 1e-9);
  CHECK(rep.pass);
  CHECK(rel_diff(rep.lhs, cx(2.0, 0.0)) < 1e-9);

  gl3::IdentityCase tob{gl3::IdentityTag::kTwoF1toBeta,
                        {{"a", cx(0.5, 0.0)}, {"b", cx(0.5, 0.0)}}};
  rep = gl3::verify_identity(tob, 1e-9);
  CHECK(rep.pass);
  CHECK(rel_diff(rep.rhs, cx(gl3::kPi, 0.0)) < 1e-12);

  gl3::IdentityCase mb1f0{gl3::IdentityTag::kMB1F0Eval,
                          {{"a", cx(0.0, 0.0)}, {"b", cx(1.0, 0.0)}}};
  rep = gl3::verify_identity(mb1f0, 1e-9);
  CHECK(rep.pass);
  CHECK(rel_diff(rep.rhs, cx(0.5, 0.0)) < 1e-12);

  // Vanishing branch of the beta Mellin inversion at x = 2.
  gl3::IdentityCase zero{gl3::IdentityTag::kBetaInvMellin,
                         {{"a", cx(0.7, 0.3)}, {"x", cx(2.0, 0.0)}}};
  rep = gl3::verify_identity(zero, 1e-9);
  CHECK(rep.pass);
  CHECK(std::abs(rep.lhs) < 1e-9);
  CHECK(std::abs(rep.rhs) == 0.0);

  // Thomae reduction anchor: both routes give 1.699530150101 here.
  gl3::IdentityCase thomae{gl3::IdentityTag::kThomaeMB,
                           {{"a", cx(1.1, 0.0)},
                            {"b", cx(0.1, 0.0)},
                            {"c", cx(0.9, 0.0)},
                            {"d", cx(0.6, 0.0)}}};
  rep = gl3::verify_identity(thomae, 1e-9);
  CHECK(rep.pass);
  CHECK(rel_diff(rep.rhs, cx(1.699530150101, 0.0)) < 1e-10);
}

TEST_CASE("identity parameter validation") {
  gl3::IdentityCase bad_theta{gl3::IdentityTag::kGaussThm,
                              {{"a", cx(1.0, 0.0)}, {"b", cx(1.0, 0.0)}, {"c", cx(2.1, 0.0)}}};
  CHECK(!gl3::identity_params_valid(bad_theta));
  CHECK_THROWS_AS(gl3::verify_identity(bad_theta, 1e-9), gl3::DegenerateParameter);

  gl3::IdentityCase missing{gl3::IdentityTag::kPfaff, {{"a", cx(0.5, 0.0)}}};
  CHECK(!gl3::identity_params_valid(missing));

  gl3::IdentityCase ok{gl3::IdentityTag::kEulerBeta,
                       {{"u", cx(0.8, 0.1)}, {"v", cx(1.2, -0.2)}}};
  CHECK(gl3::identity_params_valid(ok));
}

TEST_CASE("random sweeps are deterministic and pass on fast tags") {
  auto r1 = gl3::random_sweep(gl3::IdentityTag::kEulerBeta, 6, 3, 1e-9);
  auto r2 = gl3::random_sweep(gl3::IdentityTag::kEulerBeta, 6, 3, 1e-9);
  CHECK(r1.failures == 0);
  CHECK(r1.count == 6);
  CHECK(r1.max_rel_error == r2.max_rel_error);

  auto r3 = gl3::random_sweep(gl3::IdentityTag::kSimpleMB, 6, 3, 1e-9);
  CHECK(r3.failures == 0);
  auto r4 = gl3::random_sweep(gl3::IdentityTag::kGaussThm, 6, 3, 1e-9);
  CHECK(r4.failures == 0);
  auto r5 = gl3::random_sweep(gl3::IdentityTag::kPfaff, 6, 3, 1e-9);
  CHECK(r5.failures == 0);
}

TEST_CASE("single cases of the quadrature-heavy identities") {
  gl3::Lcg64 rng(12021);
  for (gl3::IdentityTag t : {gl3::IdentityTag::kPFqToMB, gl3::IdentityTag::kBetaInvMellin,
                             gl3::IdentityTag::kThomaeMB, gl3::IdentityTag::kElem2F1,
                             gl3::IdentityTag::kBarnesFirst, gl3::IdentityTag::kMB1F0Eval,
                             gl3::IdentityTag::kTwoF1toBeta}) {
    gl3::IdentityCase c = gl3::random_identity_case(t, rng);
    auto rep = gl3::verify_identity(c, 1e-9);
    INFO(gl3::identity_tag_name(t), " rel_error=", rep.rel_error);
    CHECK(rep.pass);
  }
}
