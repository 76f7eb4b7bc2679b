#include "gl3/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/hypergeometric.hpp"
#include "gl3/quadrature.hpp"
#include "gl3/reduce.hpp"

namespace gl3 {
namespace {

cx par(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DegenerateParameter("missing identity parameter: " + key);
  return it->second;
}

double par_real(const ParamMap& p, const std::string& key) {
  const cx v = par(p, key);
  if (std::abs(v.imag()) > 1e-14)
    throw DegenerateParameter("identity parameter must be real: " + key);
  return v.real();
}

double inner_tol(double tol) { return std::max(1e-13, 0.01 * tol); }

// Trapezoid sum over Re s = sigma with half weights at the truncation points;
// the caller completes the two tails separately.  Returns the ds/(2 pi i)
// normalization of h * sum f(sigma + i k h).
template <class F>
cx trapezoid_line(const F& f, double sigma, long K, double h) {
  std::vector<cx> vals;
  vals.reserve(2 * K + 1);
  for (long k = -K; k <= K; ++k) {
    cx v = f(cx(sigma, static_cast<double>(k) * h));
    if (k == -K || k == K) v *= 0.5;
    vals.push_back(v);
  }
  return pairwise_sum(vals) * (h / kTwoPi);
}

// Left side of the beta Mellin-inversion identity: the integral of
// Gamma(s) Gamma(a+1) / Gamma(a+1+s) x^{-s} over Re s = 1, completed with
// integration-by-parts tails driven by the digamma/trigamma log-derivatives.
cx beta_inv_mellin_line(cx a, double x, long K, double h) {
  const double sigma = 1.0;
  const double lx = std::log(x);
  const cx lga1 = log_gamma(a + 1.0);
  auto f = [&](cx s) { return std::exp(log_gamma(s) + lga1 - log_gamma(a + 1.0 + s) - s * lx); };
  cx total = trapezoid_line(f, sigma, K, h);
  const double H = static_cast<double>(K) * h;
  auto tail = [&](double t, bool upper) {
    const cx s(sigma, t);
    const cx fv = f(s);
    const cx l1 = cx(0.0, 1.0) * (digamma(s) - digamma(a + 1.0 + s) - lx);
    const cx l2 = -(trigamma(s) - trigamma(a + 1.0 + s));
    return (upper ? ibp_tail_upper(fv, l1, l2) : ibp_tail_lower(fv, l1, l2)) / kTwoPi;
  };
  total += tail(H, true) + tail(-H, false);
  return total;
}

cx beta_inv_mellin_lhs(cx a, double x, double tol) {
  const cx v1 = beta_inv_mellin_line(a, x, 83325, 0.12);
  const cx v2 = beta_inv_mellin_line(a, x, 333300, 0.06);
  // The 0.2 floor keeps the stabilization gate above floating-point noise of
  // the grid sums on the vanishing branch (x >= 1), where both values are
  // zero up to rounding.
  const double scale = std::max({std::abs(v1), std::abs(v2), 0.2});
  if (std::abs(v1 - v2) > 0.25 * tol * scale)
    throw NonConvergent("beta inversion line integral did not stabilize under refinement");
  return v2;
}

// Left side of the Thomae-type identity.  The integrand decays only like
// |t|^{-2} with asymptotically constant phase (three gammas up, three down),
// so the grid sum is completed by an algebraic tail (C + D/t + E/t^2)/t^2
// fitted at grid heights H, 0.8 H, 0.64 H.  Parameters are real, so the lower
// half-line is the conjugate of the upper one.
cx thomae_line(double a, double b, double c, double d, long K, double h) {
  const double sigma = 0.5 * std::min(a, a + b - d);
  auto f = [&](cx s) {
    return std::exp(log_gamma(s) + log_gamma(a - s) + log_gamma(a + b - d - s) -
                    log_gamma(2.0 - c + s) - log_gamma(a + b - s) -
                    log_gamma(a + c - d - s));
  };
  std::vector<cx> upper(K + 1);
  for (long k = 0; k <= K; ++k) upper[k] = f(cx(sigma, static_cast<double>(k) * h));

  std::vector<cx> vals;
  vals.reserve(K + 1);
  vals.push_back(upper[0]);
  for (long k = 1; k <= K; ++k) {
    cx v = 2.0 * cx(upper[k].real(), 0.0);
    if (k == K) v *= 0.5;
    vals.push_back(v);
  }
  cx grid = pairwise_sum(vals) * (h / kTwoPi);

  const long k2 = (K * 4) / 5, k3 = (K * 16) / 25;
  const double hts[3] = {static_cast<double>(K) * h, static_cast<double>(k2) * h,
                         static_cast<double>(k3) * h};
  const cx samples[3] = {upper[K], upper[k2], upper[k3]};
  // Solve (1, 1/H_i, 1/H_i^2) (C, D, E)^T = f(H_i) H_i^2 by elimination.
  cx m[3][3], u[3];
  for (int i = 0; i < 3; ++i) {
    u[i] = samples[i] * hts[i] * hts[i];
    m[i][0] = 1.0;
    m[i][1] = 1.0 / hts[i];
    m[i][2] = 1.0 / (hts[i] * hts[i]);
  }
  for (int col = 0; col < 2; ++col)
    for (int row = col + 1; row < 3; ++row) {
      const cx fac = m[row][col] / m[col][col];
      for (int j = col; j < 3; ++j) m[row][j] -= fac * m[col][j];
      u[row] -= fac * u[col];
    }
  const cx e = u[2] / m[2][2];
  const cx dd = (u[1] - m[1][2] * e) / m[1][1];
  const cx cc = (u[0] - m[0][1] * dd - m[0][2] * e) / m[0][0];
  const double H = hts[0];
  const cx tail_up = cc / H + dd / (2.0 * H * H) + e / (3.0 * H * H * H);
  return grid + 2.0 * cx(tail_up.real(), 0.0) / kTwoPi;
}

cx thomae_lhs(double a, double b, double c, double d, double tol) {
  const cx v1 = thomae_line(a, b, c, d, 60000, 0.05);
  const cx v2 = thomae_line(a, b, c, d, 180000, 0.025);
  const double scale = std::max({std::abs(v1), std::abs(v2), 1e-8});
  if (std::abs(v1 - v2) > 0.25 * tol * scale)
    throw NonConvergent("Thomae line integral did not stabilize under refinement");
  return v2;
}

MbIntegrand one_dim(std::function<cx(cx)> f, std::vector<std::vector<PoleFamily>> poles) {
  MbIntegrand g;
  g.dims = 1;
  g.eval = [f = std::move(f)](const std::vector<cx>& s) { return f(s[0]); };
  g.poles = std::move(poles);
  return g;
}

struct SidePair {
  cx lhs;
  cx rhs;
};

SidePair eval_pfq_to_mb(const ParamMap& p, double tol) {
  const cx a1 = par(p, "a1"), a2 = par(p, "a2"), b1 = par(p, "b1");
  const double z = par_real(p, "z");
  const double ti = inner_tol(tol);
  const cx pref = std::exp(log_gamma(a1) + log_gamma(a2) - log_gamma(b1));
  const cx lhs = pref * pfq_series({a1, a2}, {b1}, cx(-z, 0.0), ti);
  const double lz = std::log(z);
  auto f = [&](cx s) {
    return std::exp(log_gamma(s) + log_gamma(a1 - s) + log_gamma(a2 - s) -
                    log_gamma(b1 - s) - s * lz);
  };
  MbIntegrand g = one_dim(f, {{{cx(0.0, 0.0), PoleSide::left},
                               {a1, PoleSide::right},
                               {a2, PoleSide::right}}});
  ContourSpec spec;
  spec.abscissa = 0.5 * std::min(a1.real(), a2.real());
  spec.height = 18.0;
  const cx rhs = mb_integrate(g, {spec}, ti);
  return {lhs, rhs};
}

SidePair eval_beta_inv_mellin(const ParamMap& p, double tol) {
  const cx a = par(p, "a");
  const double x = par_real(p, "x");
  const cx lhs = beta_inv_mellin_lhs(a, x, tol);
  const cx rhs = (x < 1.0) ? std::exp(a * std::log1p(-x)) : cx(0.0, 0.0);
  return {lhs, rhs};
}

// The Barnes integral on the left reduces, by expanding over the residues at
// s = -n and applying a Thomae transformation with unit excess, to a 3F2 at
// unit argument:
//
//   LHS(a,b,c,d) = 3F2(1, b, c-d; 1+a+b-d, c; 1) / ((a+b-d) Gamma(2-c) Gamma(c)).
//
// The right side is summed by series (decay n^{-1-a}) with the fitted
// algebraic tail, fully independent of the contour quadrature on the left.
SidePair eval_thomae(const ParamMap& p, double tol) {
  const double a = par_real(p, "a"), b = par_real(p, "b");
  const double c = par_real(p, "c"), d = par_real(p, "d");
  const double ti = inner_tol(tol);
  const cx lhs = thomae_lhs(a, b, c, d, tol);
  const cx pref = 1.0 / ((a + b - d) * gamma_fn(cx(2.0 - c, 0.0)) * gamma_fn(cx(c, 0.0)));
  const cx rhs =
      pref * pfq3_at_1(cx(1.0, 0.0), cx(b, 0.0), cx(c - d, 0.0),
                       cx(1.0 + a + b - d, 0.0), cx(c, 0.0), ti);
  return {lhs, rhs};
}

SidePair eval_euler_beta(const ParamMap& p, double tol) {
  const cx u = par(p, "u"), v = par(p, "v");
  auto f = [&](double x, double omx) {
    return std::exp((u - 1.0) * std::log(x) + (v - 1.0) * std::log(omx));
  };
  const cx lhs = tanh_sinh(f, inner_tol(tol));
  return {lhs, beta_fn(u, v)};
}

SidePair eval_elem_2f1(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b"), c = par(p, "c");
  const double y = par_real(p, "y");
  const double ti = inner_tol(tol);
  auto f = [&](double x, double omx) {
    return std::exp(a * std::log(omx) + b * std::log(x) + c * std::log1p(y * x));
  };
  const cx lhs = tanh_sinh(f, ti);
  const cx pref = std::exp(log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(a + b + 2.0));
  const cx rhs = pref * pfq_series({b + 1.0, -c}, {a + b + 2.0}, cx(-y, 0.0), ti);
  return {lhs, rhs};
}

SidePair eval_pfaff(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b"), c = par(p, "c");
  const double ti = inner_tol(tol);
  const cx lhs = pfq_series({a, b}, {c}, cx(0.5, 0.0), ti);
  const cx rhs = std::exp(a * kLogTwo) * alternating_2f1_at_minus1(a, c - b, c, ti);
  return {lhs, rhs};
}

SidePair eval_barnes_first(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b"), c = par(p, "c"), d = par(p, "d");
  auto f = [&](cx s) {
    return std::exp(log_gamma(a + s) + log_gamma(b + s) + log_gamma(c - s) +
                    log_gamma(d - s));
  };
  MbIntegrand g = one_dim(f, {{{-a, PoleSide::left},
                               {-b, PoleSide::left},
                               {c, PoleSide::right},
                               {d, PoleSide::right}}});
  ContourSpec spec;
  spec.abscissa = 0.0;
  spec.height = 18.0;
  const cx lhs = mb_integrate(g, {spec}, inner_tol(tol));
  const cx rhs = std::exp(log_gamma(a + c) + log_gamma(a + d) + log_gamma(b + c) +
                          log_gamma(b + d) - log_gamma(a + b + c + d));
  return {lhs, rhs};
}

SidePair eval_gauss_thm(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b"), c = par(p, "c");
  const cx lhs = gauss_2f1_at_1(a, b, c, inner_tol(tol));
  const cx rhs = std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) -
                          log_gamma(c - b));
  return {lhs, rhs};
}

SidePair eval_simple_mb(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b");
  const double x = par_real(p, "x");
  const double lx = std::log(x);
  auto f = [&](cx s) {
    return std::exp(-0.5 * s * lx + log_gamma(a + s) + log_gamma(b - s));
  };
  MbIntegrand g = one_dim(f, {{{-a, PoleSide::left}, {b, PoleSide::right}}});
  ContourSpec spec;
  spec.abscissa = 0.5 * (b.real() - a.real());
  const cx lhs = mb_integrate(g, {spec}, inner_tol(tol));
  const cx rhs = std::exp(-(a + b) * std::log1p(std::sqrt(x)) + 0.5 * a * lx +
                          log_gamma(a + b));
  return {lhs, rhs};
}

SidePair eval_mb_1f0(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b");
  auto f = [&](cx s) {
    return std::exp(log_gamma(s - a) + log_gamma(b - s) - log_gamma(b - a));
  };
  MbIntegrand g = one_dim(f, {{{a, PoleSide::left}, {b, PoleSide::right}}});
  ContourSpec spec;
  spec.abscissa = 0.5 * (a.real() + b.real());
  const cx lhs = mb_integrate(g, {spec}, inner_tol(tol));
  return {lhs, std::exp((a - b) * kLogTwo)};
}

SidePair eval_2f1_to_beta(const ParamMap& p, double tol) {
  const cx a = par(p, "a"), b = par(p, "b");
  const double ti = inner_tol(tol);
  const cx lhs = alternating_2f1_at_minus1(a + b, a, a + 1.0, ti) / a +
                 alternating_2f1_at_minus1(a + b, b, b + 1.0, ti) / b;
  return {lhs, beta_fn(a, b)};
}

SidePair eval_sides(const IdentityCase& c, double tol) {
  switch (c.tag) {
    case IdentityTag::kPFqToMB: return eval_pfq_to_mb(c.params, tol);
    case IdentityTag::kBetaInvMellin: return eval_beta_inv_mellin(c.params, tol);
    case IdentityTag::kThomaeMB: return eval_thomae(c.params, tol);
    case IdentityTag::kEulerBeta: return eval_euler_beta(c.params, tol);
    case IdentityTag::kElem2F1: return eval_elem_2f1(c.params, tol);
    case IdentityTag::kPfaff: return eval_pfaff(c.params, tol);
    case IdentityTag::kBarnesFirst: return eval_barnes_first(c.params, tol);
    case IdentityTag::kGaussThm: return eval_gauss_thm(c.params, tol);
    case IdentityTag::kSimpleMB: return eval_simple_mb(c.params, tol);
    case IdentityTag::kMB1F0Eval: return eval_mb_1f0(c.params, tol);
    case IdentityTag::kTwoF1toBeta: return eval_2f1_to_beta(c.params, tol);
  }
  throw DegenerateParameter("unknown identity tag");
}

}  // namespace

const std::vector<IdentityTag>& all_identity_tags() {
  static const std::vector<IdentityTag> tags = {
      IdentityTag::kPFqToMB,     IdentityTag::kBetaInvMellin,
      IdentityTag::kThomaeMB,    IdentityTag::kEulerBeta,
      IdentityTag::kElem2F1,     IdentityTag::kPfaff,
      IdentityTag::kBarnesFirst, IdentityTag::kGaussThm,
      IdentityTag::kSimpleMB,    IdentityTag::kMB1F0Eval,
      IdentityTag::kTwoF1toBeta,
  };
  return tags;
}

std::string identity_tag_name(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::kPFqToMB: return "pFqToMB";
    case IdentityTag::kBetaInvMellin: return "BetaInvMellin";
    case IdentityTag::kThomaeMB: return "ThomaeMB";
    case IdentityTag::kEulerBeta: return "EulerBeta";
    case IdentityTag::kElem2F1: return "Elem2F1";
    case IdentityTag::kPfaff: return "Pfaff";
    case IdentityTag::kBarnesFirst: return "BarnesFirst";
    case IdentityTag::kGaussThm: return "GaussThm";
    case IdentityTag::kSimpleMB: return "SimpleMB";
    case IdentityTag::kMB1F0Eval: return "MB1F0Eval";
    case IdentityTag::kTwoF1toBeta: return "TwoF1toBeta";
  }
  return "unknown";
}

std::optional<IdentityTag> identity_tag_from_name(std::string_view name) {
  for (IdentityTag t : all_identity_tags())
    if (identity_tag_name(t) == name) return t;
  return std::nullopt;
}

bool identity_params_valid(const IdentityCase& c) {
  const ParamMap& p = c.params;
  try {
    switch (c.tag) {
      case IdentityTag::kPFqToMB: {
        const cx a1 = par(p, "a1"), a2 = par(p, "a2"), b1 = par(p, "b1");
        const double z = par_real(p, "z");
        return a1.real() > 0.2 && a2.real() > 0.2 && b1.real() > 0.5 &&
               z > 0.05 && z < 0.95;
      }
      case IdentityTag::kBetaInvMellin: {
        const cx a = par(p, "a");
        const double x = par_real(p, "x");
        return a.real() > 0.5 && a.real() < 4.0 &&
               ((x > 0.05 && x <= 0.85) || x >= 1.15);
      }
      case IdentityTag::kThomaeMB: {
        const double a = par_real(p, "a"), b = par_real(p, "b");
        const double cc = par_real(p, "c"), d = par_real(p, "d");
        return a >= 0.4 && a <= 1.5 && d >= 0.4 && d <= 1.0 &&
               (a + b - d) >= 0.35 && (a + b - d) <= 1.2 && (cc - b) >= 0.4 &&
               (cc - b) <= 1.2 && cc >= 0.15 && cc <= 1.8;
      }
      case IdentityTag::kEulerBeta: {
        return par(p, "u").real() > 0.2 && par(p, "v").real() > 0.2;
      }
      case IdentityTag::kElem2F1: {
        const double y = par_real(p, "y");
        return par(p, "a").real() > -0.5 && par(p, "b").real() > -0.5 &&
               std::abs(par(p, "c")) < 2.5 && y > 0.05 && y < 0.95;
      }
      case IdentityTag::kPfaff: {
        const cx a = par(p, "a"), b = par(p, "b"), cc = par(p, "c");
        return a.real() > 0.05 && a.real() < 1.2 &&
               std::abs(a.real() - b.real()) < 0.6 && cc.real() >= 1.2;
      }
      case IdentityTag::kBarnesFirst: {
        return par(p, "a").real() > 0.1 && par(p, "b").real() > 0.1 &&
               par(p, "c").real() > 0.1 && par(p, "d").real() > 0.1;
      }
      case IdentityTag::kGaussThm: {
        const cx a = par(p, "a"), b = par(p, "b"), cc = par(p, "c");
        const cx theta = cc - a - b;
        return a.real() > 0.2 && b.real() > 0.2 && theta.real() > 0.3 &&
               theta.real() < 2.5 && (cc - a).real() > 0.3 && (cc - b).real() > 0.3;
      }
      case IdentityTag::kSimpleMB: {
        const double x = par_real(p, "x");
        return par(p, "a").real() > 0.25 && par(p, "b").real() > 0.25 &&
               x > 0.04 && x < 5.0;
      }
      case IdentityTag::kMB1F0Eval: {
        const cx a = par(p, "a"), b = par(p, "b");
        return (b - a).real() >= 0.4 && a.real() > -1.5 && a.real() < 1.0;
      }
      case IdentityTag::kTwoF1toBeta: {
        const cx a = par(p, "a"), b = par(p, "b");
        return a.real() > 0.15 && b.real() > 0.15 && (a + b).real() < 1.85;
      }
    }
  } catch (const DegenerateParameter&) {
    return false;
  }
  return false;
}

IdentityReport verify_identity(const IdentityCase& c, double tol) {
  if (!identity_params_valid(c))
    throw DegenerateParameter("identity parameters outside the safe region for " +
                              identity_tag_name(c.tag));
  const SidePair sides = eval_sides(c, tol);
  IdentityReport rep;
  rep.lhs = sides.lhs;
  rep.rhs = sides.rhs;
  double denom = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  if (denom < 1e-8) denom = 1.0;
  rep.rel_error = std::abs(rep.lhs - rep.rhs) / denom;
  rep.pass = rep.rel_error <= tol;
  return rep;
}

IdentityCase random_identity_case(IdentityTag tag, Lcg64& rng) {
  auto re_im = [&](double lo, double hi, double im) {
    return cx(rng.uniform(lo, hi), rng.uniform(-im, im));
  };
  IdentityCase c;
  c.tag = tag;
  switch (tag) {
    case IdentityTag::kPFqToMB:
      c.params["a1"] = re_im(0.5, 1.5, 0.4);
      c.params["a2"] = re_im(0.5, 1.5, 0.4);
      c.params["b1"] = re_im(1.0, 2.0, 0.3);
      c.params["z"] = rng.uniform(0.25, 0.85);
      break;
    case IdentityTag::kBetaInvMellin:
      c.params["a"] = re_im(1.6, 3.4, 0.4);
      c.params["x"] = (rng.uniform() < 0.8) ? rng.uniform(0.12, 0.8)
                                            : rng.uniform(1.2, 2.5);
      break;
    case IdentityTag::kThomaeMB: {
      const double a = rng.uniform(0.9, 1.3);
      const double d = rng.uniform(0.5, 0.8);
      const double cb = rng.uniform(0.6, 1.0);
      const double b = d - a + 0.4 + rng.uniform(0.0, 0.4);
      c.params["a"] = a;
      c.params["b"] = b;
      c.params["c"] = b + cb;
      c.params["d"] = d;
      break;
    }
    case IdentityTag::kEulerBeta:
      c.params["u"] = re_im(0.3, 2.0, 0.5);
      c.params["v"] = re_im(0.3, 2.0, 0.5);
      break;
    case IdentityTag::kElem2F1:
      c.params["a"] = re_im(-0.4, 1.2, 0.4);
      c.params["b"] = re_im(-0.4, 1.2, 0.4);
      c.params["c"] = re_im(-1.0, 1.5, 0.5);
      c.params["y"] = rng.uniform(0.1, 0.9);
      break;
    case IdentityTag::kPfaff: {
      const cx a = re_im(0.2, 1.0, 0.2);
      c.params["a"] = a;
      c.params["b"] = a + re_im(-0.4, 0.4, 0.2);
      c.params["c"] = re_im(1.5, 2.5, 0.2);
      break;
    }
    case IdentityTag::kBarnesFirst:
      c.params["a"] = re_im(0.15, 1.8, 0.5);
      c.params["b"] = re_im(0.15, 1.8, 0.5);
      c.params["c"] = re_im(0.15, 1.8, 0.5);
      c.params["d"] = re_im(0.15, 1.8, 0.5);
      break;
    case IdentityTag::kGaussThm: {
      const cx a = re_im(0.3, 1.5, 0.3);
      const cx b = re_im(0.3, 1.5, 0.3);
      c.params["a"] = a;
      c.params["b"] = b;
      c.params["c"] = a + b + re_im(0.45, 2.2, 0.3);
      break;
    }
    case IdentityTag::kSimpleMB:
      c.params["a"] = re_im(0.3, 1.8, 0.4);
      c.params["b"] = re_im(0.3, 1.8, 0.4);
      c.params["x"] = rng.uniform(0.05, 4.0);
      break;
    case IdentityTag::kMB1F0Eval: {
      const cx a = re_im(-1.0, 0.5, 0.4);
      c.params["a"] = a;
      c.params["b"] = a + re_im(0.5, 2.0, 0.4);
      break;
    }
    case IdentityTag::kTwoF1toBeta:
      c.params["a"] = re_im(0.25, 0.9, 0.2);
      c.params["b"] = re_im(0.25, 0.9, 0.2);
      break;
  }
  return c;
}

SweepReport random_sweep(IdentityTag tag, int count, std::uint64_t seed, double tol) {
  std::size_t index = 0;
  const auto& tags = all_identity_tags();
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (tags[i] == tag) index = i;
  Lcg64 rng(seed ^ (0x517cc1b727220a95ull * (index + 1)));
  SweepReport rep;
  rep.tag = tag;
  rep.count = count;
  for (int i = 0; i < count; ++i) {
    const IdentityCase c = random_identity_case(tag, rng);
    const IdentityReport r = verify_identity(c, tol);
    rep.max_rel_error = std::max(rep.max_rel_error, r.rel_error);
    if (!r.pass) {
      ++rep.failures;
      rep.failed_cases.push_back(c);
    }
  }
  return rep;
}

}  // namespace gl3
