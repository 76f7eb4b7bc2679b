#include "gl3/whittaker.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/reduce.hpp"

namespace gl3 {
namespace {

void check_spectral(const SpectralPoint& p) {
  if (p.d < 2 || p.d > 16)
    throw RangeExceeded("spectral weight d must lie in [2, 16]");
}

void check_torus(const TorusPoint& y) {
  if (!(y.y1 > 0.0) || !(y.y2 > 0.0))
    throw RangeExceeded("torus coordinates must be positive");
}

// The integrand carries the gamma factors
//   Gamma((d-1)/2 + s1 - r), Gamma((d-1)/2 + s2 + r),
//   Gamma((d-m+s1+2r)/2),    Gamma((l+s2-2r)/2),
// whose pole families must all lie strictly left of the contours; the
// closest approach is at m = d and l = 0.
void check_contour(const SpectralPoint& p, const WhittakerContour& c) {
  constexpr double kMargin = 0.025;
  if (c.s1 < 0.05 || c.s2 < 0.05)
    throw PoleOnContour("Whittaker contour abscissas must be positive");
  const double rr = p.r.real();
  const double half_d = 0.5 * (p.d - 1);
  const double worst =
      std::min(std::min(half_d + c.s1 - rr, half_d + c.s2 + rr),
               std::min(0.5 * (c.s1 + 2.0 * rr), 0.5 * (c.s2 - 2.0 * rr)));
  if (worst < kMargin)
    throw PoleOnContour(
        "Whittaker contour does not separate the gamma pole families");
}

// One trapezoid grid over the two contours.  The double integral separates,
// for each term of the finite binomial sum, into products of one-variable
// tables: with B(u1, u2) = Gamma(u1) Gamma(u2) / Gamma(u1 + u2), the s1 and
// s2 factors give the tables a (per m) and b (per l), and the reciprocal
// gamma couples them only through s1 + s2, giving the table g (per
// nu = d - m + l) on the sum lattice.
class RowEvaluator {
 public:
  RowEvaluator(const SpectralPoint& p, const TorusPoint& y,
               const WhittakerContour& c, double h, int half)
      : d_(p.d),
        r_(p.r),
        c_(c),
        h_(h),
        half_(half),
        n_(2 * half + 1),
        p1_(n_),
        p2_(n_),
        a_(p.d + 1),
        b_(p.d + 1),
        g_(p.d + 1),
        pair_(static_cast<std::size_t>(p.d + 1) * (p.d + 1)),
        have_(pair_.size(), 0) {
    const double l1 = std::log(kTwoPi * y.y1);
    const double l2 = std::log(kTwoPi * y.y2);
    const double half_d = 0.5 * (d_ - 1);
    for (int j = 0; j < n_; ++j) {
      const double t = (j - half_) * h_;
      const cx s1(c_.s1, t);
      const cx s2(c_.s2, t);
      p1_[j] = std::exp((1.0 - s1) * l1 + log_gamma(half_d + s1 - r_));
      p2_[j] = std::exp((1.0 - s2) * l2 + log_gamma(half_d + s2 + r_));
    }
  }

  cx entry(int mprime) {
    const int m = std::abs(mprime);
    cx sum = 0.0;
    for (int l = 0; l <= m; ++l) {
      double coef = binomial(m, l);
      if (mprime < 0 && (l & 1)) coef = -coef;
      sum += coef * cached_pair(m, l);
    }
    const double pref = std::exp(0.5 * log_binomial(2 * d_, d_ + m)) /
                        (std::ldexp(1.0, d_ + 1) * kPi);
    return pref * sum;
  }

 private:
  const std::vector<cx>& table_a(int m) {
    auto& v = a_[m];
    if (v.empty()) {
      v.resize(n_);
      for (int j = 0; j < n_; ++j) {
        const cx s1(c_.s1, (j - half_) * h_);
        v[j] = p1_[j] * gamma_fn(0.5 * (double(d_ - m) + s1 + 2.0 * r_));
      }
    }
    return v;
  }

  const std::vector<cx>& table_b(int l) {
    auto& v = b_[l];
    if (v.empty()) {
      v.resize(n_);
      for (int k = 0; k < n_; ++k) {
        const cx s2(c_.s2, (k - half_) * h_);
        v[k] = p2_[k] * gamma_fn(0.5 * (double(l) + s2 - 2.0 * r_));
      }
    }
    return v;
  }

  const std::vector<cx>& table_g(int nu) {
    auto& v = g_[nu];
    if (v.empty()) {
      v.resize(2 * n_ - 1);
      const double base = double(nu) + c_.s1 + c_.s2;
      for (int u = 0; u < 2 * n_ - 1; ++u) {
        const double t = (u - 2 * half_) * h_;
        v[u] = std::exp(-log_gamma(0.5 * cx(base, t)));
      }
    }
    return v;
  }

  cx cached_pair(int m, int l) {
    const std::size_t idx = static_cast<std::size_t>(m) * (d_ + 1) + l;
    if (!have_[idx]) {
      const auto& a = table_a(m);
      const auto& b = table_b(l);
      const auto& g = table_g(d_ - m + l);
      std::vector<cx> rows(n_);
      for (int j = 0; j < n_; ++j) {
        cx dot = 0.0;
        const cx* gj = g.data() + j;
        for (int k = 0; k < n_; ++k) dot += b[k] * gj[k];
        rows[j] = a[j] * dot;
      }
      const double w = h_ / kTwoPi;
      pair_[idx] = pairwise_sum(rows) * (w * w);
      have_[idx] = 1;
    }
    return pair_[idx];
  }

  int d_;
  cx r_;
  WhittakerContour c_;
  double h_;
  int half_;
  int n_;
  std::vector<cx> p1_, p2_;
  std::vector<std::vector<cx>> a_, b_, g_;
  std::vector<cx> pair_;
  std::vector<char> have_;
};

// Evaluates the requested coordinates on a coarse and a fine grid and
// accepts once they agree; one further refinement (finer step and taller
// contour) is tried before giving up.  The default contour needs only the
// first pair; the refinement exists for shifted contours that pass closer
// to a pole family, where trapezoid aliasing decays more slowly.
std::vector<cx> eval_rows(const SpectralPoint& p, const TorusPoint& y,
                          const WhittakerContour& c, double tol,
                          const std::vector<int>& mprimes) {
  check_spectral(p);
  check_torus(y);
  check_contour(p, c);
  for (int mp : mprimes)
    if (std::abs(mp) > p.d)
      throw RangeExceeded("Whittaker coordinate index |m'| exceeds d");

  RowEvaluator coarse(p, y, c, 0.24, 70);
  RowEvaluator fine(p, y, c, 0.15, 134);
  std::vector<cx> prev(mprimes.size()), cur(mprimes.size());
  for (std::size_t i = 0; i < mprimes.size(); ++i) {
    prev[i] = coarse.entry(mprimes[i]);
    cur[i] = fine.entry(mprimes[i]);
  }
  auto accepted = [&](const std::vector<cx>& lo, const std::vector<cx>& hi) {
    double scale = 1.0, err = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      scale = std::max(scale, std::abs(hi[i]));
      err = std::max(err, std::abs(hi[i] - lo[i]));
    }
    return err <= tol * scale;
  };
  if (accepted(prev, cur)) return cur;

  RowEvaluator finer(p, y, c, 0.10, 240);
  std::vector<cx> best(mprimes.size());
  for (std::size_t i = 0; i < mprimes.size(); ++i)
    best[i] = finer.entry(mprimes[i]);
  if (accepted(cur, best)) return best;
  throw NonConvergent(
      "Whittaker contour quadrature did not stabilize to the requested "
      "tolerance");
}

}  // namespace

std::array<cx, 3> mu_params(const SpectralPoint& p) {
  check_spectral(p);
  const double half_d = 0.5 * (p.d - 1);
  return {half_d + p.r, -half_d + p.r, -2.0 * p.r};
}

std::array<cx, 3> weyl_apply(WeylWord w, const std::array<cx, 3>& mu) {
  switch (w) {
    case WeylWord::kI:
      return mu;
    case WeylWord::kW2:
      return {mu[1], mu[0], mu[2]};
    case WeylWord::kW3:
      return {mu[0], mu[2], mu[1]};
    case WeylWord::kW4:
      return {mu[2], mu[0], mu[1]};
    case WeylWord::kW5:
      return {mu[1], mu[2], mu[0]};
    case WeylWord::kWl:
      return {mu[2], mu[1], mu[0]};
  }
  throw RangeExceeded("unknown Weyl word");
}

cx lambda_star(const SpectralPoint& p) {
  check_spectral(p);
  const cx three_r = 3.0 * p.r;
  const cx expo = -0.5 * (p.d - 1) - three_r;
  const double sign = (p.d % 2 == 0) ? 1.0 : -1.0;
  return (sign / kPi) * std::exp(expo * std::log(kTwoPi)) *
         gamma_fn(cx(p.d, 0.0)) * gamma_fn(0.5 * (p.d + 1) + three_r);
}

cx whittaker_entry(const SpectralPoint& p, const TorusPoint& y, int mprime,
                   const WhittakerContour& contour, double tol) {
  return eval_rows(p, y, contour, tol, {mprime})[0];
}

std::vector<cx> whittaker_vector(const SpectralPoint& p, const TorusPoint& y,
                                 const WhittakerContour& contour, double tol) {
  std::vector<int> mprimes(2 * p.d + 1);
  for (int mp = -p.d; mp <= p.d; ++mp) mprimes[mp + p.d] = mp;
  return eval_rows(p, y, contour, tol, mprimes);
}

cx PowerTerm::value(const TorusPoint& y) const {
  return coefficient * std::exp((1.0 - nu[2]) * std::log(kTwoPi * y.y1) +
                                (1.0 + nu[0]) * std::log(kTwoPi * y.y2));
}

LeadingTerms leading_coefficients(const SpectralPoint& p, int mprime) {
  check_spectral(p);
  if (std::abs(mprime) > p.d)
    throw RangeExceeded("Whittaker coordinate index |m'| exceeds d");
  if (std::abs(p.r) < 1e-12)
    throw DegenerateParameter("leading-term exponents collide at r = 0");
  const auto mu = mu_params(p);
  const cx three_r = 3.0 * p.r;
  LeadingTerms lt;
  lt.r1.nu = weyl_apply(WeylWord::kW4, mu);
  lt.r1.coefficient = std::exp(0.5 * log_binomial(2 * p.d, p.d + mprime)) /
                      (std::ldexp(1.0, p.d) * kPi) *
                      gamma_fn(0.5 * (p.d - 1) + three_r);
  lt.r2.nu = mu;
  lt.r2.coefficient = (mprime == p.d)
                          ? gamma_fn(0.5 * (p.d - 1) - three_r) / kPi
                          : cx(0.0, 0.0);
  return lt;
}

double dual_check(const SpectralPoint& p, const TorusPoint& y, double tol) {
  check_spectral(p);
  if (std::abs(p.r.real()) > 1e-12)
    throw RangeExceeded("dual residual is defined for purely imaginary r");
  const double inner = 0.1 * tol;
  const auto lhs = whittaker_vector(p, y, {}, inner);
  const auto rhs =
      whittaker_vector({p.d, -p.r}, {y.y2, y.y1}, {}, inner);
  const WignerMatrix dmat(
      p.d, mat3_mul(sign_matrix(-1, -1), rotation_matrix(WeylWord::kWl)));
  const auto rotated = dmat.row_action(rhs);
  const double sign = (p.d % 2 == 0) ? 1.0 : -1.0;
  double res = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    res = std::max(res, std::abs(lhs[i] - sign * rotated[i]));
  return res;
}

}  // namespace gl3
