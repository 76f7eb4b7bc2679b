#include "gl3/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"

namespace gl3 {
namespace {

constexpr double kIntegerMargin = 1e-12;

// Index n >= 0 such that x + n == 0, when x is (numerically) a nonpositive
// integer; -1 otherwise.
long terminating_index(cx x) {
  const double r = std::round(x.real());
  if (r > 0.5) return -1;
  if (std::abs(x.real() - r) > kIntegerMargin) return -1;
  if (std::abs(x.imag()) > kIntegerMargin) return -1;
  return static_cast<long>(-r);
}

// Solves the 3x3 complex system M w = u by Cramer's rule.
void solve3(const cx M[3][3], const cx u[3], cx w[3]) {
  auto det3 = [](const cx m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const cx d = det3(M);
  if (std::abs(d) == 0.0) throw NonConvergent("tail fit system is singular");
  for (int col = 0; col < 3; ++col) {
    cx t[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i][j] = (j == col) ? u[i] : M[i][j];
    w[col] = det3(t) / d;
  }
}

}  // namespace

cx pfq_series(const std::vector<cx>& a, const std::vector<cx>& b, cx z, double tol) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();

  long n_term = -1;
  for (const cx& ai : a) {
    const long k = terminating_index(ai);
    if (k >= 0) n_term = (n_term < 0) ? k : std::min(n_term, k);
  }
  for (const cx& bj : b) {
    const long k = terminating_index(bj);
    if (k >= 0 && (n_term < 0 || k < n_term))
      throw DegenerateParameter("pFq lower parameter is a nonpositive integer");
  }
  if (n_term < 0) {
    if (p > q + 1) throw RangeExceeded("pFq series diverges for p > q+1");
    if (p == q + 1 && std::abs(z) >= 1.0)
      throw RangeExceeded("pFq series requires |z| < 1 for p = q+1");
  }

  cx sum = 1.0;
  cx term = 1.0;
  int quiet = 0;
  const long cap = (n_term >= 0) ? n_term : 1000000L;
  for (long n = 0; n < cap; ++n) {
    cx ratio = z / static_cast<double>(n + 1);
    for (const cx& ai : a) ratio *= ai + static_cast<double>(n);
    for (const cx& bj : b) ratio /= bj + static_cast<double>(n);
    term *= ratio;
    sum += term;
    if (n_term < 0) {
      if (std::abs(term) <= 0.1 * tol * std::max(std::abs(sum), 1e-300)) {
        if (++quiet >= 3) return sum;
      } else {
        quiet = 0;
      }
      if (n == cap - 1) throw NonConvergent("pFq series did not settle within term cap");
    }
  }
  return sum;
}

cx hurwitz_zeta(cx s, double a) {
  if (s.real() <= 1.0) throw RangeExceeded("hurwitz_zeta requires Re s > 1");
  if (a < 2.0) throw RangeExceeded("hurwitz_zeta requires a >= 2");
  double x = a;
  cx head = 0.0;
  while (x < 24.0) {
    head += std::pow(x, -s.real()) * cis(-s.imag() * std::log(x));
    x += 1.0;
  }
  const cx lx = std::log(x);
  auto xpow = [&](cx e) { return std::exp(-e * lx); };
  cx v = xpow(s - 1.0) / (s - 1.0) + 0.5 * xpow(s);
  v += s * xpow(s + 1.0) / 12.0;
  v -= s * (s + 1.0) * (s + 2.0) * xpow(s + 3.0) / 720.0;
  v += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * xpow(s + 5.0) / 30240.0;
  v -= s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * (s + 5.0) * (s + 6.0) *
       xpow(s + 7.0) / 1209600.0;
  return head + v;
}

cx gauss_2f1_at_1(cx a, cx b, cx c, double tol) {
  if (terminating_index(c) >= 0)
    throw DegenerateParameter("2F1 lower parameter is a nonpositive integer");

  const long ta = terminating_index(a);
  const long tb = terminating_index(b);
  if (ta >= 0 || tb >= 0) {
    long n_term = (ta >= 0 && tb >= 0) ? std::min(ta, tb) : std::max(ta, tb);
    cx sum = 1.0, term = 1.0;
    for (long n = 0; n < n_term; ++n) {
      const double dn = static_cast<double>(n);
      term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
      sum += term;
    }
    return sum;
  }

  const cx theta = c - a - b;
  if (theta.real() <= 0.05)
    throw NonConvergent("2F1 at unit argument needs Re(c-a-b) > 0");

  const long N = 3000;
  const long n2 = 2400, n3 = 1920;
  cx sum = 1.0, term = 1.0;
  cx t_at[3] = {0.0, 0.0, 0.0};
  int quiet = 0;
  for (long n = 1; n <= N; ++n) {
    const double dn = static_cast<double>(n - 1);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
    sum += term;
    if (n == n3) t_at[2] = term;
    if (n == n2) t_at[1] = term;
    if (n == N) t_at[0] = term;
    if (std::abs(term) <= 0.01 * tol * std::max(std::abs(sum), 1e-300)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }

  // T_n ~ C n^{-1-theta} (1 + e1/n + e2/n^2); fit at n = N, 2400, 1920 and
  // complete the tail with Hurwitz zeta values at shift N+1.
  const double npts[3] = {static_cast<double>(N), static_cast<double>(n2),
                          static_cast<double>(n3)};
  cx M[3][3], u[3];
  for (int i = 0; i < 3; ++i) {
    u[i] = t_at[i] * rpow(npts[i], 1.0 + theta);
    M[i][0] = 1.0;
    M[i][1] = 1.0 / npts[i];
    M[i][2] = 1.0 / (npts[i] * npts[i]);
  }
  cx w[3];
  solve3(M, u, w);
  const double shift = static_cast<double>(N + 1);
  cx tail = w[0] * hurwitz_zeta(1.0 + theta, shift);
  tail += w[1] * hurwitz_zeta(2.0 + theta, shift);
  tail += w[2] * hurwitz_zeta(3.0 + theta, shift);
  return sum + tail;
}

cx pfq3_at_1(cx u1, cx u2, cx u3, cx l1, cx l2, double tol) {
  if (terminating_index(l1) >= 0 || terminating_index(l2) >= 0)
    throw DegenerateParameter("3F2 lower parameter is a nonpositive integer");
  if (terminating_index(u1) >= 0 || terminating_index(u2) >= 0 ||
      terminating_index(u3) >= 0)
    return pfq_series({u1, u2, u3}, {l1, l2}, cx(1.0, 0.0), tol);

  const cx theta = l1 + l2 - u1 - u2 - u3;
  if (theta.real() <= 0.05)
    throw NonConvergent("3F2 at unit argument needs Re(l1+l2-u1-u2-u3) > 0");

  const long N = 3000;
  const long n2 = 2400, n3 = 1920;
  cx sum = 1.0, term = 1.0;
  cx t_at[3] = {0.0, 0.0, 0.0};
  int quiet = 0;
  for (long n = 1; n <= N; ++n) {
    const double dn = static_cast<double>(n - 1);
    term *= (u1 + dn) * (u2 + dn) * (u3 + dn) /
            ((l1 + dn) * (l2 + dn) * (dn + 1.0));
    sum += term;
    if (n == n3) t_at[2] = term;
    if (n == n2) t_at[1] = term;
    if (n == N) t_at[0] = term;
    if (std::abs(term) <= 0.01 * tol * std::max(std::abs(sum), 1e-300)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }

  const double npts[3] = {static_cast<double>(N), static_cast<double>(n2),
                          static_cast<double>(n3)};
  cx M[3][3], u[3];
  for (int i = 0; i < 3; ++i) {
    u[i] = t_at[i] * rpow(npts[i], 1.0 + theta);
    M[i][0] = 1.0;
    M[i][1] = 1.0 / npts[i];
    M[i][2] = 1.0 / (npts[i] * npts[i]);
  }
  cx w[3];
  solve3(M, u, w);
  const double shift = static_cast<double>(N + 1);
  cx tail = w[0] * hurwitz_zeta(1.0 + theta, shift);
  tail += w[1] * hurwitz_zeta(2.0 + theta, shift);
  tail += w[2] * hurwitz_zeta(3.0 + theta, shift);
  return sum + tail;
}

cx alternating_2f1_at_minus1(cx a, cx b, cx c, double tol) {
  if (terminating_index(c) >= 0)
    throw DegenerateParameter("2F1 lower parameter is a nonpositive integer");
  const long ta = terminating_index(a);
  const long tb = terminating_index(b);
  if (ta >= 0 || tb >= 0)
    return pfq_series({a, b}, {c}, cx(-1.0, 0.0), tol);

  if ((a + b - c).real() >= 0.9)
    throw NonConvergent("2F1 at -1 needs Re(a+b-c) < 1 for averaging");

  const int N = 320;
  std::vector<cx> v;
  v.reserve(N);
  cx sum = 1.0, term = 1.0;
  v.push_back(sum);
  for (int n = 0; n + 1 < N; ++n) {
    const double dn = static_cast<double>(n);
    term *= -(a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
    sum += term;
    v.push_back(sum);
  }

  cx prev = v.back();
  int quiet = 0;
  const int max_pass = 44;
  for (int pass = 1; pass <= max_pass; ++pass) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
    v.pop_back();
    const cx cur = v.back();
    const double scale = std::max(1.0, std::abs(cur));
    if (pass >= 8 && std::abs(cur - prev) <= std::max(0.05 * tol, 5e-16) * scale) {
      if (++quiet >= 3) return cur;
    } else {
      quiet = 0;
    }
    prev = cur;
  }
  throw NonConvergent("averaged 2F1(-1) partial sums did not stabilize");
}

}  // namespace gl3
