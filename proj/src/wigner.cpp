#include "gl3/wigner.hpp"

#include <algorithm>
#include <cmath>

#include "gl3/errors.hpp"

namespace gl3 {
namespace {

Mat3 diag(double a, double b, double c) {
  return Mat3{{{a, 0.0, 0.0}, {0.0, b, 0.0}, {0.0, 0.0, c}}};
}

Mat3 rot_z(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return Mat3{{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

Mat3 rot_y(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return Mat3{{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

// Factorials through 40! stay well inside long double range.
long double factorial_table(int n) {
  static const auto table = [] {
    std::array<long double, 41> t{};
    t[0] = 1.0L;
    for (int i = 1; i <= 40; ++i) t[i] = t[i - 1] * static_cast<long double>(i);
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

Mat3 rotation_matrix(WeylWord w) {
  switch (w) {
    case WeylWord::kI:
      return diag(1.0, 1.0, 1.0);
    case WeylWord::kW2:
      return Mat3{{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}};
    case WeylWord::kW3:
      return Mat3{{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}};
    case WeylWord::kW4:
      return Mat3{{{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}};
    case WeylWord::kW5:
      return Mat3{{{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}}};
    case WeylWord::kWl:
      return Mat3{{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}};
  }
  throw RangeExceeded("unknown Weyl word");
}

Mat3 sign_matrix(int eps1, int eps2) {
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
    throw RangeExceeded("sign matrix entries must be +1 or -1");
  return diag(eps1, eps1 * eps2, eps2);
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

EulerZYZ euler_angles(const Mat3& r) {
  const double sb = std::hypot(r[2][0], r[2][1]);
  const double beta = std::atan2(sb, r[2][2]);
  if (sb < 1e-14) {
    if (r[2][2] > 0.0) return {std::atan2(r[1][0], r[0][0]), 0.0, 0.0};
    return {std::atan2(-r[1][0], -r[0][0]), kPi, 0.0};
  }
  const double alpha = std::atan2(r[1][2], r[0][2]);
  const double gamma = std::atan2(r[2][1], -r[2][0]);
  return {alpha, beta, gamma};
}

Mat3 euler_rotation(const EulerZYZ& e) {
  return mat3_mul(rot_z(e.alpha), mat3_mul(rot_y(e.beta), rot_z(e.gamma)));
}

double wigner_little_d(int d, int mp, int m, double beta) {
  if (d < 0 || d > 16) throw RangeExceeded("wigner_little_d supports 0 <= d <= 16");
  if (std::abs(mp) > d || std::abs(m) > d)
    throw RangeExceeded("wigner_little_d indices must lie in [-d, d]");
  const long double cb = std::cos(0.5L * static_cast<long double>(beta));
  const long double sb = std::sin(0.5L * static_cast<long double>(beta));
  const long double pref =
      std::sqrt(factorial_table(d + m) * factorial_table(d - m) *
                factorial_table(d + mp) * factorial_table(d - mp));
  const int k_lo = std::max(0, m - mp);
  const int k_hi = std::min(d + m, d - mp);
  long double sum = 0.0L;
  for (int k = k_lo; k <= k_hi; ++k) {
    const long double denom = factorial_table(d + m - k) * factorial_table(k) *
                              factorial_table(d - k - mp) *
                              factorial_table(k - m + mp);
    long double term = pref / denom;
    const int pc = 2 * d - 2 * k + m - mp;
    const int ps = 2 * k - m + mp;
    for (int i = 0; i < pc; ++i) term *= cb;
    for (int i = 0; i < ps; ++i) term *= sb;
    if ((k - m + mp) % 2 != 0) term = -term;
    sum += term;
  }
  return static_cast<double>(sum);
}

WignerMatrix::WignerMatrix(int d, const Mat3& r) : d_(d) {
  const EulerZYZ e = euler_angles(r);
  const int n = dim();
  a_.resize(static_cast<std::size_t>(n) * n);
  std::vector<cx> row_phase(n), col_phase(n);
  for (int m = -d_; m <= d_; ++m) {
    row_phase[idx(m)] = cis(-e.alpha * m);
    col_phase[idx(m)] = cis(-e.gamma * m);
  }
  for (int mp = -d_; mp <= d_; ++mp)
    for (int k = -d_; k <= d_; ++k)
      a_[idx(mp) * n + idx(k)] =
          row_phase[idx(mp)] * wigner_little_d(d_, mp, k, e.beta) * col_phase[idx(k)];
}

std::vector<cx> WignerMatrix::row_action(const std::vector<cx>& v) const {
  const int n = dim();
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("row vector length does not match Wigner matrix size");
  std::vector<cx> out(n, cx(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    if (v[i] == cx(0.0, 0.0)) continue;
    for (int j = 0; j < n; ++j) out[j] += v[i] * a_[i * n + j];
  }
  return out;
}

std::vector<cx> WignerMatrix::row(int mp) const {
  const int n = dim();
  std::vector<cx> out(n);
  for (int j = 0; j < n; ++j) out[j] = a_[idx(mp) * n + j];
  return out;
}

}  // namespace gl3
