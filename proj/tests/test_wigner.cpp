#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "gl3/complexgamma.hpp"
#include "gl3/errors.hpp"
#include "gl3/rng.hpp"
#include "gl3/types.hpp"
#include "gl3/wigner.hpp"

using gl3::cx;
using gl3::Mat3;

namespace {

double mat_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

Mat3 transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

double det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 identity3() { return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 random_rotation(gl3::Lcg64& rng) {
  gl3::EulerZYZ e{rng.uniform(-3.0, 3.0), rng.uniform(0.05, 3.05),
                  rng.uniform(-3.0, 3.0)};
  return gl3::euler_rotation(e);
}

const std::vector<gl3::WeylWord> kAllWords = {
    gl3::WeylWord::kI,  gl3::WeylWord::kW2, gl3::WeylWord::kW3,
    gl3::WeylWord::kW4, gl3::WeylWord::kW5, gl3::WeylWord::kWl};

}  // namespace

TEST_CASE("Weyl representatives are special orthogonal") {
  for (gl3::WeylWord w : kAllWords) {
    const Mat3 r = gl3::rotation_matrix(w);
    CHECK(mat_diff(gl3::mat3_mul(r, transpose(r)), identity3()) == 0.0);
    CHECK(det3(r) == 1.0);
  }
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      const Mat3 v = gl3::sign_matrix(e1, e2);
      CHECK(det3(v) == 1.0);
      CHECK(v[0][0] == e1);
      CHECK(v[1][1] == e1 * e2);
      CHECK(v[2][2] == e2);
    }
  CHECK_THROWS_AS(gl3::sign_matrix(0, 1), gl3::RangeExceeded);

  // w4 and w5 are the order-three elements, wl is an involution.
  const Mat3 w4 = gl3::rotation_matrix(gl3::WeylWord::kW4);
  const Mat3 w5 = gl3::rotation_matrix(gl3::WeylWord::kW5);
  const Mat3 wl = gl3::rotation_matrix(gl3::WeylWord::kWl);
  CHECK(mat_diff(gl3::mat3_mul(w4, gl3::mat3_mul(w4, w4)), identity3()) == 0.0);
  CHECK(mat_diff(gl3::mat3_mul(w5, gl3::mat3_mul(w5, w5)), identity3()) == 0.0);
  CHECK(mat_diff(gl3::mat3_mul(wl, wl), identity3()) == 0.0);
}

TEST_CASE("Euler angle extraction round-trips") {
  for (gl3::WeylWord w : kAllWords) {
    const Mat3 r = gl3::rotation_matrix(w);
    CHECK(mat_diff(gl3::euler_rotation(gl3::euler_angles(r)), r) < 1e-15);
  }
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      const Mat3 v = gl3::sign_matrix(e1, e2);
      CHECK(mat_diff(gl3::euler_rotation(gl3::euler_angles(v)), v) < 1e-15);
    }

  const Mat3 vmmwl = gl3::mat3_mul(gl3::sign_matrix(-1, -1),
                                   gl3::rotation_matrix(gl3::WeylWord::kWl));
  const gl3::EulerZYZ e = gl3::euler_angles(vmmwl);
  CHECK(e.alpha == 0.0);
  CHECK(std::abs(e.beta - gl3::kPi / 2.0) < 1e-15);
  CHECK(std::abs(e.gamma - gl3::kPi) < 1e-15);

  const gl3::EulerZYZ e2 = gl3::euler_angles(gl3::rotation_matrix(gl3::WeylWord::kW2));
  CHECK(std::abs(e2.alpha - gl3::kPi / 2.0) < 1e-15);
  CHECK(std::abs(e2.beta - gl3::kPi) < 1e-15);
  CHECK(e2.gamma == 0.0);

  gl3::Lcg64 rng(7171);
  for (int i = 0; i < 40; ++i) {
    const Mat3 r = random_rotation(rng);
    CHECK(mat_diff(gl3::euler_rotation(gl3::euler_angles(r)), r) < 5e-15);
  }
}

TEST_CASE("little-d special values and symmetries") {
  // d(0) is the identity.
  for (int m = -3; m <= 3; ++m)
    for (int mp = -3; mp <= 3; ++mp)
      CHECK(gl3::wigner_little_d(3, mp, m, 0.0) == (mp == m ? 1.0 : 0.0));

  // d^j_{m'm}(pi) = (-1)^{j-m} delta_{m',-m}.
  for (int j : {2, 5, 16})
    for (int m = -j; m <= j; ++m)
      for (int mp = -j; mp <= j; ++mp) {
        const double v = gl3::wigner_little_d(j, mp, m, gl3::kPi);
        const double want = (mp == -m) ? ((j - m) % 2 == 0 ? 1.0 : -1.0) : 0.0;
        CHECK(std::abs(v - want) < 1e-14);
      }

  // Top row at beta = pi/2: d^j_{j,m}(pi/2) = (-1)^{j-m} 2^{-j} sqrt(C(2j, j+m)).
  for (int j : {2, 9, 16})
    for (int m = -j; m <= j; ++m) {
      const double v = gl3::wigner_little_d(j, j, m, gl3::kPi / 2.0);
      const double want = ((j - m) % 2 == 0 ? 1.0 : -1.0) *
                          std::pow(2.0, -j) * std::sqrt(gl3::binomial(2 * j, j + m));
      CHECK(std::abs(v - want) < 1e-13 * std::abs(want) + 1e-15);
    }

  // Transposition symmetry d_{m'm}(beta) = (-1)^{m'-m} d_{mm'}(beta).
  const double beta = 1.2345;
  for (int m = -6; m <= 6; ++m)
    for (int mp = -6; mp <= 6; ++mp) {
      const double a = gl3::wigner_little_d(6, mp, m, beta);
      const double b = gl3::wigner_little_d(6, m, mp, beta);
      const double sgn = ((mp - m) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(a - sgn * b) < 1e-14);
    }

  CHECK_THROWS_AS(gl3::wigner_little_d(17, 0, 0, 1.0), gl3::RangeExceeded);
  CHECK_THROWS_AS(gl3::wigner_little_d(4, 5, 0, 1.0), gl3::RangeExceeded);
}

TEST_CASE("Wigner matrices are unitary") {
  gl3::Lcg64 rng(9911);
  for (int d : {2, 8, 16}) {
    const Mat3 r = random_rotation(rng);
    const gl3::WignerMatrix D(d, r);
    const int n = D.dim();
    double worst = 0.0;
    for (int i = -d; i <= d; ++i)
      for (int j = -d; j <= d; ++j) {
        cx s(0.0, 0.0);
        for (int k = -d; k <= d; ++k) s += D(i, k) * std::conj(D(j, k));
        s -= (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(s));
      }
    CHECK(n == 2 * d + 1);
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("Wigner matrices respect the group law") {
  gl3::Lcg64 rng(40404);
  for (int d : {3, 16}) {
    for (int trial = 0; trial < 4; ++trial) {
      const Mat3 r1 = random_rotation(rng);
      const Mat3 r2 = random_rotation(rng);
      const gl3::WignerMatrix D1(d, r1), D2(d, r2), D12(d, gl3::mat3_mul(r1, r2));
      double worst = 0.0;
      for (int i = -d; i <= d; ++i)
        for (int j = -d; j <= d; ++j) {
          cx s(0.0, 0.0);
          for (int k = -d; k <= d; ++k) s += D1(i, k) * D2(k, j);
          worst = std::max(worst, std::abs(s - D12(i, j)));
        }
      CHECK(worst < 1e-10);
    }
  }

  // Mixed products of Weyl words and sign matrices land back on exact values.
  const Mat3 w2 = gl3::rotation_matrix(gl3::WeylWord::kW2);
  const Mat3 w3 = gl3::rotation_matrix(gl3::WeylWord::kW3);
  const gl3::WignerMatrix Dw2(5, w2), Dw3(5, w3), Dprod(5, gl3::mat3_mul(w2, w3));
  double worst = 0.0;
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) {
      cx s(0.0, 0.0);
      for (int k = -5; k <= 5; ++k) s += Dw2(i, k) * Dw3(k, j);
      worst = std::max(worst, std::abs(s - Dprod(i, j)));
    }
  CHECK(worst < 1e-13);
}

TEST_CASE("representation values on the distinguished elements") {
  // D^d_{d,m'}(v_{--} wl) = (-1)^d 2^{-d} sqrt(C(2d, d+m')).
  const Mat3 vmmwl = gl3::mat3_mul(gl3::sign_matrix(-1, -1),
                                   gl3::rotation_matrix(gl3::WeylWord::kWl));
  for (int d = 2; d <= 16; ++d) {
    const gl3::WignerMatrix D(d, vmmwl);
    const double sd = (d % 2 == 0) ? 1.0 : -1.0;
    for (int mp = -d; mp <= d; ++mp) {
      const double want =
          sd * std::pow(2.0, -d) * std::sqrt(gl3::binomial(2 * d, d + mp));
      CHECK(std::abs(D(d, mp) - cx(want, 0.0)) < 2e-14 * std::abs(want) + 1e-15);
    }
  }

  // v_{+-} w2 is the quarter turn Rz(pi/2); its Wigner matrix is the
  // diagonal phase matrix with entries (-i)^k, which commutes with every
  // diagonal matrix.
  {
    const Mat3 q = gl3::mat3_mul(gl3::sign_matrix(1, -1),
                                 gl3::rotation_matrix(gl3::WeylWord::kW2));
    const Mat3 rz(Mat3{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}});
    CHECK(mat_diff(q, rz) == 0.0);
    const int d = 4;
    const gl3::WignerMatrix D(d, q);
    for (int mp = -d; mp <= d; ++mp)
      for (int k = -d; k <= d; ++k) {
        const cx want = (mp == k) ? gl3::cis(-0.5 * gl3::kPi * k) : cx(0.0, 0.0);
        CHECK(std::abs(D(mp, k) - want) < 1e-14);
      }
  }

  for (int d : {2, 3, 6, 11}) {
    const double sd = (d % 2 == 0) ? 1.0 : -1.0;
    // Rows +-d of D(w2) are (-1)^d i^{+-d} times the unit rows -+d.
    const gl3::WignerMatrix Dw2(d, gl3::rotation_matrix(gl3::WeylWord::kW2));
    for (int sign : {1, -1}) {
      std::vector<cx> v(2 * d + 1, cx(0.0, 0.0));
      v[static_cast<std::size_t>(sign * d + d)] = 1.0;
      const std::vector<cx> out = Dw2.row_action(v);
      const cx phase = sd * std::pow(cx(0.0, 1.0), sign * d);
      for (int k = -d; k <= d; ++k) {
        const cx want = (k == -sign * d) ? phase : cx(0.0, 0.0);
        CHECK(std::abs(out[static_cast<std::size_t>(k + d)] - want) < 1e-14);
      }
    }
    // Rows +-d of D(v_{e1,e2}) are (e1 e2)^d times the unit rows +-(e2 d).
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        const gl3::WignerMatrix Dv(d, gl3::sign_matrix(e1, e2));
        const double se = (e1 * e2 == 1) ? 1.0 : sd;
        for (int sign : {1, -1}) {
          const std::vector<cx> out = Dv.row(sign * d);
          for (int k = -d; k <= d; ++k) {
            const cx want = (k == sign * e2 * d) ? cx(se, 0.0) : cx(0.0, 0.0);
            CHECK(std::abs(out[static_cast<std::size_t>(k + d)] - want) < 1e-14);
          }
        }
      }
  }

  CHECK_THROWS_AS(gl3::WignerMatrix(3, gl3::rotation_matrix(gl3::WeylWord::kW2))
                      .row_action(std::vector<cx>(5)),
                  gl3::DimensionMismatch);
}
