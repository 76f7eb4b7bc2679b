// SO(3) rotation machinery for the (2d+1)-dimensional representation.
//
// Rotations are parametrized by Z-Y-Z Euler angles, R = Rz(alpha) Ry(beta)
// Rz(gamma), and the representation matrix is the Wigner matrix
//
//   D^d_{m'k}(R) = e^{-i alpha m'} d^d_{m'k}(beta) e^{-i gamma k},
//
// with rows and columns indexed by m', k in {-d, ..., d}.  The little-d
// matrix d^d_{m'k}(beta) is evaluated by the Wigner sum formula in extended
// precision; the alternating sum loses at most ~1e4 in cancellation at
// d = 16, keeping absolute accuracy near 1e-15.
#pragma once

#include <array>
#include <vector>

#include "gl3/types.hpp"

namespace gl3 {

// The Weyl group representatives in SO(3) used throughout, in the fixed
// order: identity, the two simple reflections w2, w3, the two order-three
// words w4, w5, and the long word wl.
enum class WeylWord { kI, kW2, kW3, kW4, kW5, kWl };

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 rotation_matrix(WeylWord w);

// v_{e1,e2} = diag(e1, e1 e2, e2) for e1, e2 in {+1, -1}.
Mat3 sign_matrix(int eps1, int eps2);

Mat3 mat3_mul(const Mat3& a, const Mat3& b);

struct EulerZYZ {
  double alpha;
  double beta;
  double gamma;
};

// Decomposes a rotation matrix as R = Rz(alpha) Ry(beta) Rz(gamma) with
// beta in [0, pi].  At the poles beta = 0, pi the pair (alpha, gamma) is not
// unique; gamma = 0 is chosen.
EulerZYZ euler_angles(const Mat3& r);

Mat3 euler_rotation(const EulerZYZ& e);

// d^d_{mp,m}(beta) for mp, m in [-d, d].
double wigner_little_d(int d, int mp, int m, double beta);

// Dense Wigner matrix of the rotation r in the weight-d representation.
class WignerMatrix {
 public:
  WignerMatrix(int d, const Mat3& r);
  WignerMatrix(int d, WeylWord w) : WignerMatrix(d, rotation_matrix(w)) {}

  int weight() const { return d_; }
  int dim() const { return 2 * d_ + 1; }

  // Entry D^d_{mp,k}; indices in [-d, d].
  cx operator()(int mp, int k) const { return a_[idx(mp) * dim() + idx(k)]; }

  // Row vector v * D for v indexed the same way as the matrix rows.
  std::vector<cx> row_action(const std::vector<cx>& v) const;

  // The single row D_{mp, .}.
  std::vector<cx> row(int mp) const;

 private:
  int idx(int m) const { return m + d_; }
  int d_;
  std::vector<cx> a_;
};

}  // namespace gl3
