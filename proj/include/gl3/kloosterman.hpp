#pragma once

#include <array>
#include <cstdint>

#include "gl3/kernels.hpp"
#include "gl3/types.hpp"

namespace gl3 {

// GL(3) Kloosterman sums attached to the Bruhat cells of the Weyl elements
// w_4, w_5, and the long element, evaluated two independent ways: an exact
// enumeration over integral Bruhat representatives (the oracle) and closed
// forms derived from the double-coset classification (the fast route).
//
// Conventions.  U is the upper-triangular unipotent subgroup, carrying the
// characters psi_m(u) = e(m_1 u_{12} + m_2 u_{23}) with e(x) = exp(2 pi i x).
// A cell element factors uniquely over Q as gamma = u_1 (t w) u_2 with
// u_1 in U, u_2 in U_w = {u in U : w u w^{-1} lower triangular}, and
//
//   w_4 = [[0,0,1],[1,0,0],[0,1,0]],   t = diag(1/c_1, c_1/c_2, c_2),
//   w_5 = [[0,1,0],[0,0,1],[1,0,0]],   t = diag(1/c_1, c_1/c_2, c_2),
//   w_l = [[0,0,1],[0,-1,0],[1,0,0]],  t = diag(1/c_2, c_2/c_1, c_1),
//
// always in the chamber where t is positive; the other sign chambers are
// reached by flipping signs of the character indices.  The sum is
//
//   S_w(psi_m, psi_n, c) = sum_{U(Z) \ (cell ^ SL(3,Z)) / U_w(Z)}
//                          psi_m(u_1) psi_n(u_2),
//
// which is well defined for every character pair because the phase is a
// double-coset invariant of the canonical representative.  psi_n restricted
// to U_{w_4} reads only n_2, restricted to U_{w_5} only n_1.  The w_4 cell
// is empty unless c_2 | c_1 and the w_5 cell is empty unless c_1 | c_2;
// empty cells give value 0 with zero terms.  For the long element at
// degenerate modulus the sum collapses to a classical Kloosterman sum:
// S_{w_l}(psi_m, psi_n, (c,1)) = sum_{x xbar = 1 mod c} e((n_1 x + m_2 xbar)/c).

// Character index (m_1, m_2) of psi_m; both entries must be nonzero.
struct CharacterIndex {
  std::int64_t m1 = 1;
  std::int64_t m2 = 1;
};

// Cell modulus (c_1, c_2); both entries must be positive.
struct Modulus {
  std::int64_t c1 = 1;
  std::int64_t c2 = 1;
};

// A Kloosterman sum value together with the number of Bruhat representatives
// it summed over.  |value| <= terms always (unit-modulus summands).
struct KloostermanValue {
  cx value{};
  std::int64_t terms = 0;
};

// Exact enumeration oracle.  Walks an integer box that provably covers every
// double coset of the cell, Bruhat-factors each candidate in exact rational
// arithmetic, reduces to a canonical 6-tuple of unipotent coordinates mod 1
// to dedupe cosets, and accumulates phases as exact rationals (one complex
// exponential per distinct phase).  Throws DegenerateParameter for zero
// character entries or nonpositive moduli, RangeExceeded for c_1 or c_2
// above 64 or for a tag outside {w_4, w_5, w_l}.
KloostermanValue kloosterman_bruteforce(KernelTag w, const CharacterIndex& m,
                                        const CharacterIndex& n,
                                        const Modulus& c);

// Closed-form evaluation, O~(c_1 c_2) terms.  w_4 runs over the coset labels
// (a mod c_1/c_2, u, v mod c_2) weighted by the count of (x_3, xi_3)-classes
// sharing them; w_5 is the image of w_4 under the involution
// g -> w_l g^{-T} w_l, which swaps the modulus entries and the character
// slots; the long element runs over bottom-row / wedge-row residues with the
// remaining coordinates recovered by modular inversion.  Agrees with
// kloosterman_bruteforce exactly (same terms, same phase set) on its whole
// domain.  Same validation errors as the oracle, but no upper modulus cap.
KloostermanValue kloosterman_fast(KernelTag w, const CharacterIndex& m,
                                  const CharacterIndex& n, const Modulus& c);

// Whether the (m, n, eps, c) combination couples to the cell of w in the
// spectral-sum geometric expansion: w_4 requires eps_1 m_2 c_1 = n_1 c_2^2,
// w_5 requires eps_2 m_1 c_2 = n_2 c_1^2, and the identity and long cells
// impose no condition.  eps entries must be +1 or -1.
bool compatibility(KernelTag w, const CharacterIndex& m,
                   const CharacterIndex& n, const std::array<int, 2>& eps,
                   const Modulus& c);

}  // namespace gl3
