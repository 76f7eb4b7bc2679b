#include "gl3/kloosterman.hpp"

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "gl3/errors.hpp"

namespace gl3 {
namespace {

using std::int64_t;
using i128 = __int128;

int64_t floor_div64(int64_t a, int64_t b) {
  int64_t q = a / b;
  int64_t r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int64_t mod_pos64(int64_t a, int64_t b) { return a - floor_div64(a, b) * b; }

int64_t mod_pos128(i128 a, int64_t b) {
  i128 r = a % b;
  if (r < 0) r += b;
  return static_cast<int64_t>(r);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t gcd3(int64_t a, int64_t b, int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

// Exact rationals with reduced nonnegative-denominator representation; all
// intermediates go through __int128 so moduli up to the brute-force cap stay
// well inside the representable range.
struct Rat {
  int64_t n = 0;
  int64_t d = 1;
};

Rat make_rat(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return Rat{static_cast<int64_t>(n), static_cast<int64_t>(d)};
}

Rat rat_sub(const Rat& a, const Rat& b) {
  return make_rat(i128(a.n) * b.d - i128(b.n) * a.d, i128(a.d) * b.d);
}

Rat rat_scale(const Rat& a, int64_t k) { return make_rat(i128(a.n) * k, a.d); }

int64_t rat_floor(const Rat& a) { return floor_div64(a.n, a.d); }

Rat rat_frac(const Rat& a) {
  int64_t n = mod_pos64(a.n, a.d);
  return Rat{n, n == 0 ? 1 : a.d};
}

// Canonical representative of the double coset through the unipotent
// coordinates: reducing (x1, x2, x3) mod the left action of U(Z) and
// (xi1, xi2, xi3) mod the right action of U_w(Z) leaves exactly the six
// fractional parts below, with the twisted corrections on the long-root
// entries coming from the Heisenberg commutators.
using CosetKey = std::array<std::pair<int64_t, int64_t>, 6>;

CosetKey canonical_coset(const Rat& x1, const Rat& x2, const Rat& x3,
                         const Rat& xi1, const Rat& xi2, const Rat& xi3) {
  Rat x3c = rat_frac(rat_sub(x3, rat_scale(x2, rat_floor(x1))));
  Rat xi3c = rat_frac(rat_sub(xi3, rat_scale(xi1, rat_floor(xi2))));
  Rat f1 = rat_frac(x1);
  Rat f2 = rat_frac(x2);
  Rat g1 = rat_frac(xi1);
  Rat g2 = rat_frac(xi2);
  return CosetKey{{{f1.n, f1.d},
                   {f2.n, f2.d},
                   {x3c.n, x3c.d},
                   {g1.n, g1.d},
                   {g2.n, g2.d},
                   {xi3c.n, xi3c.d}}};
}

struct Egcd {
  int64_t g = 0;
  int64_t x = 0;
  int64_t y = 0;
};

Egcd egcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b;
  int64_t old_s = 1, s = 0;
  int64_t old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return Egcd{old_r, old_s, old_t};
}

struct Ext3 {
  int64_t g = 0;
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
};

Ext3 ext3(int64_t u, int64_t v, int64_t w) {
  Egcd e1 = egcd(u, v);
  Egcd e2 = egcd(e1.g, w);
  return Ext3{e2.g, e2.x * e1.x, e2.x * e1.y, e2.y};
}

int64_t inv_mod(int64_t a, int64_t m) {
  if (m == 1) return 0;
  a = mod_pos64(a, m);
  Egcd e = egcd(a, m);
  return mod_pos64(e.x, m);
}

// Phases are exact rationals; the sum groups equal phases first and spends
// one complex exponential per distinct reduced fraction.
struct PhaseAccum {
  std::map<std::pair<int64_t, int64_t>, int64_t> counts;

  void add(std::pair<int64_t, int64_t> key) { ++counts[key]; }

  void add_combination(std::initializer_list<std::pair<int64_t, Rat>> parts) {
    i128 den = 1;
    for (const auto& p : parts) {
      den = den / gcd128(den, p.second.d) * p.second.d;
    }
    i128 num = 0;
    for (const auto& p : parts) {
      num += i128(p.first) * p.second.n * (den / p.second.d);
    }
    add(reduce(num, den));
  }

  static std::pair<int64_t, int64_t> reduce(i128 num, i128 den) {
    num %= den;
    if (num < 0) num += den;
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    return {static_cast<int64_t>(num), static_cast<int64_t>(den)};
  }

  KloostermanValue finish(int64_t terms) const {
    cx total{};
    for (const auto& [key, cnt] : counts) {
      total += static_cast<double>(cnt) *
               unit_character(static_cast<double>(key.first) /
                              static_cast<double>(key.second));
    }
    return KloostermanValue{total, terms};
  }
};

constexpr int64_t kBruteCap = 64;

// ---------------------------------------------------------------------------
// Long Weyl element, brute force.
//
// Cell matrices decompose as u1 * t * w_l * u2 with t = diag(1/c2, c2/c1, c1)
// and gamma = [[a, b, c], [p, q, s], [D1, h, k]], D1 = c1, and second-row
// minor p*h - q*D1 = D2 = c2 > 0.  Solving u1 * (t w_l) * u2 = gamma gives
//   xi1 = h/D1, xi3 = k/D1, xi2 = (p*k - s*D1)/D2,
//   x2 = p/D1, x3 = a/D1, x1 = (a*h - b*D1)/D2,
// and the character pairing e(m1 x1 + m2 x2 + n1 xi1 + n2 xi2).
// ---------------------------------------------------------------------------
KloostermanValue brute_wl(const CharacterIndex& m, const CharacterIndex& n,
                          const Modulus& c) {
  const int64_t d1 = c.c1;
  const int64_t d2 = c.c2;
  std::set<CosetKey> seen;
  PhaseAccum phases;
  const int64_t s_cap = std::max(d1, d2);
  for (int64_t h = 0; h < d1; ++h) {
    for (int64_t p = 0; p < d1; ++p) {
      if (mod_pos64(p * h - d2, d1) != 0) continue;
      const int64_t q = (p * h - d2) / d1;
      for (int64_t k = 0; k < d1; ++k) {
        for (int64_t s = 0; s < s_cap; ++s) {
          const int64_t r1 = q * k - s * h;
          const int64_t r2 = s * d1 - p * k;
          if (gcd3(r1, r2, d2) != 1) continue;
          Ext3 e = ext3(r1, r2, d2);
          const int64_t a = e.a;
          const int64_t b = e.b;
          Rat x1 = make_rat(i128(a) * h - i128(b) * d1, d2);
          Rat x2 = make_rat(p, d1);
          Rat x3 = make_rat(a, d1);
          Rat xi1 = make_rat(h, d1);
          Rat xi2 = make_rat(i128(p) * k - i128(s) * d1, d2);
          Rat xi3 = make_rat(k, d1);
          if (!seen.insert(canonical_coset(x1, x2, x3, xi1, xi2, xi3)).second)
            continue;
          phases.add_combination(
              {{m.m1, x1}, {m.m2, x2}, {n.m1, xi1}, {n.m2, xi2}});
        }
      }
    }
  }
  return phases.finish(static_cast<int64_t>(seen.size()));
}

// ---------------------------------------------------------------------------
// w4 cell, brute force.
//
// Cell matrices decompose with t = diag(1/c1, c1/c2, c2); the cell is empty
// unless c2 | c1, and with e = c1/c2 the coset representatives are indexed by
// bottom rows (0, c2, v), middle rows (e, u, s').  The top row is any integer
// solution of row . (u*v - s'*c2, -e*v, e*c2) = 1; the unipotent coordinates
// are x1 = a/e, x2 = u/c2, x3 = b/c2, xi2 = v/c2, xi3 = (s'*c2 - u*v)/(e*c2),
// xi1 = 0, and the pairing e(m1 x1 + m2 x2 + n2 xi2) does not see n1.
// ---------------------------------------------------------------------------
KloostermanValue brute_w4(const CharacterIndex& m, const CharacterIndex& n,
                          const Modulus& c) {
  if (c.c1 % c.c2 != 0) return KloostermanValue{cx{}, 0};
  const int64_t c2 = c.c2;
  const int64_t e = c.c1 / c.c2;
  std::set<CosetKey> seen;
  PhaseAccum phases;
  for (int64_t u = 0; u < c2; ++u) {
    for (int64_t v = 0; v < c2; ++v) {
      for (int64_t sp = 0; sp < e; ++sp) {
        const int64_t w1 = u * v - sp * c2;
        const int64_t w2 = -e * v;
        const int64_t w3 = e * c2;
        if (gcd3(w1, w2, w3) != 1) continue;
        Ext3 ec = ext3(w1, w2, w3);
        const int64_t a = ec.a;
        const int64_t b = ec.b;
        Rat x1 = make_rat(a, e);
        Rat x2 = make_rat(u, c2);
        Rat x3 = make_rat(b, c2);
        Rat xi1 = make_rat(0, 1);
        Rat xi2 = make_rat(v, c2);
        Rat xi3 = make_rat(i128(sp) * c2 - i128(u) * v, i128(e) * c2);
        if (!seen.insert(canonical_coset(x1, x2, x3, xi1, xi2, xi3)).second)
          continue;
        phases.add_combination({{m.m1, x1}, {m.m2, x2}, {n.m2, xi2}});
      }
    }
  }
  return phases.finish(static_cast<int64_t>(seen.size()));
}

// ---------------------------------------------------------------------------
// w5 cell, brute force.
//
// Cell matrices decompose with t = diag(1/c1, c1/c2, c2); the cell is empty
// unless c1 | c2.  Bottom rows are (c2, h, k); middle rows (p, q', s'') need
// c2 | p*h and c2 | (c1 + p*k); top rows (A, B, C) need c1*c2 | (c2 + c1*A*h)
// with C free, and the determinant is then 1 automatically.  Coordinates:
// x1 = (C*c2 - A*k)/c1, x2 = p/c2, x3 = A/c2, xi1 = h/c2, xi3 = k/c2,
// xi2 = 0, and the pairing e(m1 x1 + m2 x2 + n1 xi1) does not see n2.
// ---------------------------------------------------------------------------
KloostermanValue brute_w5(const CharacterIndex& m, const CharacterIndex& n,
                          const Modulus& c) {
  if (c.c2 % c.c1 != 0) return KloostermanValue{cx{}, 0};
  const int64_t c1 = c.c1;
  const int64_t c2 = c.c2;
  std::set<CosetKey> seen;
  PhaseAccum phases;
  for (int64_t p = 0; p < c2; ++p) {
    for (int64_t h = 0; h < c2; ++h) {
      if ((p * h) % c2 != 0) continue;
      for (int64_t k = 0; k < c2; ++k) {
        if (mod_pos64(c1 + p * k, c2) != 0) continue;
        for (int64_t A = 0; A < c2; ++A) {
          if (mod_pos128(i128(c2) + i128(c1) * A * h, c1 * c2) != 0) continue;
          for (int64_t C = 0; C < c1; ++C) {
            Rat x1 = make_rat(i128(C) * c2 - i128(A) * k, c1);
            Rat x2 = make_rat(p, c2);
            Rat x3 = make_rat(A, c2);
            Rat xi1 = make_rat(h, c2);
            Rat xi2 = make_rat(0, 1);
            Rat xi3 = make_rat(k, c2);
            if (!seen.insert(canonical_coset(x1, x2, x3, xi1, xi2, xi3))
                     .second)
              continue;
            phases.add_combination({{m.m1, x1}, {m.m2, x2}, {n.m1, xi1}});
          }
        }
      }
    }
  }
  return phases.finish(static_cast<int64_t>(seen.size()));
}

// ---------------------------------------------------------------------------
// w4 cell, closed form.  Folding the top-row extended-gcd freedom into the
// congruence g | (1 - a*u*v) with g = gcd(e*v, a*c2, e*c2) counts all cosets
// sharing the phase e((m1*a*c2 + (m2*u + n2*v)*e) / c1):
//   S = sum_{a in [0,e)} sum_{u,v in [0,c2)} g * [g | 1 - a*u*v] * e(...).
// ---------------------------------------------------------------------------
KloostermanValue fast_w4_core(int64_t m1, int64_t m2, int64_t n2,
                              int64_t c1, int64_t c2) {
  if (c1 % c2 != 0) return KloostermanValue{cx{}, 0};
  const int64_t e = c1 / c2;
  PhaseAccum phases;
  int64_t terms = 0;
  for (int64_t a = 0; a < e; ++a) {
    for (int64_t u = 0; u < c2; ++u) {
      for (int64_t v = 0; v < c2; ++v) {
        const int64_t g = gcd3(e * v, a * c2, c1);
        if (mod_pos128(i128(1) - i128(a) * u * v, g) != 0) continue;
        terms += g;
        const i128 num =
            i128(m1) * a * c2 + (i128(m2) * u + i128(n2) * v) * e;
        std::pair<int64_t, int64_t> key = PhaseAccum::reduce(
            mod_pos128(num, c1), c1);
        phases.counts[key] += g;
      }
    }
  }
  return phases.finish(terms);
}

// ---------------------------------------------------------------------------
// Long-element cell, closed form.  Cosets are classified by
// (B1 in [0, D1), R1, R2 in [0, D2)) subject to D2 | (D1*R1 + B1*R2) with
// A3 = -(D1*R1 + B1*R2)/D2, gcd(D1, B1, A3) = 1, gcd(R1, R2, D2) = 1.  The
// middle-row residue p mod D1 solves p*B1 = D2, p*A3 = -R2 (mod D1), and the
// top-row combination T3 = a*B1 - b*D1 mod D2 comes from any extended-gcd
// solution a*R1 + b*R2 + c*D2 = 1.  The phase is
//   e((m2*p + n1*B1)/D1 + (m1*T3 - n2*R2)/D2).
// ---------------------------------------------------------------------------
KloostermanValue fast_wl(const CharacterIndex& m, const CharacterIndex& n,
                         const Modulus& c) {
  const int64_t d1 = c.c1;
  const int64_t d2 = c.c2;
  const int64_t gg = std::gcd(d1, d2);
  const int64_t d2p = d2 / gg;
  const int64_t d1p = d1 / gg;
  const int64_t inv_d1p = inv_mod(d1p, d2p);
  const int64_t lcm = d1p * d2;
  PhaseAccum phases;
  int64_t terms = 0;
  for (int64_t b1 = 0; b1 < d1; ++b1) {
    for (int64_t r2 = 0; r2 < d2; ++r2) {
      const int64_t rhs = mod_pos128(-i128(b1) * r2, d2);
      if (rhs % gg != 0) continue;
      const int64_t base =
          mod_pos128(i128(rhs / gg) * inv_d1p, d2p);
      for (int64_t t = 0; t < gg; ++t) {
        const int64_t r1 = base + t * d2p;
        const i128 lift = i128(d1) * r1 + i128(b1) * r2;
        assert(lift % d2 == 0);
        const int64_t a3 = static_cast<int64_t>(-(lift / d2));
        if (gcd3(d1, b1, a3) != 1) continue;
        if (gcd3(r1, r2, d2) != 1) continue;
        Egcd eg = egcd(b1, a3);
        const int64_t ginv = inv_mod(eg.g, d1);
        const int64_t p = mod_pos128(
            i128(ginv) * mod_pos128(i128(eg.x) * d2 - i128(eg.y) * r2, d1),
            d1);
        assert(mod_pos128(i128(p) * b1 - d2, d1) == 0);
        assert(mod_pos128(i128(p) * a3 + r2, d1) == 0);
        Ext3 e3 = ext3(r1, r2, d2);
        const int64_t t3 = mod_pos128(i128(e3.a) * b1 - i128(e3.b) * d1, d2);
        const i128 num = (i128(m.m2) * p + i128(n.m1) * b1) * (lcm / d1) +
                         (i128(m.m1) * t3 - i128(n.m2) * r2) * (lcm / d2);
        phases.add(PhaseAccum::reduce(mod_pos128(num, lcm), lcm));
        ++terms;
      }
    }
  }
  return phases.finish(terms);
}

void validate(const CharacterIndex& m, const CharacterIndex& n,
              const Modulus& c) {
  if (m.m1 == 0 || m.m2 == 0 || n.m1 == 0 || n.m2 == 0) {
    throw DegenerateParameter(
        "kloosterman: character indices must be nonzero");
  }
  if (c.c1 < 1 || c.c2 < 1) {
    throw DegenerateParameter("kloosterman: moduli must be positive");
  }
}

}  // namespace

KloostermanValue kloosterman_bruteforce(KernelTag w, const CharacterIndex& m,
                                        const CharacterIndex& n,
                                        const Modulus& c) {
  validate(m, n, c);
  if (c.c1 > kBruteCap || c.c2 > kBruteCap) {
    throw RangeExceeded("kloosterman_bruteforce: modulus exceeds cap 64");
  }
  switch (w) {
    case KernelTag::kW4:
      return brute_w4(m, n, c);
    case KernelTag::kW5:
      return brute_w5(m, n, c);
    case KernelTag::kWl:
      return brute_wl(m, n, c);
    default:
      throw RangeExceeded(
          "kloosterman_bruteforce: sums attach to w4, w5, wl only");
  }
}

KloostermanValue kloosterman_fast(KernelTag w, const CharacterIndex& m,
                                  const CharacterIndex& n, const Modulus& c) {
  validate(m, n, c);
  switch (w) {
    case KernelTag::kW4:
      return fast_w4_core(m.m1, m.m2, n.m2, c.c1, c.c2);
    case KernelTag::kW5:
      // Dual side of the involution g -> w_l g^{-T} w_l, which swaps the w4
      // and w5 cells, swaps the two character slots, transposes the modulus,
      // and negates the surviving n-slot.
      return fast_w4_core(m.m2, m.m1, -n.m1, c.c2, c.c1);
    case KernelTag::kWl:
      return fast_wl(m, n, c);
    default:
      throw RangeExceeded("kloosterman_fast: sums attach to w4, w5, wl only");
  }
}

bool compatibility(KernelTag w, const CharacterIndex& m,
                   const CharacterIndex& n, const std::array<int, 2>& eps,
                   const Modulus& c) {
  validate(m, n, c);
  if (eps[0] * eps[0] != 1 || eps[1] * eps[1] != 1) {
    throw DegenerateParameter("compatibility: signs must be +1 or -1");
  }
  switch (w) {
    case KernelTag::kW4:
      return i128(eps[0]) * m.m2 * c.c1 == i128(n.m1) * c.c2 * c.c2;
    case KernelTag::kW5:
      return i128(eps[1]) * m.m1 * c.c2 == i128(n.m2) * c.c1 * c.c1;
    default:
      return true;
  }
}

}  // namespace gl3
