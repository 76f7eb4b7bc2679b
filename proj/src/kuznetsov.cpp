#include "gl3/kuznetsov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gl3/errors.hpp"
#include "gl3/quadrature.hpp"
#include "gl3/stade.hpp"
#include "gl3/wigner.hpp"

namespace gl3 {
namespace {

using std::int64_t;
using i128 = __int128;

constexpr double kLineStep = 0.25;

void require_weight(int d) {
  if (d < 2) throw DegenerateParameter("minimal weight d must be at least 2");
}

// Midpoint nodes t_j = (j + 1/2) h for the positive half of a vertical-line
// quadrature; the negative half folds through the conjugation symmetry of
// the integrands on the unitary line.  The envelope estimate stands in for
// the root-mean-square decay of the Whittaker rows.
std::vector<double> kl_nodes(const TestFunction& F, int d) {
  std::vector<double> nodes;
  double peak = 0.0;
  int quiet = 0;
  for (int j = 0; j < 400; ++j) {
    const double t = (j + 0.5) * kLineStep;
    if (t > 12.0) break;
    nodes.push_back(t);
    const cx up = F.eval(cx{0.0, t});
    const cx dn = F.eval(cx{0.0, -t});
    const cx sin_w = spectral_weights({d, cx{0.0, t}}).sin_weight;
    const double env = (std::abs(up) + std::abs(dn)) * std::abs(sin_w) *
                       std::exp(-1.5 * kPi * t);
    peak = std::max(peak, env);
    if (t >= 4.0 && env <= 1e-9 * peak + 1e-300) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  if (peak == 0.0) nodes.clear();
  return nodes;
}

std::vector<cx> conj_vec(const std::vector<cx>& v) {
  std::vector<cx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
  return out;
}

cx dot_conj(const std::vector<cx>& a, const std::vector<cx>& b) {
  cx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

// Trapezoid weights for the log grid, with the step in u = log y.
struct GridScheme {
  std::vector<double> u;
  std::vector<double> w;
};

GridScheme grid_scheme(const LogGrid& grid) {
  if (grid.n < 2 || grid.hi <= grid.lo) {
    throw DegenerateParameter("log grid needs n >= 2 and hi > lo");
  }
  GridScheme s;
  const double h = (grid.hi - grid.lo) / (grid.n - 1);
  for (int i = 0; i < grid.n; ++i) {
    s.u.push_back(grid.lo + i * h);
    s.w.push_back((i == 0 || i == grid.n - 1) ? 0.5 * h : h);
  }
  return s;
}

double rat_to_double(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

cx h_transform(KernelTag w, int d, const TestFunction& F,
               const SignedTorusPoint& y, double tol) {
  require_weight(d);
  if (y.y1 == 0.0 || y.y2 == 0.0) {
    throw DegenerateParameter("h_transform: torus point must be nonzero");
  }
  if (w == KernelTag::kWl && y.y1 > 0.0 && y.y2 > 0.0) return cx{};
  const double ktol = std::max(1e-10, 0.03 * tol);
  cx acc{};
  double block = 0.0;
  int quiet = 0;
  for (int j = 0;; ++j) {
    const double t = (j + 0.5) * kLineStep;
    if (t > 40.0) {
      throw NonConvergent("h_transform: line truncation did not settle");
    }
    cx term{};
    // The long-element kernel satisfies K(y; -r) = conj K(y; r) on the
    // tempered line, so one evaluation per |t| serves both half-lines.
    cx kv_up{};
    bool have_up = false;
    for (double s : {t, -t}) {
      const cx r{0.0, s};
      const cx fv = F.eval(r);
      if (fv == cx{}) continue;
      const SpectralPoint p{d, r};
      cx kv;
      if (w == KernelTag::kI) {
        kv = cx{1.0, 0.0};
      } else if (w == KernelTag::kWl && have_up) {
        kv = std::conj(kv_up);
      } else {
        kv = kernel_eval_auto(w, p, y, ktol);
        if (w == KernelTag::kWl && s > 0.0) {
          kv_up = kv;
          have_up = true;
        }
      }
      term += fv * kv * spectral_weights(p).spec_weight;
    }
    const cx inc = cx{0.0, 1.0} * kLineStep * term;
    acc += inc;
    block += std::abs(inc);
    if (j % 4 == 3) {
      const bool settled = block <= tol * std::abs(acc) + 1e-280;
      block = 0.0;
      if (t >= 6.0 && settled) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
  }
  return acc / std::abs(y.y1 * y.y2);
}

std::vector<cx> kl_flat(const TestFunction& F, int d, const TorusPoint& y,
                        double tol) {
  require_weight(d);
  const auto nodes = kl_nodes(F, d);
  std::vector<cx> f(2 * d + 1, cx{});
  for (double t : nodes) {
    const cx r{0.0, t};
    const cx sin_w = spectral_weights({d, r}).sin_weight;
    const cx up = F.eval(r) * sin_w;
    const cx dn = F.eval(-r) * sin_w;
    const auto row = whittaker_vector({d, r}, y, {}, tol);
    for (int i = 0; i <= 2 * d; ++i) {
      f[i] += cx{0.0, kLineStep} * (up * row[i] + dn * std::conj(row[i]));
    }
  }
  return f;
}

cx kl_sharp(const std::function<std::vector<cx>(const TorusPoint&)>& f, int d,
            const LogGrid& grid, cx r, double tol) {
  require_weight(d);
  const auto scheme = grid_scheme(grid);
  cx acc{};
  for (std::size_t i1 = 0; i1 < scheme.u.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < scheme.u.size(); ++i2) {
      const TorusPoint y{std::exp(scheme.u[i1]), std::exp(scheme.u[i2])};
      if (kTwoPi * (y.y1 + y.y2) > 60.0) continue;
      const auto fy = f(y);
      if (fy.size() != static_cast<std::size_t>(2 * d + 1)) {
        throw DimensionMismatch("kl_sharp: f must produce 2d+1 coordinates");
      }
      const auto row = whittaker_vector({d, r}, y, {}, tol);
      const double wt = scheme.w[i1] * scheme.w[i2] *
                        std::exp(-2.0 * (scheme.u[i1] + scheme.u[i2]));
      acc += wt * dot_conj(fy, row);
    }
  }
  return acc;
}

KlRoundtripReport kl_roundtrip(const TestFunction& F, int d,
                               const std::vector<cx>& samples, double tol,
                               const LogGrid& grid) {
  require_weight(d);
  for (const cx& r : samples) {
    if (std::abs(r.real()) > 1e-9) {
      throw DegenerateParameter(
          "kl_roundtrip: sample points must sit on the unitary line");
    }
  }
  KlRoundtripReport rep;
  rep.recovered.assign(samples.size(), cx{});
  rep.reference.resize(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    rep.reference[k] = F.eval(samples[k]);
  }

  const auto nodes = kl_nodes(F, d);
  if (!nodes.empty()) {
    std::vector<cx> up(nodes.size()), dn(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const cx r{0.0, nodes[j]};
      const cx sin_w = spectral_weights({d, r}).sin_weight;
      up[j] = F.eval(r) * sin_w;
      dn[j] = F.eval(-r) * sin_w;
    }

    const WignerMatrix dual_rot(
        d, mat3_mul(sign_matrix(-1, -1), rotation_matrix(WeylWord::kWl)));
    const double dual_sign = (d % 2 == 0) ? 1.0 : -1.0;
    const auto swap_row = [&](const std::vector<cx>& row) {
      auto out = dual_rot.row_action(conj_vec(row));
      for (auto& v : out) v *= dual_sign;
      return out;
    };

    const auto scheme = grid_scheme(grid);
    const int dim = 2 * d + 1;
    for (std::size_t i1 = 0; i1 < scheme.u.size(); ++i1) {
      for (std::size_t i2 = i1; i2 < scheme.u.size(); ++i2) {
        const TorusPoint y{std::exp(scheme.u[i1]), std::exp(scheme.u[i2])};
        if (kTwoPi * (y.y1 + y.y2) > 60.0) continue;
        const double wt = scheme.w[i1] * scheme.w[i2] *
                          std::exp(-2.0 * (scheme.u[i1] + scheme.u[i2]));

        std::vector<cx> f(dim, cx{}), fsw(dim, cx{});
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          const auto row = whittaker_vector({d, cx{0.0, nodes[j]}}, y, {}, tol);
          for (int i = 0; i < dim; ++i) {
            f[i] += cx{0.0, kLineStep} *
                    (up[j] * row[i] + dn[j] * std::conj(row[i]));
          }
          if (i2 > i1) {
            const auto srow = swap_row(row);
            for (int i = 0; i < dim; ++i) {
              fsw[i] += cx{0.0, kLineStep} *
                        (up[j] * srow[i] + dn[j] * std::conj(srow[i]));
            }
          }
        }
        for (std::size_t k = 0; k < samples.size(); ++k) {
          const auto row = whittaker_vector({d, samples[k]}, y, {}, tol);
          rep.recovered[k] += wt * dot_conj(f, row);
          if (i2 > i1) {
            rep.recovered[k] += wt * dot_conj(fsw, swap_row(row));
          }
        }
      }
    }
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double scale = std::max(std::abs(rep.reference[k]), 1e-8);
    rep.max_rel_error = std::max(
        rep.max_rel_error, std::abs(rep.recovered[k] - rep.reference[k]) /
                               scale);
  }
  return rep;
}

GeometricSideReport geometric_side(const TestFunction& F, int d,
                                   const CharacterIndex& m,
                                   const CharacterIndex& n, int cutoff,
                                   double tol) {
  require_weight(d);
  if (m.m1 == 0 || m.m2 == 0 || n.m1 == 0 || n.m2 == 0) {
    throw DegenerateParameter("geometric_side: character indices nonzero");
  }
  if (cutoff < 1) {
    throw DegenerateParameter("geometric_side: cutoff must be positive");
  }
  GeometricSideReport rep;
  rep.cutoff = cutoff;
  rep.shell_w4.assign(cutoff, 0.0);
  rep.shell_w5.assign(cutoff, 0.0);
  rep.shell_wl.assign(cutoff, 0.0);

  if (std::abs(m.m1) == std::abs(n.m1) && std::abs(m.m2) == std::abs(n.m2)) {
    rep.k_identity = h_transform(KernelTag::kI, d, F, {1.0, 1.0}, tol);
  }

  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      const CharacterIndex en{e1 * n.m1, e2 * n.m2};

      for (int64_t c2 = 1; c2 <= cutoff; ++c2) {
        const i128 num = i128(n.m1) * c2 * c2;
        const int64_t den = int64_t(e1) * m.m2;
        if (num % den != 0) continue;
        const i128 c1w = num / den;
        if (c1w < 1 || c1w > cutoff) continue;
        const int64_t c1 = static_cast<int64_t>(c1w);
        const auto S = kloosterman_fast(KernelTag::kW4, m, en,
                                        Modulus{c1, c2});
        if (std::abs(S.value) <= 1e-12) continue;
        const double y1 = rat_to_double(
            i128(e1) * e2 * m.m1 * m.m2 * m.m2 * n.m2,
            i128(c2) * c2 * c2 * n.m1);
        const cx term = S.value / double(c1 * c2) *
                        h_transform(KernelTag::kW4, d, F, {y1, 1.0}, tol);
        rep.k_w4 += term;
        rep.shell_w4[std::max(c1, c2) - 1] += std::abs(term);
      }

      for (int64_t c1 = 1; c1 <= cutoff; ++c1) {
        const i128 num = i128(n.m2) * c1 * c1;
        const int64_t den = int64_t(e2) * m.m1;
        if (num % den != 0) continue;
        const i128 c2w = num / den;
        if (c2w < 1 || c2w > cutoff) continue;
        const int64_t c2 = static_cast<int64_t>(c2w);
        const auto S = kloosterman_fast(KernelTag::kW5, m, en,
                                        Modulus{c1, c2});
        if (std::abs(S.value) <= 1e-12) continue;
        const double y2 = rat_to_double(
            i128(e1) * e2 * m.m1 * m.m1 * m.m2 * n.m1,
            i128(c1) * c1 * c1 * n.m2);
        const cx term = S.value / double(c1 * c2) *
                        h_transform(KernelTag::kW5, d, F, {1.0, y2}, tol);
        rep.k_w5 += term;
        rep.shell_w5[std::max(c1, c2) - 1] += std::abs(term);
      }

      for (int64_t c1 = 1; c1 <= cutoff; ++c1) {
        for (int64_t c2 = 1; c2 <= cutoff; ++c2) {
          const double y1 =
              rat_to_double(i128(e2) * m.m1 * n.m2 * c2, i128(c1) * c1);
          const double y2 =
              rat_to_double(i128(e1) * m.m2 * n.m1 * c1, i128(c2) * c2);
          if (y1 > 0.0 && y2 > 0.0) continue;
          const auto S = kloosterman_fast(KernelTag::kWl, m, en,
                                          Modulus{c1, c2});
          if (std::abs(S.value) <= 1e-12) continue;
          const cx term = S.value / double(c1 * c2) *
                          h_transform(KernelTag::kWl, d, F, {y1, y2}, tol);
          rep.k_wl += term;
          rep.shell_wl[std::max(c1, c2) - 1] += std::abs(term);
        }
      }
    }
  }
  return rep;
}

double weyl_main_term(const SpectralWindow& window, int d) {
  require_weight(d);
  double a = 0.0, b = 0.0;
  if (window.shape == SpectralWindow::Shape::kBox) {
    a = window.lo;
    b = window.hi;
  } else {
    a = window.center - window.radius;
    b = window.center + window.radius;
  }
  if (b <= a) return 0.0;
  const double hw = 0.5 * (d - 1);
  const double pi5 = kPi * kPi * kPi * kPi * kPi;
  return 3.0 * (d - 1) / (32.0 * pi5) *
         (hw * hw * (b - a) + 3.0 * (b * b * b - a * a * a));
}

std::pair<double, double> error_diagnostics(const TestFunction& F, int d,
                                            double eta, double epsilon) {
  require_weight(d);
  if (!(eta > 0.0) || !(eta < F.strip)) {
    throw DegenerateParameter(
        "error_diagnostics: need 0 < eta < holomorphy half-width");
  }
  const double sigma = 0.25 + eta;
  const auto integrate = [](const std::function<double(double)>& g) {
    double total = 0.0;
    double block = 0.0;
    int quiet = 0;
    for (int j = 0;; ++j) {
      const double t = (j + 0.5) * kLineStep;
      if (t > 200.0) {
        throw NonConvergent("error_diagnostics: tail did not settle");
      }
      const double inc = kLineStep * g(t);
      total += inc;
      block += inc;
      if (j % 8 == 7) {
        const bool settled = block <= 1e-10 * total + 1e-280;
        block = 0.0;
        if (t >= 4.0 && settled) {
          if (++quiet >= 2) break;
        } else {
          quiet = 0;
        }
      }
    }
    return total;
  };
  const double e1 = integrate([&](double t) {
    const double amp =
        std::abs(F.eval(cx{0.0, t})) + std::abs(F.eval(cx{0.0, -t}));
    return amp * std::pow(d + t, 1.0 + epsilon);
  });
  const double e2 = integrate([&](double t) {
    double amp = 0.0;
    for (double s : {t, -t}) {
      const cx r{-sigma, s};
      amp += std::abs(F.eval(r)) + std::abs(F.eval(-r));
    }
    const double mod = std::hypot(sigma, t);
    return amp * d * std::pow(d + mod, -0.5 + epsilon);
  });
  return {e1, e2};
}

TestFunction smoothed_indicator(const SpectralWindow& window, int d,
                                double T) {
  require_weight(d);
  if (window.shape != SpectralWindow::Shape::kBox || window.hi <= window.lo) {
    throw DegenerateParameter(
        "smoothed_indicator: needs a box window with hi > lo");
  }
  if (!(T > 0.0)) {
    throw DegenerateParameter("smoothed_indicator: T must be positive");
  }
  const double L = std::log(d + T);
  const double pref = std::sqrt(L / kPi);
  const double lo = window.lo;
  const double hi = window.hi;
  auto piece = [L](cx r, double a, double b) -> cx {
    if (b <= a) return cx{};
    return (b - a) * tanh_sinh(
                         [&](double x, double) {
                           const cx z = r - cx{0.0, a + (b - a) * x};
                           return std::exp(L * z * z);
                         },
                         1e-12, 10);
  };
  TestFunction F;
  F.eval = [L, pref, lo, hi, piece](cx r) -> cx {
    const double ti = r.imag();
    if (ti > lo && ti < hi) {
      return pref * (piece(r, lo, ti) + piece(r, ti, hi));
    }
    return pref * piece(r, lo, hi);
  };
  F.strip = 1.0;
  F.decay = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  return F;
}

}  // namespace gl3
