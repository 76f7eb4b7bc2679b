// Trapezoid Mellin-Barnes engine, tanh-sinh quadrature and tail helpers.
#include "gl3/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gl3/errors.hpp"
#include "gl3/reduce.hpp"

namespace gl3 {

namespace {

struct DimState {
  double sigma = 0.0;
  double H = 16.0;   // current half-height
  double h = 0.25;   // current node spacing
};

std::vector<double> dim_nodes(const DimState& d) {
  int K = static_cast<int>(std::llround(d.H / d.h));
  std::vector<double> t;
  t.reserve(2 * K + 1);
  for (int k = -K; k <= K; ++k) t.push_back(k * d.h);
  return t;
}

struct GridEval {
  cx value;
  double grid_max = 0.0;                 // max |f| over all nodes
  std::vector<double> edge_max;          // max |f| on the outer layer, per dim
};

GridEval evaluate_grid(const MbIntegrand& f, const std::vector<DimState>& dims) {
  const int n = static_cast<int>(dims.size());
  std::vector<std::vector<double>> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = dim_nodes(dims[i]);

  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= nodes[i].size();

  std::vector<cx> vals(total);
  GridEval out;
  out.edge_max.assign(n, 0.0);

  std::vector<cx> s(n);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    bool edge[3] = {false, false, false};
    for (int i = n - 1; i >= 0; --i) {
      idx[i] = rem % nodes[i].size();
      rem /= nodes[i].size();
      edge[i] = (idx[i] == 0 || idx[i] + 1 == nodes[i].size());
      s[i] = cx(dims[i].sigma, nodes[i][idx[i]]);
    }
    cx v = f.eval(s);
    vals[flat] = v;
    double m = std::abs(v);
    out.grid_max = std::max(out.grid_max, m);
    for (int i = 0; i < n; ++i) {
      if (edge[i]) out.edge_max[i] = std::max(out.edge_max[i], m);
    }
  }

  cx sum = pairwise_sum(vals);
  double measure = 1.0;
  for (int i = 0; i < n; ++i) measure *= dims[i].h / kTwoPi;
  out.value = sum * measure;
  return out;
}

}  // namespace

cx mb_integrate(const MbIntegrand& f, const std::vector<ContourSpec>& contours,
                double tol, double pole_margin) {
  if (f.dims < 1 || f.dims > 3) {
    throw RangeExceeded("mb_integrate: dims must be 1..3");
  }
  if (static_cast<int>(contours.size()) != f.dims) {
    throw DimensionMismatch("mb_integrate: contour count != dims");
  }
  for (const auto& c : contours) {
    if (c.nodes < 16) throw RangeExceeded("mb_integrate: nodes must be >= 16");
    if (!(c.height > 0.0)) throw RangeExceeded("mb_integrate: height must be positive");
  }
  // Contour legality: every left family must lie strictly left of its
  // abscissa, every right family strictly right, by at least pole_margin.
  if (!f.poles.empty()) {
    if (static_cast<int>(f.poles.size()) != f.dims) {
      throw DimensionMismatch("mb_integrate: pole family list count != dims");
    }
    for (int i = 0; i < f.dims; ++i) {
      for (const auto& fam : f.poles[i]) {
        double gap = (fam.side == PoleSide::left)
                         ? contours[i].abscissa - fam.base.real()
                         : fam.base.real() - contours[i].abscissa;
        if (gap < pole_margin) {
          throw PoleOnContour("mb_integrate: pole family at re=" +
                              std::to_string(fam.base.real()) + " violates contour re=" +
                              std::to_string(contours[i].abscissa) + " in dim " +
                              std::to_string(i));
        }
      }
    }
  }

  std::vector<DimState> dims(f.dims);
  bool adaptive = false;
  for (int i = 0; i < f.dims; ++i) {
    dims[i].sigma = contours[i].abscissa;
    dims[i].H = contours[i].height;
    int half = std::max(8, contours[i].nodes / 2);
    dims[i].h = dims[i].H / half;
    if (contours[i].adaptivity == ContourSpec::Adaptivity::doubling) adaptive = true;
  }

  GridEval g = evaluate_grid(f, dims);
  if (!adaptive) return g.value;

  cx prev = g.value;
  constexpr int kMaxRounds = 20;
  for (int round = 0; round < kMaxRounds; ++round) {
    // Decide refinement: extend any dimension whose outer layer still
    // carries weight, otherwise halve spacings.
    double floor = g.grid_max * std::max(tol * 1e-2, 1e-16);
    bool extended = false;
    for (int i = 0; i < f.dims; ++i) {
      if (g.edge_max[i] > floor && g.edge_max[i] > 0.0) {
        dims[i].H *= 2.0;
        extended = true;
      }
    }
    if (!extended) {
      for (auto& d : dims) d.h *= 0.5;
    }
    std::size_t total = 1;
    bool over_budget = false;
    for (const auto& d : dims) {
      const std::size_t n = 2 * static_cast<std::size_t>(std::llround(d.H / d.h)) + 1;
      if (n > (1u << 21)) over_budget = true;
      total *= n;
    }
    if (over_budget || total > (1ull << 24)) {
      throw NonConvergent("mb_integrate: node budget exceeded before convergence");
    }
    g = evaluate_grid(f, dims);
    double scale = std::max({std::abs(g.value), std::abs(prev), 1e-300});
    if (!extended && std::abs(g.value - prev) <= tol * scale) {
      return g.value;
    }
    prev = g.value;
  }
  throw NonConvergent("mb_integrate: refinement cap reached without convergence");
}

namespace {

struct TsNode {
  double x;
  double omx;  // 1 - x, computed without cancellation
  double w;
};

// Node map x(u) = 1/(1+e^{-2w}), w = (pi/2) sinh u, weight dx/du.
TsNode ts_node(double u) {
  double w = 0.5 * kPi * std::sinh(u);
  double a = std::exp(-2.0 * std::abs(w));
  double small = a / (1.0 + a);         // side approached by the node
  double large = 1.0 / (1.0 + a);
  TsNode n;
  n.x = (w >= 0.0) ? large : small;
  n.omx = (w >= 0.0) ? small : large;
  n.w = kPi * std::cosh(u) * a / ((1.0 + a) * (1.0 + a));
  return n;
}

double ts_umax(double edge_cut) {
  double cut = std::max(edge_cut, 1e-290);
  return std::asinh(std::log(1.0 / cut) / kPi);
}

}  // namespace

cx tanh_sinh(const std::function<cx(double, double)>& f, double tol, int max_level,
             double edge_cut) {
  const double umax = ts_umax(edge_cut);
  double h = 0.5;
  auto level_sum = [&](double step, bool odd_only) {
    std::vector<cx> vals;
    int kmax = static_cast<int>(std::floor(umax / step));
    for (int k = -kmax; k <= kmax; ++k) {
      if (odd_only && (k % 2 == 0)) continue;
      TsNode n = ts_node(k * step);
      if (n.w == 0.0) continue;
      vals.push_back(f(n.x, n.omx) * n.w);
    }
    return pairwise_sum(vals);
  };

  cx V = h * level_sum(h, false);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    cx Vnew = 0.5 * V + h * level_sum(h, true);
    double scale = std::max({std::abs(Vnew), std::abs(V), 1e-300});
    if (level >= 3 && std::abs(Vnew - V) <= tol * scale) return Vnew;
    V = Vnew;
  }
  throw NonConvergent("tanh_sinh: level cap reached without convergence");
}

cx tanh_sinh_2d(const std::function<cx(double, double, double, double)>& f, double tol,
                int max_level, double edge_cut) {
  const double umax = ts_umax(edge_cut);
  auto full_sum = [&](double step) {
    int kmax = static_cast<int>(std::floor(umax / step));
    std::vector<TsNode> nodes;
    nodes.reserve(2 * kmax + 1);
    for (int k = -kmax; k <= kmax; ++k) {
      TsNode n = ts_node(k * step);
      if (n.w != 0.0) nodes.push_back(n);
    }
    std::vector<cx> rows;
    rows.reserve(nodes.size());
    std::vector<cx> vals;
    vals.reserve(nodes.size());
    for (const auto& n1 : nodes) {
      vals.clear();
      for (const auto& n2 : nodes) {
        // The weight product can underflow to zero at doubly extreme nodes
        // even though each factor is normal; such pairs contribute nothing.
        const double wp = n1.w * n2.w;
        if (wp == 0.0) continue;
        vals.push_back(f(n1.x, n1.omx, n2.x, n2.omx) * wp);
      }
      rows.push_back(pairwise_sum(vals));
    }
    return pairwise_sum(rows) * (step * step);
  };

  double h = 0.5;
  cx V = full_sum(h);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    cx Vnew = full_sum(h);
    double scale = std::max({std::abs(Vnew), std::abs(V), 1e-300});
    if (level >= 3 && std::abs(Vnew - V) <= tol * scale) return Vnew;
    V = Vnew;
  }
  throw NonConvergent("tanh_sinh_2d: level cap reached without convergence");
}

cx ibp_tail_upper(cx f, cx L1, cx L2) {
  if (std::abs(L1) < 1e-8) {
    throw NonConvergent("ibp_tail_upper: vanishing log-derivative at the edge");
  }
  return -f / L1 - f * L2 / (L1 * L1 * L1);
}

cx ibp_tail_lower(cx f, cx L1, cx L2) {
  if (std::abs(L1) < 1e-8) {
    throw NonConvergent("ibp_tail_lower: vanishing log-derivative at the edge");
  }
  return f / L1 + f * L2 / (L1 * L1 * L1);
}

std::vector<double> simpson_weights(int n, double h) {
  if (n < 3 || n % 2 == 0) throw RangeExceeded("simpson_weights: need odd n >= 3");
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    w[i] = c * h / 3.0;
  }
  return w;
}

}  // namespace gl3
