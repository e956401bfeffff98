#include "chronoscale/delta_calculus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "chronoscale/error.hpp"
#include "chronoscale/format.hpp"
#include "chronoscale/quadrature.hpp"

namespace chronoscale {

namespace {

constexpr int kStencilPoints = 9;
constexpr int kCentralShift = -(kStencilPoints - 1) / 2;

using Weights = std::array<double, kStencilPoints>;

/// First-derivative weights at 0 for integer nodes shift, shift+1, ... (Fornberg).
Weights fornberg_first_derivative(int shift) {
  constexpr int n = kStencilPoints - 1;
  std::array<double, kStencilPoints> x{};
  for (int i = 0; i <= n; ++i) {
    x[static_cast<std::size_t>(i)] = static_cast<double>(shift + i);
  }
  // c[j][k]: weight of node j for derivative k (k = 0, 1).
  std::array<std::array<double, 2>, kStencilPoints> c{};
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const int mn = std::min(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[ui];
    for (int j = 0; j < i; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double c3 = x[ui] - x[uj];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[ui][static_cast<std::size_t>(k)] =
              c1 * (k * c[ui - 1][static_cast<std::size_t>(k - 1)] - c5 * c[ui - 1][static_cast<std::size_t>(k)]) / c2;
        }
        c[ui][0] = -c1 * c5 * c[ui - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[uj][static_cast<std::size_t>(k)] =
            (c4 * c[uj][static_cast<std::size_t>(k)] - k * c[uj][static_cast<std::size_t>(k - 1)]) / c3;
      }
      c[uj][0] = c4 * c[uj][0] / c3;
    }
    c1 = c2;
  }
  Weights w{};
  for (std::size_t j = 0; j < kStencilPoints; ++j) {
    w[j] = c[j][1];
  }
  return w;
}

const Weights& stencil_weights(int shift) {
  static const auto table = [] {
    std::array<Weights, kStencilPoints> t{};
    for (int s = 0; s < kStencilPoints; ++s) {
      t[static_cast<std::size_t>(s)] = fornberg_first_derivative(-s);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(-shift)];
}

/// Linear functional approximating the delta derivative along one axis.
struct AxisOperator {
  bool scattered = false;
  double t = 0.0;
  double sigma = 0.0;
  double mu = 0.0;
  std::array<double, kStencilPoints> points{};
  Weights weights{};

  template <typename G>
  double apply(const G& g) const {
    if (scattered) {
      return (g(sigma) - g(t)) / mu;
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < kStencilPoints; ++k) {
      sum += weights[k] * g(points[k]);
    }
    return sum;
  }
};

AxisOperator axis_operator(const TimeScale& ts, double t, const QuadConfig& cfg) {
  const auto loc = ts.locate(t);
  const auto segs = ts.segments();
  const Segment& seg = segs[loc.segment];
  AxisOperator op;
  op.t = loc.t;
  if (loc.t == seg.hi && loc.segment + 1 < segs.size()) {
    op.scattered = true;
    op.sigma = segs[loc.segment + 1].lo;
    op.mu = op.sigma - op.t;
    return op;
  }
  if (seg.degenerate()) {
    throw DomainError("derivative undefined at degenerate endpoint " + shortest_real(loc.t) + " of " +
                      ts.descriptor());
  }
  const double h = std::min(cfg.derivative_step_scale, seg.length() / (kStencilPoints + 1));
  const int lowest = static_cast<int>(std::ceil((seg.lo - op.t) / h));
  const int highest = static_cast<int>(std::floor((seg.hi - op.t) / h)) - (kStencilPoints - 1);
  const int shift = std::clamp(kCentralShift, std::max(lowest, -(kStencilPoints - 1)), std::min(highest, 0));
  const Weights& w = stencil_weights(shift);
  for (std::size_t k = 0; k < kStencilPoints; ++k) {
    op.points[k] = op.t + static_cast<double>(shift + static_cast<int>(k)) * h;
    op.weights[k] = w[k] / h;
  }
  return op;
}

void require_rectangle_point(const TimeScalePair& pair, double& x, double& y) {
  x = pair.first.snap(x);
  y = pair.second.snap(y);
}

}  // namespace

bool Rectangle::contains(double x, double y) const {
  return x >= a - kMembershipTol && x <= b + kMembershipTol && y >= c - kMembershipTol &&
         y <= d + kMembershipTol;
}

std::string Rectangle::descriptor() const {
  return shortest_real(a) + "," + shortest_real(b) + "," + shortest_real(c) + "," + shortest_real(d);
}

Rectangle make_rectangle(const TimeScalePair& pair, double a, double b, double c, double d) {
  Rectangle r{pair.first.snap(a), pair.first.snap(b), pair.second.snap(c), pair.second.snap(d)};
  if (!(r.a < r.b)) {
    throw DomainError("rectangle needs a < b, got a=" + shortest_real(a) + " b=" + shortest_real(b));
  }
  if (!(r.c < r.d)) {
    throw DomainError("rectangle needs c < d, got c=" + shortest_real(c) + " d=" + shortest_real(d));
  }
  return r;
}

void QuadConfig::validate() const {
  if (quad_order < 2 || quad_order > 512) {
    throw ConfigError("quad_order must be in [2, 512]");
  }
  if (!(panel_tol > 0.0) || !std::isfinite(panel_tol)) {
    throw ConfigError("panel_tol must be positive");
  }
  if (max_depth < 1 || max_depth > 60) {
    throw ConfigError("max_depth must be in [1, 60]");
  }
  if (!(derivative_step_scale > 0.0) || !std::isfinite(derivative_step_scale)) {
    throw ConfigError("derivative_step_scale must be positive");
  }
  if (supnorm_samples_per_segment < 2) {
    throw ConfigError("supnorm_samples_per_segment must be >= 2");
  }
  if (!(rel_floor >= 0.0) || !std::isfinite(rel_floor)) {
    throw ConfigError("rel_floor must be non-negative");
  }
}

double delta_partial(int axis, const BivariateFunction& f, const TimeScalePair& pair, double x, double y,
                     const QuadConfig& cfg) {
  if (axis != 1 && axis != 2) {
    throw MisuseError("axis must be 1 or 2");
  }
  require_rectangle_point(pair, x, y);
  if (axis == 1) {
    const AxisOperator op = axis_operator(pair.first, x, cfg);
    return op.apply([&](double u) { return f.eval(u, y); });
  }
  const AxisOperator op = axis_operator(pair.second, y, cfg);
  return op.apply([&](double v) { return f.eval(x, v); });
}

double numeric_mixed_delta(const BivariateFn& f, const TimeScalePair& pair, double x, double y,
                           const QuadConfig& cfg) {
  require_rectangle_point(pair, x, y);
  const AxisOperator op1 = axis_operator(pair.first, x, cfg);
  const AxisOperator op2 = axis_operator(pair.second, y, cfg);
  const auto delta1 = [&](double v) { return op1.apply([&](double u) { return f(u, v); }); };
  return op2.apply(delta1);
}

double mixed_delta(const BivariateFunction& f, const TimeScalePair& pair, double x, double y,
                   const QuadConfig& cfg) {
  if (f.exact_mixed) {
    require_rectangle_point(pair, x, y);
    return (*f.exact_mixed)(x, y, pair.first.sigma(x), pair.second.sigma(y));
  }
  return numeric_mixed_delta(f.eval, pair, x, y, cfg);
}

namespace {

double integrate_1d(const TimeScale& ts, const ScalarFn& h, double a, double b, const QuadConfig& cfg,
                    double abs_tol, double rel_floor) {
  const double lo = ts.snap(a);
  const double hi = ts.snap(b);
  if (lo > hi) {
    throw DomainError("delta integral needs a <= b, got a=" + shortest_real(a) + " b=" + shortest_real(b));
  }
  if (lo == hi) {
    return 0.0;
  }
  AdaptiveOptions opts;
  opts.order = cfg.quad_order;
  opts.abs_tol = abs_tol;
  opts.rel_floor = rel_floor;
  opts.max_depth = cfg.max_depth;

  const auto segs = ts.segments();
  double total = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    if (s.lo > hi) {
      break;
    }
    if (s.hi < lo) {
      continue;
    }
    const double l = std::max(s.lo, lo);
    const double r = std::min(s.hi, hi);
    if (r > l) {
      const QuadResult q = integrate_adaptive(h, l, r, opts);
      if (!q.converged) {
        throw QuadratureError("adaptive quadrature did not converge on [" + shortest_real(l) + "," +
                                  shortest_real(r) + "] (estimate " + shortest_real(q.value) + ", error bound " +
                                  shortest_real(q.error) + ")",
                              q.value, q.error);
      }
      total += q.value;
    }
    if (i + 1 < segs.size() && s.hi >= lo && s.hi < hi) {
      total += h(s.hi) * (segs[i + 1].lo - s.hi);
    }
  }
  return total;
}

}  // namespace

double delta_integral_1d(const TimeScale& ts, const ScalarFn& h, double a, double b, const QuadConfig& cfg) {
  return integrate_1d(ts, h, a, b, cfg, cfg.panel_tol, cfg.rel_floor);
}

double delta_integral_box(const TimeScalePair& pair, const BivariateFn& F, double x0, double x1, double y0,
                          double y1, const QuadConfig& cfg, IterationOrder order) {
  const bool inner_is_2 = order == IterationOrder::kInnerAxis2;
  const TimeScale& outer_ts = inner_is_2 ? pair.first : pair.second;
  const TimeScale& inner_ts = inner_is_2 ? pair.second : pair.first;
  const double o0 = inner_is_2 ? x0 : y0;
  const double o1 = inner_is_2 ? x1 : y1;
  const double i0 = inner_is_2 ? y0 : x0;
  const double i1 = inner_is_2 ? y1 : x1;
  if (outer_ts.snap(o0) == outer_ts.snap(o1) || inner_ts.snap(i0) == inner_ts.snap(i1)) {
    // Still validate the ordering of the other axis.
    integrate_1d(outer_ts, [](double) { return 0.0; }, o0, o1, cfg, cfg.panel_tol, cfg.rel_floor);
    integrate_1d(inner_ts, [](double) { return 0.0; }, i0, i1, cfg, cfg.panel_tol, cfg.rel_floor);
    return 0.0;
  }
  const double inner_tol = cfg.panel_tol;
  const double inner_floor = cfg.rel_floor;
  const auto inner = [&](double outer) {
    if (inner_is_2) {
      return integrate_1d(inner_ts, [&](double s) { return F(outer, s); }, i0, i1, cfg, inner_tol, inner_floor);
    }
    return integrate_1d(inner_ts, [&](double t) { return F(t, outer); }, i0, i1, cfg, inner_tol, inner_floor);
  };
  return integrate_1d(outer_ts, inner, o0, o1, cfg, cfg.panel_tol, cfg.rel_floor);
}

double delta_integral_2d(const TimeScalePair& pair, const BivariateFn& F, const Rectangle& rect,
                         const QuadConfig& cfg, IterationOrder order) {
  return delta_integral_box(pair, F, rect.a, rect.b, rect.c, rect.d, cfg, order);
}

std::vector<double> derivative_samples(const TimeScale& ts, double a, double b, int per_segment) {
  const double lo = ts.snap(a);
  const double hi = ts.snap(b);
  std::vector<double> out = ts.scattered_points(lo, hi);
  const int n = std::max(per_segment, 2);
  for (const Segment& piece : ts.dense_pieces(lo, hi)) {
    const double mid = 0.5 * (piece.lo + piece.hi);
    const double half = 0.5 * (piece.hi - piece.lo);
    out.push_back(piece.lo);
    for (int k = 1; k + 1 < n; ++k) {
      out.push_back(mid - half * std::cos(std::numbers::pi * k / (n - 1)));
    }
    out.push_back(piece.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() == hi && ts.right_scattered(hi)) {
    out.pop_back();
  }
  return out;
}

double sup_norm_mixed(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                      const QuadConfig& cfg) {
  const auto xs = derivative_samples(pair.first, rect.a, rect.b, cfg.supnorm_samples_per_segment);
  const auto ys = derivative_samples(pair.second, rect.c, rect.d, cfg.supnorm_samples_per_segment);
  double best = 0.0;
  for (double x : xs) {
    for (double y : ys) {
      best = std::max(best, std::abs(mixed_delta(f, pair, x, y, cfg)));
    }
  }
  return best;
}

double exact_mixed_discrepancy(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                               const QuadConfig& cfg) {
  if (!f.exact_mixed) {
    return 0.0;
  }
  const auto xs = derivative_samples(pair.first, rect.a, rect.b, cfg.supnorm_samples_per_segment);
  const auto ys = derivative_samples(pair.second, rect.c, rect.d, cfg.supnorm_samples_per_segment);
  double worst = 0.0;
  for (double x : xs) {
    for (double y : ys) {
      const double exact = mixed_delta(f, pair, x, y, cfg);
      const double numeric = numeric_mixed_delta(f.eval, pair, x, y, cfg);
      worst = std::max(worst, std::abs(numeric - exact) / std::max(1.0, std::abs(exact)));
    }
  }
  return worst;
}

}  // namespace chronoscale
