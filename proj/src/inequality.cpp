#include "chronoscale/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/differentiation/finite_difference.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chronoscale/error.hpp"

namespace chronoscale {

namespace {

constexpr int kInteriorGridPoints = 9;

double derived_exponent(BoundVariant variant) { return variant == BoundVariant::kStated ? 2.0 : 3.0; }

TheoremId thm22_id(BoundVariant variant) {
  return variant == BoundVariant::kStated ? TheoremId::kThm22Stated : TheoremId::kThm22Derived;
}

const char* thm22_note(BoundVariant variant) {
  return variant == BoundVariant::kStated ? "stated bound" : "derived bound";
}

void stamp(InequalityResult& r, const TimeScalePair& pair, const Rectangle& rect, const BivariateFunction& f,
           const BivariateFunction* g) {
  r.timescale1 = pair.first.descriptor();
  r.timescale2 = pair.second.descriptor();
  r.rect = rect;
  r.f = f.label;
  r.g = g != nullptr ? g->label : "";
}

void require_point(const TimeScalePair& pair, const Rectangle& rect, double& x, double& y) {
  if (!pair.first.contains(x) || !pair.second.contains(y)) {
    throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) + ") is not on the time scales");
  }
  x = pair.first.snap(x);
  y = pair.second.snap(y);
  if (!rect.contains(x, y)) {
    throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) + ") lies outside the rectangle " +
                      rect.descriptor());
  }
}

/// Chebyshev–Lobatto abscissae on [lo, hi] including both ends.
std::vector<double> lobatto(double lo, double hi, int n) {
  std::vector<double> out;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  out.push_back(lo);
  for (int k = 1; k + 1 < n; ++k) {
    out.push_back(mid - half * std::cos(std::numbers::pi * k / (n - 1)));
  }
  out.push_back(hi);
  return out;
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kIdentity:
      return "identity";
    case TheoremId::kThm21:
      return "thm21";
    case TheoremId::kThm22Stated:
      return "thm22-stated";
    case TheoremId::kThm22Derived:
      return "thm22-derived";
    case TheoremId::kThm31:
      return "thm31";
  }
  return "?";
}

TheoremId parse_theorem_id(const std::string& name) {
  for (TheoremId id : {TheoremId::kIdentity, TheoremId::kThm21, TheoremId::kThm22Stated, TheoremId::kThm22Derived,
                       TheoremId::kThm31}) {
    if (to_string(id) == name) {
      return id;
    }
  }
  throw ConfigError("unknown theorem '" + name +
                    "' (expected identity, thm21, thm22-stated, thm22-derived or thm31)");
}

std::string to_string(CornerAnchor anchor) { return anchor == CornerAnchor::kJump ? "jump" : "endpoint"; }

CornerAnchor parse_corner_anchor(const std::string& name) {
  if (name == "jump") {
    return CornerAnchor::kJump;
  }
  if (name == "endpoint") {
    return CornerAnchor::kEndpoint;
  }
  throw ConfigError("unknown corner anchor '" + name + "' (expected jump or endpoint)");
}

double corner_anchor(const TimeScale& ts, double a, CornerAnchor anchor) {
  return anchor == CornerAnchor::kJump ? ts.sigma(a) : ts.snap(a);
}

InequalityResult make_result(TheoremId theorem, double lhs, double rhs, const InequalityTolerance& tol) {
  InequalityResult r;
  r.theorem = theorem;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tol;
  r.pass = lhs <= rhs + tol.abs + tol.rel * std::abs(rhs);
  return r;
}

MontgomeryFrame::MontgomeryFrame(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                                 CornerAnchor anchor)
    : f_(&f),
      rect_(rect),
      anchor_x_(corner_anchor(pair.first, rect.a, anchor)),
      anchor_y_(corner_anchor(pair.second, rect.c, anchor)) {
  corner_sum_ = f(anchor_x_, anchor_y_) + f(anchor_x_, rect.d) + f(rect.b, anchor_y_) + f(rect.b, rect.d);
}

double MontgomeryFrame::p(double x, double y) const {
  const BivariateFunction& f = *f_;
  return 0.5 * (f(anchor_x_, y) + f(x, anchor_y_) + f(x, rect_.d) + f(rect_.b, y)) - 0.25 * corner_sum_;
}

double p_operator(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect, double x, double y,
                  CornerAnchor anchor) {
  require_point(pair, rect, x, y);
  return MontgomeryFrame(f, pair, rect, anchor).p(x, y);
}

double q_operator(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect, double x, double y,
                  const QuadConfig& cfg, CornerAnchor anchor) {
  require_point(pair, rect, x, y);
  const double ax = corner_anchor(pair.first, rect.a, anchor);
  const double ay = corner_anchor(pair.second, rect.c, anchor);
  if (x < ax || y < ay) {
    throw DomainError("evaluation point precedes first jump");
  }
  const BivariateFn mixed = [&](double t, double s) { return mixed_delta(f, pair, t, s, cfg); };
  const double i1 = delta_integral_box(pair, mixed, ax, x, ay, y, cfg);
  const double i2 = delta_integral_box(pair, mixed, ax, x, y, rect.d, cfg);
  const double i3 = delta_integral_box(pair, mixed, x, rect.b, ay, y, cfg);
  const double i4 = delta_integral_box(pair, mixed, x, rect.b, y, rect.d, cfg);
  return i1 - i2 - i3 + i4;
}

double identity_residual(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect, double x,
                         double y, const QuadConfig& cfg, CornerAnchor anchor) {
  const double q = q_operator(f, pair, rect, x, y, cfg, anchor);
  require_point(pair, rect, x, y);
  return f(x, y) - MontgomeryFrame(f, pair, rect, anchor).p(x, y) - 0.25 * q;
}

std::vector<double> evaluation_axis(const TimeScale& ts, double a, double b, CornerAnchor anchor) {
  a = ts.snap(a);
  b = ts.snap(b);
  std::vector<double> out{a, b};
  for (const Segment& s : ts.segments()) {
    for (double t : {s.lo, s.hi}) {
      if (t >= a && t <= b) {
        out.push_back(t);
      }
    }
  }
  for (const Segment& piece : ts.dense_pieces(a, b)) {
    const std::vector<double> nodes = lobatto(piece.lo, piece.hi, kInteriorGridPoints + 2);
    out.insert(out.end(), nodes.begin() + 1, nodes.end() - 1);
  }
  const double lowest = corner_anchor(ts, a, anchor);
  std::erase_if(out, [&](double t) { return t < lowest; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool pure_point_rectangle(const TimeScalePair& pair, const Rectangle& rect) {
  return pair.first.dense_pieces(rect.a, rect.b).empty() && pair.second.dense_pieces(rect.c, rect.d).empty();
}

InequalityResult verify_identity(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                                 const VerifyOptions& opts) {
  const bool pure = pure_point_rectangle(pair, rect);
  const double tol = pure ? opts.identity.pure_point : opts.identity.dense;
  const auto xs = evaluation_axis(pair.first, rect.a, rect.b, opts.anchor);
  const auto ys = evaluation_axis(pair.second, rect.c, rect.d, opts.anchor);
  double worst = 0.0;
  for (double x : xs) {
    for (double y : ys) {
      worst = std::max(worst, std::abs(identity_residual(f, pair, rect, x, y, opts.quad, opts.anchor)));
    }
  }
  InequalityResult r = make_result(TheoremId::kIdentity, worst, 0.0, InequalityTolerance{tol, 0.0});
  stamp(r, pair, rect, f, nullptr);
  r.notes = std::string(pure ? "pure-point" : "dense") + " grid " + std::to_string(xs.size()) + "x" +
            std::to_string(ys.size());
  return r;
}

InequalityResult verify_thm21(const BivariateFunction& f, const BivariateFunction& g, const TimeScalePair& pair,
                              const Rectangle& rect, const VerifyOptions& opts) {
  const MontgomeryFrame pf(f, pair, rect, opts.anchor);
  const MontgomeryFrame pg(g, pair, rect, opts.anchor);
  const double lhs_integral = delta_integral_2d(
      pair,
      [&](double x, double y) {
        const double fv = f(x, y);
        const double gv = g(x, y);
        return fv * gv - 0.5 * (pf.p(x, y) * gv + pg.p(x, y) * fv);
      },
      rect, opts.quad);
  const double nf = sup_norm_mixed(f, pair, rect, opts.quad);
  const double ng = sup_norm_mixed(g, pair, rect, opts.quad);
  const double weighted = delta_integral_2d(
      pair, [&](double x, double y) { return std::abs(g(x, y)) * nf + std::abs(f(x, y)) * ng; }, rect, opts.quad);
  InequalityResult r = make_result(TheoremId::kThm21, std::abs(lhs_integral), 0.125 * rect.area() * weighted,
                                   opts.tolerance);
  stamp(r, pair, rect, f, &g);
  return r;
}

InequalityResult verify_thm22(const BivariateFunction& f, const BivariateFunction& g, const TimeScalePair& pair,
                              const Rectangle& rect, BoundVariant variant, const VerifyOptions& opts) {
  const MontgomeryFrame pf(f, pair, rect, opts.anchor);
  const MontgomeryFrame pg(g, pair, rect, opts.anchor);
  const double lhs_integral = delta_integral_2d(
      pair, [&](double x, double y) { return (f(x, y) - pf.p(x, y)) * (g(x, y) - pg.p(x, y)); }, rect, opts.quad);
  const double nf = sup_norm_mixed(f, pair, rect, opts.quad);
  const double ng = sup_norm_mixed(g, pair, rect, opts.quad);
  const double rhs = std::pow(rect.area(), derived_exponent(variant)) / 16.0 * nf * ng;
  InequalityResult r = make_result(thm22_id(variant), std::abs(lhs_integral), rhs, opts.tolerance);
  stamp(r, pair, rect, f, &g);
  r.notes = thm22_note(variant);
  return r;
}

InequalityResult verify_thm31(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                              const VerifyOptions& opts) {
  const MontgomeryFrame frame(f, pair, rect, opts.anchor);
  const double ax = frame.anchor_x();
  const double ay = frame.anchor_y();
  const double whole = delta_integral_2d(pair, f.eval, rect, opts.quad);
  const double rows = delta_integral_1d(
      pair.first, [&](double t) { return f(t, ay) + f(t, rect.d); }, rect.a, rect.b, opts.quad);
  const double cols = delta_integral_1d(
      pair.second, [&](double s) { return f(ax, s) + f(rect.b, s); }, rect.c, rect.d, opts.quad);
  const double lhs = whole - 0.5 * (rect.height() * rows + rect.width() * cols) +
                     0.25 * rect.area() * frame.corner_sum();
  const double abs_mixed = delta_integral_2d(
      pair, [&](double t, double s) { return std::abs(mixed_delta(f, pair, t, s, opts.quad)); }, rect, opts.quad);
  InequalityResult r = make_result(TheoremId::kThm31, std::abs(lhs), 0.25 * rect.area() * abs_mixed, opts.tolerance);
  stamp(r, pair, rect, f, nullptr);
  return r;
}

InequalityResult verify(TheoremId theorem, const BivariateFunction& f, const BivariateFunction& g,
                        const TimeScalePair& pair, const Rectangle& rect, const VerifyOptions& opts) {
  switch (theorem) {
    case TheoremId::kIdentity:
      return verify_identity(f, pair, rect, opts);
    case TheoremId::kThm21:
      return verify_thm21(f, g, pair, rect, opts);
    case TheoremId::kThm22Stated:
      return verify_thm22(f, g, pair, rect, BoundVariant::kStated, opts);
    case TheoremId::kThm22Derived:
      return verify_thm22(f, g, pair, rect, BoundVariant::kDerived, opts);
    case TheoremId::kThm31:
      return verify_thm31(f, pair, rect, opts);
  }
  throw MisuseError("unknown theorem id");
}

// ---------------------------------------------------------------------------
// Continuous oracle: sigma is the identity, integrals are classical.

namespace {

constexpr double kOracleRelTol = 1e-11;
constexpr double kOracleAbsTol = 1e-12;
constexpr int kOracleDepth = 14;

// Adaptive Gauss-Kronrod 31 on single Boost panels. A panel is accepted when
// its Kronrod-Gauss gap is below max(abs * width, rel * L1), so integrands that
// vanish up to rounding do not force refinement to the depth limit.
double gk_panel(const std::function<double(double)>& h, double lo, double hi, int depth) {
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(h, lo, hi, 0, 0.0, &error, &l1);
  if (depth == 0 || error <= std::max(kOracleAbsTol * (hi - lo), kOracleRelTol * l1)) {
    return value;
  }
  const double mid = 0.5 * (lo + hi);
  return gk_panel(h, lo, mid, depth - 1) + gk_panel(h, mid, hi, depth - 1);
}

double gk(const std::function<double(double)>& h, double lo, double hi) {
  if (lo == hi) {
    return 0.0;
  }
  return gk_panel(h, lo, hi, kOracleDepth);
}

double gk2(const BivariateFn& F, double x0, double x1, double y0, double y1) {
  return gk([&](double x) { return gk([&](double y) { return F(x, y); }, y0, y1); }, x0, x1);
}

double classical_mixed(const BivariateFunction& f, double x, double y) {
  if (f.exact_mixed) {
    return (*f.exact_mixed)(x, y, x, y);
  }
  using boost::math::differentiation::finite_difference_derivative;
  const auto d1 = [&](double yy) {
    const auto along_x = [&](double xx) { return f(xx, yy); };
    return finite_difference_derivative<decltype(along_x), double, 8>(along_x, x);
  };
  return finite_difference_derivative<decltype(d1), double, 8>(d1, y);
}

struct ClassicalFrame {
  const BivariateFunction& f;
  Rectangle rect;
  double corners;

  ClassicalFrame(const BivariateFunction& fn, const Rectangle& r)
      : f(fn), rect(r), corners(fn(r.a, r.c) + fn(r.a, r.d) + fn(r.b, r.c) + fn(r.b, r.d)) {}

  double p(double x, double y) const {
    return 0.5 * (f(x, rect.c) + f(x, rect.d) + f(rect.a, y) + f(rect.b, y)) - 0.25 * corners;
  }
};

double classical_sup(const BivariateFunction& f, const Rectangle& rect, int per_segment) {
  double best = 0.0;
  for (double x : lobatto(rect.a, rect.b, per_segment)) {
    for (double y : lobatto(rect.c, rect.d, per_segment)) {
      best = std::max(best, std::abs(classical_mixed(f, x, y)));
    }
  }
  return best;
}

const BivariateFunction& require_g(const std::optional<BivariateFunction>& g, TheoremId theorem) {
  if (!g) {
    throw MisuseError(to_string(theorem) + " needs a second function g");
  }
  return *g;
}

}  // namespace

InequalityResult continuous_oracle(TheoremId theorem, const BivariateFunction& f,
                                   const std::optional<BivariateFunction>& g, const TimeScalePair& pair,
                                   const Rectangle& rect, const VerifyOptions& opts) {
  for (const TimeScale* ts : {&pair.first, &pair.second}) {
    if (ts->segment_count() != 1 || ts->segments()[0].degenerate()) {
      throw MisuseError("continuous oracle needs single dense intervals, got " + ts->descriptor());
    }
  }
  const int samples = opts.quad.supnorm_samples_per_segment;
  const ClassicalFrame pf(f, rect);
  InequalityResult r;
  switch (theorem) {
    case TheoremId::kIdentity: {
      const BivariateFn mixed = [&](double t, double s) { return classical_mixed(f, t, s); };
      double worst = 0.0;
      for (double x : evaluation_axis(pair.first, rect.a, rect.b)) {
        for (double y : evaluation_axis(pair.second, rect.c, rect.d)) {
          const double q = gk2(mixed, rect.a, x, rect.c, y) - gk2(mixed, rect.a, x, y, rect.d) -
                           gk2(mixed, x, rect.b, rect.c, y) + gk2(mixed, x, rect.b, y, rect.d);
          worst = std::max(worst, std::abs(f(x, y) - pf.p(x, y) - 0.25 * q));
        }
      }
      r = make_result(theorem, worst, 0.0, InequalityTolerance{opts.identity.dense, 0.0});
      break;
    }
    case TheoremId::kThm21: {
      const BivariateFunction& gg = require_g(g, theorem);
      const ClassicalFrame pg(gg, rect);
      const double lhs = gk2(
          [&](double x, double y) {
            const double fv = f(x, y);
            const double gv = gg(x, y);
            return fv * gv - 0.5 * (pf.p(x, y) * gv + pg.p(x, y) * fv);
          },
          rect.a, rect.b, rect.c, rect.d);
      const double nf = classical_sup(f, rect, samples);
      const double ng = classical_sup(gg, rect, samples);
      const double weighted = gk2([&](double x, double y) { return std::abs(gg(x, y)) * nf + std::abs(f(x, y)) * ng; },
                                  rect.a, rect.b, rect.c, rect.d);
      r = make_result(theorem, std::abs(lhs), 0.125 * rect.area() * weighted, opts.tolerance);
      break;
    }
    case TheoremId::kThm22Stated:
    case TheoremId::kThm22Derived: {
      const BivariateFunction& gg = require_g(g, theorem);
      const ClassicalFrame pg(gg, rect);
      const double lhs = gk2([&](double x, double y) { return (f(x, y) - pf.p(x, y)) * (gg(x, y) - pg.p(x, y)); },
                             rect.a, rect.b, rect.c, rect.d);
      const BoundVariant variant = theorem == TheoremId::kThm22Stated ? BoundVariant::kStated : BoundVariant::kDerived;
      const double rhs =
          std::pow(rect.area(), derived_exponent(variant)) / 16.0 * classical_sup(f, rect, samples) *
          classical_sup(gg, rect, samples);
      r = make_result(theorem, std::abs(lhs), rhs, opts.tolerance);
      r.notes = thm22_note(variant);
      break;
    }
    case TheoremId::kThm31: {
      const double whole = gk2(f.eval, rect.a, rect.b, rect.c, rect.d);
      const double rows = gk([&](double t) { return f(t, rect.c) + f(t, rect.d); }, rect.a, rect.b);
      const double cols = gk([&](double s) { return f(rect.a, s) + f(rect.b, s); }, rect.c, rect.d);
      const double lhs =
          whole - 0.5 * (rect.height() * rows + rect.width() * cols) + 0.25 * rect.area() * pf.corners;
      const double abs_mixed =
          gk2([&](double t, double s) { return std::abs(classical_mixed(f, t, s)); }, rect.a, rect.b, rect.c, rect.d);
      r = make_result(theorem, std::abs(lhs), 0.25 * rect.area() * abs_mixed, opts.tolerance);
      break;
    }
  }
  stamp(r, pair, rect, f, g ? &*g : nullptr);
  if (r.notes.empty()) {
    r.notes = "continuous oracle";
  } else {
    r.notes += ", continuous oracle";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Discrete oracle on Z with a = c = 0, b = k, d = r. The sums run over the
// grid points of [0, k) x [0, r).

InequalityResult discrete_oracle(TheoremId theorem, const BivariateFunction& f,
                                 const std::optional<BivariateFunction>& g, int k, int r,
                                 const VerifyOptions& opts) {
  if (k < 1 || r < 1) {
    throw MisuseError("discrete oracle needs k >= 1 and r >= 1");
  }
  const double kb = k;
  const double rd = r;
  // Lower anchor: sigma(0) = 1 for the jump reading, 0 for the endpoint reading.
  const int lo = opts.anchor == CornerAnchor::kJump ? 1 : 0;
  const double al = lo;
  const auto diff = [](const BivariateFunction& h, double s, double t) {
    return (h(s + 1, t + 1) - h(s, t + 1)) - (h(s + 1, t) - h(s, t));
  };
  const auto p_of = [&](const BivariateFunction& h, double x, double y) {
    const double corners = h(al, al) + h(al, rd) + h(kb, al) + h(kb, rd);
    return 0.5 * (h(al, y) + h(x, al) + h(x, rd) + h(kb, y)) - 0.25 * corners;
  };
  const auto sum2 = [&](int s0, int s1, int t0, int t1, const auto& term) {
    double total = 0.0;
    for (int s = s0; s < s1; ++s) {
      double inner = 0.0;
      for (int t = t0; t < t1; ++t) {
        inner += term(static_cast<double>(s), static_cast<double>(t));
      }
      total += inner;
    }
    return total;
  };
  const auto sup = [&](const BivariateFunction& h) {
    double best = 0.0;
    for (int s = 0; s < k; ++s) {
      for (int t = 0; t < r; ++t) {
        best = std::max(best, std::abs(diff(h, s, t)));
      }
    }
    return best;
  };
  const double area = kb * rd;

  InequalityResult res;
  switch (theorem) {
    case TheoremId::kIdentity: {
      const auto d = [&](double s, double t) { return diff(f, s, t); };
      double worst = 0.0;
      for (int x = lo; x <= k; ++x) {
        for (int y = lo; y <= r; ++y) {
          const double q = sum2(lo, x, lo, y, d) - sum2(lo, x, y, r, d) - sum2(x, k, lo, y, d) + sum2(x, k, y, r, d);
          worst = std::max(worst, std::abs(f(x, y) - p_of(f, x, y) - 0.25 * q));
        }
      }
      res = make_result(theorem, worst, 0.0, InequalityTolerance{opts.identity.pure_point, 0.0});
      break;
    }
    case TheoremId::kThm21: {
      const BivariateFunction& gg = require_g(g, theorem);
      const double lhs = sum2(0, k, 0, r, [&](double x, double y) {
        const double fv = f(x, y);
        const double gv = gg(x, y);
        return fv * gv - 0.5 * (p_of(f, x, y) * gv + p_of(gg, x, y) * fv);
      });
      const double nf = sup(f);
      const double ng = sup(gg);
      const double weighted =
          sum2(0, k, 0, r, [&](double x, double y) { return std::abs(gg(x, y)) * nf + std::abs(f(x, y)) * ng; });
      res = make_result(theorem, std::abs(lhs), 0.125 * area * weighted, opts.tolerance);
      break;
    }
    case TheoremId::kThm22Stated:
    case TheoremId::kThm22Derived: {
      const BivariateFunction& gg = require_g(g, theorem);
      const double lhs = sum2(0, k, 0, r, [&](double x, double y) {
        return (f(x, y) - p_of(f, x, y)) * (gg(x, y) - p_of(gg, x, y));
      });
      const BoundVariant variant = theorem == TheoremId::kThm22Stated ? BoundVariant::kStated : BoundVariant::kDerived;
      const double rhs = std::pow(area, derived_exponent(variant)) / 16.0 * sup(f) * sup(gg);
      res = make_result(theorem, std::abs(lhs), rhs, opts.tolerance);
      res.notes = thm22_note(variant);
      break;
    }
    case TheoremId::kThm31: {
      const double whole = sum2(0, k, 0, r, [&](double x, double y) { return f(x, y); });
      double rows = 0.0;
      for (int t = 0; t < k; ++t) {
        rows += f(t, al) + f(t, rd);
      }
      double cols = 0.0;
      for (int s = 0; s < r; ++s) {
        cols += f(al, s) + f(kb, s);
      }
      const double corners = f(al, al) + f(al, rd) + f(kb, al) + f(kb, rd);
      const double lhs = whole - 0.5 * (rd * rows + kb * cols) + 0.25 * area * corners;
      const double abs_mixed = sum2(0, k, 0, r, [&](double s, double t) { return std::abs(diff(f, s, t)); });
      res = make_result(theorem, std::abs(lhs), 0.25 * area * abs_mixed, opts.tolerance);
      break;
    }
  }
  res.timescale1 = "Z[0," + std::to_string(k) + "]";
  res.timescale2 = "Z[0," + std::to_string(r) + "]";
  res.rect = Rectangle{0.0, kb, 0.0, rd};
  res.f = f.label;
  res.g = g ? g->label : "";
  res.notes = res.notes.empty() ? "discrete oracle" : res.notes + ", discrete oracle";
  return res;
}

}  // namespace chronoscale
