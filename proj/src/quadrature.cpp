#include "chronoscale/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "chronoscale/error.hpp"

namespace chronoscale {

namespace {

GaussLegendreRule compute_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (order % 2 == 1) {
    rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  }
  return rule;
}

double apply_rule(const GaussLegendreRule& rule, const std::function<double(double)>& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

constexpr std::size_t kMaxPanels = 1 << 15;

struct Panel {
  double lo;
  double hi;
  double whole;  // rule on [lo, hi]
  int depth;
};

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 2 || order > 512) {
    throw ConfigError("Gauss-Legendre order must be in [2, 512]");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<GaussLegendreRule>(compute_rule(order));
  }
  return *slot;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              const AdaptiveOptions& options) {
  QuadResult result;
  if (hi == lo) {
    return result;
  }
  const GaussLegendreRule& rule = gauss_legendre(options.order);
  const int per_rule = options.order;

  // Depth-first with the left half on top of the stack, so accepted panels
  // arrive (and are summed) in left-to-right order.
  std::vector<Panel> stack{{lo, hi, apply_rule(rule, f, lo, hi), 0}};
  result.evaluations += per_rule;
  std::size_t panels = 1;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const double left = apply_rule(rule, f, p.lo, mid);
    const double right = apply_rule(rule, f, mid, p.hi);
    result.evaluations += 2 * per_rule;
    const double refined = left + right;
    const double error = std::abs(refined - p.whole);
    const bool accepted = error <= std::max(options.abs_tol, options.rel_floor * std::abs(refined));
    const bool exhausted = p.depth >= options.max_depth || panels >= kMaxPanels;
    if (accepted || exhausted) {
      result.value += refined;
      result.error += error;
      result.converged = result.converged && accepted;
      continue;
    }
    panels += 1;
    stack.push_back({mid, p.hi, right, p.depth + 1});
    stack.push_back({p.lo, mid, left, p.depth + 1});
  }
  return result;
}

}  // namespace chronoscale
