#pragma once

#include <functional>
#include <span>
#include <vector>

namespace chronoscale {

/// Gauss–Legendre nodes/weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (order >= 2). Thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

struct AdaptiveOptions {
  int order = 16;
  /// Per-panel absolute acceptance threshold.
  double abs_tol = 1e-11;
  /// Relative floor: a panel is also accepted when its error <= rel_floor * |panel integral|.
  double rel_floor = 1e-12;
  int max_depth = 24;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

/**
 * Recursive-bisection Gauss–Legendre quadrature on [lo, hi].
 *
 * A panel is accepted when its two halves agree with the whole-panel rule to
 * within the tolerance; otherwise it is bisected. Panels that reach max_depth
 * (or the panel cap) are kept with converged = false, and the returned error
 * is the sum of the accepted two-level disagreements.
 */
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              const AdaptiveOptions& options);

}  // namespace chronoscale
