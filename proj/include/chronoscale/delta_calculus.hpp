#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chronoscale/timescale.hpp"

namespace chronoscale {

using ScalarFn = std::function<double(double)>;
using BivariateFn = std::function<double(double, double)>;
/// Closed-form mixed delta derivative f^{Δ2Δ1}(x, y) given sigma1(x), sigma2(y).
using MixedFn = std::function<double(double x, double y, double sigma_x, double sigma_y)>;

/// A smooth real function restricted to T1 x T2, optionally with its exact
/// mixed delta derivative.
struct BivariateFunction {
  std::string label;
  BivariateFn eval;
  std::optional<MixedFn> exact_mixed;
  std::string smoothness = "smooth-restriction";

  double operator()(double x, double y) const { return eval(x, y); }
};

/// Integration domain [a, b] x [c, d] with all corners on their time scales.
struct Rectangle {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double width() const { return b - a; }
  double height() const { return d - c; }
  double area() const { return (b - a) * (d - c); }
  bool contains(double x, double y) const;
  std::string descriptor() const;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Validates membership (snapping endpoints onto the time scales) and a < b, c < d.
Rectangle make_rectangle(const TimeScalePair& pair, double a, double b, double c, double d);

struct QuadConfig {
  int quad_order = 16;
  double panel_tol = 1e-11;
  int max_depth = 24;
  /// Upper bound on the finite-difference spacing used at right-dense points.
  double derivative_step_scale = 0.05;
  int supnorm_samples_per_segment = 17;
  /// Relative acceptance floor for adaptive quadrature.
  double rel_floor = 1e-12;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

/// Which axis the inner integral of an iterated double integral runs over.
enum class IterationOrder { kInnerAxis2, kInnerAxis1 };

double delta_partial(int axis, const BivariateFunction& f, const TimeScalePair& pair, double x, double y,
                     const QuadConfig& cfg = {});

/// f^{Δ2Δ1}(x, y): the exact form when present, otherwise numeric.
double mixed_delta(const BivariateFunction& f, const TimeScalePair& pair, double x, double y,
                   const QuadConfig& cfg = {});

/// Δ2 applied to (x, y) -> Δ1 f(x, y) using difference quotients at
/// right-scattered points and fixed-step 9-point stencils at right-dense ones.
double numeric_mixed_delta(const BivariateFn& f, const TimeScalePair& pair, double x, double y,
                           const QuadConfig& cfg = {});

/// Δ-integral of h over [a, b) on ts: jump terms h(t) mu(t) for right-scattered
/// t in [a, b) plus adaptive Gauss–Legendre over each dense piece.
double delta_integral_1d(const TimeScale& ts, const ScalarFn& h, double a, double b, const QuadConfig& cfg = {});

/// Iterated Δ-integral over [x0, x1] x [y0, y1]. Empty ranges (x0 == x1) give 0.
double delta_integral_box(const TimeScalePair& pair, const BivariateFn& F, double x0, double x1, double y0,
                          double y1, const QuadConfig& cfg = {},
                          IterationOrder order = IterationOrder::kInnerAxis2);

double delta_integral_2d(const TimeScalePair& pair, const BivariateFn& F, const Rectangle& rect,
                         const QuadConfig& cfg = {}, IterationOrder order = IterationOrder::kInnerAxis2);

/// Points of [a, b] used to sample derivatives: right-scattered points of
/// [a, b) plus `per_segment` Chebyshev–Lobatto points on each dense piece
/// (b itself is dropped when it is right-scattered).
std::vector<double> derivative_samples(const TimeScale& ts, double a, double b, int per_segment);

/// Sampled max |f^{Δ2Δ1}| over the rectangle; a lower estimate of the sup norm.
double sup_norm_mixed(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                      const QuadConfig& cfg = {});

/// Largest |numeric - exact| mixed derivative discrepancy over the sup-norm
/// sample set, scaled by max(1, |exact|). Returns 0 when f has no exact form.
double exact_mixed_discrepancy(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                               const QuadConfig& cfg = {});

}  // namespace chronoscale
