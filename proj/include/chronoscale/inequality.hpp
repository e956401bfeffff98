#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chronoscale/delta_calculus.hpp"
#include "chronoscale/timescale.hpp"

namespace chronoscale {

enum class TheoremId { kIdentity, kThm21, kThm22Stated, kThm22Derived, kThm31 };

/// "identity", "thm21", "thm22-stated", "thm22-derived", "thm31".
std::string to_string(TheoremId id);
/// Inverse of to_string; throws ConfigError on unknown names.
TheoremId parse_theorem_id(const std::string& name);

/// pass <=> lhs <= rhs + abs + rel * |rhs|.
struct InequalityTolerance {
  double abs = 1e-7;
  double rel = 1e-7;

  friend bool operator==(const InequalityTolerance&, const InequalityTolerance&) = default;
};

/// Identity residual bounds: pure-point rectangles vs rectangles touching dense segments.
struct IdentityTolerance {
  double pure_point = 1e-12;
  double dense = 1e-7;
};

/**
 * Lower corner used by P and Q. kJump anchors at (sigma1(a), sigma2(c)); the
 * identity then holds only for x >= sigma1(a), y >= sigma2(c). kEndpoint
 * anchors at (a, c), which makes the identity hold on the whole rectangle.
 */
enum class CornerAnchor { kJump, kEndpoint };

/// "jump" or "endpoint".
std::string to_string(CornerAnchor anchor);
/// Inverse of to_string; throws ConfigError on unknown names.
CornerAnchor parse_corner_anchor(const std::string& name);

struct VerifyOptions {
  QuadConfig quad;
  InequalityTolerance tolerance;
  IdentityTolerance identity;
  CornerAnchor anchor = CornerAnchor::kJump;
};

/// One theorem check with enough context to reproduce it.
struct InequalityResult {
  TheoremId theorem = TheoremId::kThm21;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  InequalityTolerance tolerance;
  std::string timescale1;
  std::string timescale2;
  Rectangle rect;
  std::string f;
  std::string g;
  std::string notes;

  friend bool operator==(const InequalityResult&, const InequalityResult&) = default;
};

/// Fills margin and pass from lhs, rhs and tol.
InequalityResult make_result(TheoremId theorem, double lhs, double rhs, const InequalityTolerance& tol);

/**
 * Boundary data of the Montgomery-type operator for one function on one
 * rectangle. The lower anchors are sigma1(a) and sigma2(c) (or a and c under
 * CornerAnchor::kEndpoint); the upper anchors are b and d.
 */
class MontgomeryFrame {
 public:
  MontgomeryFrame(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                  CornerAnchor anchor = CornerAnchor::kJump);

  /// P(f)(x, y) without domain checks.
  double p(double x, double y) const;

  double anchor_x() const { return anchor_x_; }
  double anchor_y() const { return anchor_y_; }
  /// f at the four anchor corners summed.
  double corner_sum() const { return corner_sum_; }

 private:
  const BivariateFunction* f_;
  Rectangle rect_;
  double anchor_x_;
  double anchor_y_;
  double corner_sum_;
};

/// Lower anchor of an axis: sigma(a) under kJump, a under kEndpoint.
double corner_anchor(const TimeScale& ts, double a, CornerAnchor anchor);

/// Throws DomainError when (x, y) is off the time scales or outside rect.
double p_operator(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect, double x, double y,
                  CornerAnchor anchor = CornerAnchor::kJump);

/// Signed sum of the four quadrant integrals of f^{Δ2Δ1} around (x, y).
/// Throws DomainError when x < sigma1(a) or y < sigma2(c).
double q_operator(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect, double x, double y,
                  const QuadConfig& cfg = {}, CornerAnchor anchor = CornerAnchor::kJump);

/// f(x, y) - P(f)(x, y) - Q(f)(x, y) / 4.
double identity_residual(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect, double x,
                         double y, const QuadConfig& cfg = {}, CornerAnchor anchor = CornerAnchor::kJump);

/// Axis abscissae for pointwise identity checks: segment endpoints and the
/// rectangle ends inside [a, b], plus 9 interior Chebyshev points per dense
/// piece, keeping only points at or past the axis anchor.
std::vector<double> evaluation_axis(const TimeScale& ts, double a, double b,
                                    CornerAnchor anchor = CornerAnchor::kJump);

/// True when neither axis of the rectangle touches a dense segment.
bool pure_point_rectangle(const TimeScalePair& pair, const Rectangle& rect);

/// Max |identity_residual| over the evaluation grid, reported as lhs against
/// the applicable identity tolerance as rhs.
InequalityResult verify_identity(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                                 const VerifyOptions& opts = {});

InequalityResult verify_thm21(const BivariateFunction& f, const BivariateFunction& g, const TimeScalePair& pair,
                              const Rectangle& rect, const VerifyOptions& opts = {});

enum class BoundVariant { kStated, kDerived };

InequalityResult verify_thm22(const BivariateFunction& f, const BivariateFunction& g, const TimeScalePair& pair,
                              const Rectangle& rect, BoundVariant variant, const VerifyOptions& opts = {});

InequalityResult verify_thm31(const BivariateFunction& f, const TimeScalePair& pair, const Rectangle& rect,
                              const VerifyOptions& opts = {});

/// Dispatch on theorem id; g is ignored by single-function checks.
InequalityResult verify(TheoremId theorem, const BivariateFunction& f, const BivariateFunction& g,
                        const TimeScalePair& pair, const Rectangle& rect, const VerifyOptions& opts = {});

/// Classical (T = R) forms of each check, evaluated with an independent
/// quadrature and classical derivatives. Both time scales must be single
/// dense intervals; throws MisuseError otherwise.
InequalityResult continuous_oracle(TheoremId theorem, const BivariateFunction& f,
                                   const std::optional<BivariateFunction>& g, const TimeScalePair& pair,
                                   const Rectangle& rect, const VerifyOptions& opts = {});

/// Discrete (T = Z) forms of each check on [0, k] x [0, r] by brute-force sums.
InequalityResult discrete_oracle(TheoremId theorem, const BivariateFunction& f,
                                 const std::optional<BivariateFunction>& g, int k, int r,
                                 const VerifyOptions& opts = {});

}  // namespace chronoscale
