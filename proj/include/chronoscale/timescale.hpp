#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chronoscale {

/// Absolute tolerance used for membership tests and endpoint matching.
inline constexpr double kMembershipTol = 1e-12;

/// Closed interval [lo, hi]; lo == hi is an isolated point.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;

  bool degenerate() const { return lo == hi; }
  double length() const { return hi - lo; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/**
 * A bounded time scale: a nonempty finite union of disjoint closed intervals.
 *
 * Segments are sorted and separated by strictly positive gaps; touching or
 * overlapping input intervals are merged on construction. Every point that
 * is the right end of a non-final segment is right-scattered, every other
 * point is right-dense (the maximum counts as right-dense with sigma = max).
 *
 * Immutable after construction.
 */
class TimeScale {
 public:
  /// Normalizes `raw` (sort + merge). Throws ConstructionError on bad input.
  explicit TimeScale(std::vector<Segment> raw, std::string descriptor = {});

  std::span<const Segment> segments() const { return segments_; }
  std::size_t segment_count() const { return segments_.size(); }
  double min() const { return segments_.front().lo; }
  double max() const { return segments_.back().hi; }

  /// Grammar text this time scale was built from ("R[0,1]", "U:(0,1),(2,3)" ...).
  const std::string& descriptor() const { return descriptor_; }

  bool contains(double t) const;

  /// Segment index holding t together with t snapped onto a stored endpoint
  /// when within kMembershipTol of one. Throws DomainError if t is not a member.
  struct Location {
    std::size_t segment;
    double t;
  };
  Location locate(double t) const;

  /// Snapped member value of t; throws DomainError if not a member.
  double snap(double t) const { return locate(t).t; }

  double sigma(double t) const;
  double rho(double t) const;
  double graininess(double t) const;

  bool right_scattered(double t) const { return graininess(t) > 0.0; }

  /// All t in [a, b) with positive graininess, ascending.
  std::vector<double> scattered_points(double a, double b) const;

  /// Dense (positive-length) pieces of [a, b] intersected with the segments.
  std::vector<Segment> dense_pieces(double a, double b) const;

  /// Total length of the dense segments.
  double dense_length() const;

  friend bool operator==(const TimeScale& x, const TimeScale& y) {
    return x.segments_ == y.segments_;
  }

 private:
  std::vector<Segment> segments_;
  std::string descriptor_;
};

/// Normalizing constructor from raw (lo, hi) pairs.
TimeScale build_timescale(const std::vector<std::pair<double, double>>& raw_segments);

/// [a, b] as a single dense segment.
TimeScale reals(double a, double b);
/// Integers a, a+1, ..., b as isolated points.
TimeScale integers(double a, double b);
/// a, a+h, ..., b as isolated points; (b - a) must be a multiple of h.
TimeScale h_grid(double a, double b, double h);
/// q^0, q^1, ..., q^n as isolated points.
TimeScale q_grid(double q, int n);

struct RandomTimeScaleParams {
  int max_segments = 4;
  double span = 4.0;
  double min_gap = 0.25;
};

/// Seeded generator mixing dense segments and isolated points. All stored
/// endpoints are multiples of 1/16 so jump sizes are exact binary fractions.
TimeScale random_timescale(std::uint64_t seed, RandomTimeScaleParams params = {});

/// Parse the time-scale mini-grammar:
///   R[a,b] | Z[a,b] | hZ[a,b;h] | q[n;q] | U:(l1,h1),(l2,h2),... |
///   rand:seed=S,segs=K,span=W
TimeScale parse_timescale(const std::string& text);

/// Pair of time scales spanning the product domain.
struct TimeScalePair {
  TimeScale first;
  TimeScale second;

  const TimeScale& axis(int which) const { return which == 1 ? first : second; }
  std::string descriptor() const { return first.descriptor() + " x " + second.descriptor(); }
};

}  // namespace chronoscale
