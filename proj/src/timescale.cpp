#include "chronoscale/timescale.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <random>

#include "chronoscale/error.hpp"
#include "chronoscale/format.hpp"

namespace chronoscale {

namespace {

std::string union_descriptor(const std::vector<Segment>& segments) {
  std::string out = "U:";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += '(' + shortest_real(segments[i].lo) + ',' + shortest_real(segments[i].hi) + ')';
  }
  return out;
}

std::vector<Segment> normalize(std::vector<Segment> raw) {
  if (raw.empty()) {
    throw ConstructionError("time scale needs at least one segment");
  }
  for (const auto& s : raw) {
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) {
      throw ConstructionError("time scale segment has a non-finite endpoint");
    }
    if (s.lo > s.hi) {
      throw ConstructionError("time scale segment (" + shortest_real(s.lo) + "," +
                              shortest_real(s.hi) + ") has lo > hi");
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Segment& x, const Segment& y) { return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi); });
  std::vector<Segment> merged;
  merged.reserve(raw.size());
  for (const auto& s : raw) {
    if (!merged.empty() && s.lo - merged.back().hi <= kMembershipTol) {
      merged.back().hi = std::max(merged.back().hi, s.hi);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

}  // namespace

TimeScale::TimeScale(std::vector<Segment> raw, std::string descriptor)
    : segments_(normalize(std::move(raw))), descriptor_(std::move(descriptor)) {
  if (descriptor_.empty()) {
    descriptor_ = union_descriptor(segments_);
  }
}

bool TimeScale::contains(double t) const {
  if (!std::isfinite(t)) {
    return false;
  }
  auto it = std::lower_bound(segments_.begin(), segments_.end(), t,
                             [](const Segment& s, double v) { return s.hi + kMembershipTol < v; });
  return it != segments_.end() && it->lo - kMembershipTol <= t;
}

TimeScale::Location TimeScale::locate(double t) const {
  auto it = std::lower_bound(segments_.begin(), segments_.end(), t,
                             [](const Segment& s, double v) { return s.hi + kMembershipTol < v; });
  if (!std::isfinite(t) || it == segments_.end() || it->lo - kMembershipTol > t) {
    throw DomainError("point " + shortest_real(t) + " is not in time scale " + descriptor_);
  }
  double snapped = t;
  if (std::abs(t - it->lo) <= kMembershipTol) {
    snapped = it->lo;
  } else if (std::abs(t - it->hi) <= kMembershipTol) {
    snapped = it->hi;
  }
  return {static_cast<std::size_t>(it - segments_.begin()), snapped};
}

double TimeScale::sigma(double t) const {
  const auto loc = locate(t);
  const auto& seg = segments_[loc.segment];
  if (loc.t < seg.hi) {
    return loc.t;
  }
  if (loc.segment + 1 < segments_.size()) {
    return segments_[loc.segment + 1].lo;
  }
  return seg.hi;
}

double TimeScale::rho(double t) const {
  const auto loc = locate(t);
  const auto& seg = segments_[loc.segment];
  if (loc.t > seg.lo) {
    return loc.t;
  }
  if (loc.segment > 0) {
    return segments_[loc.segment - 1].hi;
  }
  return seg.lo;
}

double TimeScale::graininess(double t) const {
  const auto loc = locate(t);
  return sigma(loc.t) - loc.t;
}

std::vector<double> TimeScale::scattered_points(double a, double b) const {
  const double lo = snap(a);
  const double hi = snap(b);
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const double t = segments_[i].hi;
    if (t >= lo && t < hi) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<Segment> TimeScale::dense_pieces(double a, double b) const {
  const double lo = snap(a);
  const double hi = snap(b);
  std::vector<Segment> out;
  for (const auto& s : segments_) {
    const double l = std::max(s.lo, lo);
    const double h = std::min(s.hi, hi);
    if (h > l) {
      out.push_back({l, h});
    }
  }
  return out;
}

double TimeScale::dense_length() const {
  double total = 0.0;
  for (const auto& s : segments_) {
    total += s.length();
  }
  return total;
}

TimeScale build_timescale(const std::vector<std::pair<double, double>>& raw_segments) {
  std::vector<Segment> segs;
  segs.reserve(raw_segments.size());
  for (const auto& [lo, hi] : raw_segments) {
    segs.push_back({lo, hi});
  }
  return TimeScale(std::move(segs));
}

TimeScale reals(double a, double b) {
  if (!(a < b)) {
    throw ConstructionError("reals(a,b) needs a < b");
  }
  return TimeScale({{a, b}}, "R[" + shortest_real(a) + "," + shortest_real(b) + "]");
}

namespace {

std::vector<Segment> grid_points(double a, double b, double h) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(h)) {
    throw ConstructionError("grid parameters must be finite");
  }
  if (!(a < b)) {
    throw ConstructionError("grid needs a < b");
  }
  if (!(h > 0.0)) {
    throw ConstructionError("grid step must be positive");
  }
  const double steps = (b - a) / h;
  const double n = std::round(steps);
  if (std::abs(n * h - (b - a)) > 1e-12 || n < 1.0) {
    throw ConstructionError("grid step mismatch: (" + shortest_real(b) + " - " + shortest_real(a) +
                            ") is not a multiple of " + shortest_real(h));
  }
  if (n > 1e6) {
    throw ConstructionError("grid has too many points");
  }
  const auto count = static_cast<long>(n);
  std::vector<Segment> pts;
  pts.reserve(static_cast<std::size_t>(count) + 1);
  for (long k = 0; k < count; ++k) {
    const double t = a + static_cast<double>(k) * h;
    pts.push_back({t, t});
  }
  pts.push_back({b, b});
  return pts;
}

}  // namespace

TimeScale integers(double a, double b) {
  if (std::abs(a - std::round(a)) > 1e-12 || std::abs(b - std::round(b)) > 1e-12) {
    throw ConstructionError("integers(a,b) needs integer endpoints");
  }
  const double ra = std::round(a);
  const double rb = std::round(b);
  return TimeScale(grid_points(ra, rb, 1.0), "Z[" + shortest_real(ra) + "," + shortest_real(rb) + "]");
}

TimeScale h_grid(double a, double b, double h) {
  return TimeScale(grid_points(a, b, h),
                   "hZ[" + shortest_real(a) + "," + shortest_real(b) + ";" + shortest_real(h) + "]");
}

TimeScale q_grid(double q, int n) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw ConstructionError("q_grid needs q > 1");
  }
  if (n < 1 || n > 1000) {
    throw ConstructionError("q_grid needs 1 <= n <= 1000");
  }
  std::vector<Segment> pts;
  double t = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (!std::isfinite(t)) {
      throw ConstructionError("q_grid overflows");
    }
    pts.push_back({t, t});
    t *= q;
  }
  return TimeScale(std::move(pts), "q[" + std::to_string(n) + ";" + shortest_real(q) + "]");
}

TimeScale random_timescale(std::uint64_t seed, RandomTimeScaleParams params) {
  constexpr double kQuantum = 1.0 / 16.0;
  const auto quantize = [](double v) { return std::floor(v * 16.0) / 16.0; };

  const int max_segments = std::clamp(params.max_segments, 1, 32);
  const double span = std::isfinite(params.span) ? std::clamp(params.span, 0.5, 256.0) : 4.0;
  double min_gap = std::isfinite(params.min_gap) ? std::max(params.min_gap, kQuantum) : 0.25;

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  int slots = 1;
  if (max_segments > 1) {
    slots = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_segments - 1));
  }
  // Every slot must hold at least one quantum plus the trailing gap.
  while (slots > 1 && span / slots < min_gap + kQuantum) {
    --slots;
  }
  min_gap = std::min(min_gap, span / slots);

  std::vector<Segment> segs;
  for (int i = 0; i < slots; ++i) {
    const double slot_lo = quantize(i * span / slots);
    double slot_hi = i + 1 == slots ? quantize(span) : quantize((i + 1) * span / slots) - quantize(min_gap);
    if (slots == 1) {
      slot_hi = std::max(slot_hi, slot_lo + kQuantum);
    }
    const double room = std::max(0.0, slot_hi - slot_lo);
    const bool dense = slots == 1 || uniform() < 0.5;
    if (dense && room >= kQuantum) {
      const double lo = slot_lo + quantize(uniform() * room * 0.25);
      const double hi = std::min(slot_hi, lo + std::max(kQuantum, quantize(uniform() * (slot_hi - lo))));
      if (hi > lo) {
        segs.push_back({lo, hi});
        continue;
      }
    }
    const double p = slot_lo + quantize(uniform() * room);
    segs.push_back({p, p});
  }
  return TimeScale(std::move(segs), "rand:seed=" + std::to_string(seed) + ",segs=" +
                                        std::to_string(max_segments) + ",span=" + shortest_real(span));
}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(std::string_view token) {
    skip_ws();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) {
      fail("expected '" + std::string(token) + "'");
    }
  }

  double number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '-' ||
            text_[pos_] == '+' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a number");
    }
    try {
      return parse_real(text_.substr(start, pos_ - start), "time scale '" + text_ + "'");
    } catch (const ConfigError&) {
      fail("malformed number");
    }
  }

  std::uint64_t unsigned_integer() {
    skip_ws();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) {
      fail("expected a non-negative integer");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }

  void finish() {
    if (!done()) {
      fail("unexpected trailing text");
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ConstructionError("malformed time scale '" + text_ + "': " + why + " at position " +
                            std::to_string(pos_));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

int whole(Cursor& cur, double v, const char* what) {
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    cur.fail(std::string(what) + " must be an integer");
  }
  return static_cast<int>(v);
}

}  // namespace

TimeScale parse_timescale(const std::string& text) {
  Cursor cur(text);
  if (cur.consume("hZ[")) {
    const double a = cur.number();
    cur.expect(",");
    const double b = cur.number();
    cur.expect(";");
    const double h = cur.number();
    cur.expect("]");
    cur.finish();
    return h_grid(a, b, h);
  }
  const bool is_reals = cur.consume("R[");
  if (is_reals || cur.consume("Z[")) {
    const double a = cur.number();
    cur.expect(",");
    const double b = cur.number();
    cur.expect("]");
    cur.finish();
    return is_reals ? reals(a, b) : integers(a, b);
  }
  if (cur.consume("q[")) {
    const int n = whole(cur, cur.number(), "q-grid exponent count");
    cur.expect(";");
    const double q = cur.number();
    cur.expect("]");
    cur.finish();
    return q_grid(q, n);
  }
  if (cur.consume("U:")) {
    std::vector<Segment> segs;
    do {
      cur.expect("(");
      const double lo = cur.number();
      cur.expect(",");
      const double hi = cur.number();
      cur.expect(")");
      segs.push_back({lo, hi});
    } while (cur.consume(","));
    cur.finish();
    return TimeScale(std::move(segs));
  }
  if (cur.consume("rand:")) {
    cur.expect("seed=");
    const std::uint64_t seed = cur.unsigned_integer();
    cur.expect(",");
    cur.expect("segs=");
    const int segs = whole(cur, cur.number(), "segs");
    cur.expect(",");
    cur.expect("span=");
    const double span = cur.number();
    cur.finish();
    RandomTimeScaleParams params;
    params.max_segments = segs;
    params.span = span;
    return random_timescale(seed, params);
  }
  cur.fail("unknown time scale kind (expected R, Z, hZ, q, U or rand)");
}

}  // namespace chronoscale
