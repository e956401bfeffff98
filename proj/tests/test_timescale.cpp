#include <cmath>
#include <limits>

#include "chronoscale/error.hpp"
#include "chronoscale/timescale.hpp"
#include "doctest.h"

using namespace chronoscale;

namespace {

std::vector<Segment> segs(const TimeScale& ts) { return {ts.segments().begin(), ts.segments().end()}; }

}  // namespace

TEST_CASE("build_timescale normalizes raw segments") {
  const auto two = build_timescale({{0, 1}, {2, 3}});
  CHECK(two.segment_count() == 2);
  CHECK(build_timescale({{2, 3}, {0, 1}}) == two);
  const auto merged = build_timescale({{0, 1}, {1, 2}});
  REQUIRE(merged.segment_count() == 1);
  CHECK(merged.segments()[0] == Segment{0, 2});
}

TEST_CASE("build_timescale rejects bad input") {
  CHECK_THROWS_AS(build_timescale({}), ConstructionError);
  CHECK_THROWS_AS(build_timescale({{1, 0}}), ConstructionError);
  CHECK_THROWS_AS(build_timescale({{0, std::numeric_limits<double>::infinity()}}), ConstructionError);
  CHECK_THROWS_AS(build_timescale({{0, std::nan("")}}), ConstructionError);
}

TEST_CASE("canonical time scales") {
  CHECK(segs(integers(0, 3)) == std::vector<Segment>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(segs(reals(0, 1)) == std::vector<Segment>{{0, 1}});
  CHECK(segs(q_grid(2, 3)) == std::vector<Segment>{{1, 1}, {2, 2}, {4, 4}, {8, 8}});
  CHECK(segs(h_grid(0, 1, 0.25)).size() == 5);
  CHECK_THROWS_AS(h_grid(0, 1, 0.3), ConstructionError);
  CHECK_THROWS_AS(integers(0, 2.5), ConstructionError);
}

TEST_CASE("random_timescale is deterministic per seed") {
  const auto a = random_timescale(7);
  const auto b = random_timescale(7);
  CHECK(a == b);
  CHECK_FALSE(random_timescale(8) == a);
  RandomTimeScaleParams one;
  one.max_segments = 1;
  const auto single = random_timescale(11, one);
  CHECK(single.segment_count() == 1);
  CHECK_FALSE(single.segments()[0].degenerate());
}

TEST_CASE("random_timescale respects the minimum gap") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto ts = random_timescale(seed);
    const auto s = ts.segments();
    for (std::size_t i = 1; i < s.size(); ++i) {
      CHECK(s[i].lo - s[i - 1].hi >= 0.25 - 1e-12);
    }
    CHECK(ts.max() - ts.min() <= 4.0 + 1e-12);
  }
}

TEST_CASE("sigma") {
  CHECK(integers(0, 5).sigma(3) == 4);
  const auto gap = build_timescale({{0, 1}, {2, 3}});
  CHECK(gap.sigma(1) == 2);
  CHECK(gap.sigma(0.5) == 0.5);
  CHECK(gap.sigma(3) == 3);
  CHECK_THROWS_AS(gap.sigma(1.5), DomainError);
}

TEST_CASE("rho") {
  CHECK(integers(0, 5).rho(3) == 2);
  CHECK(build_timescale({{0, 1}, {2, 3}}).rho(2) == 1);
  CHECK(reals(0, 1).rho(0.5) == 0.5);
  CHECK(integers(0, 5).rho(0) == 0);
  CHECK_THROWS_AS(reals(0, 1).rho(2), DomainError);
}

TEST_CASE("graininess") {
  CHECK(integers(0, 5).graininess(3) == 1);
  CHECK(build_timescale({{0, 1}, {2, 3}}).graininess(1) == 1);
  CHECK(reals(0, 1).graininess(0.5) == 0);
  CHECK(integers(0, 5).graininess(5) == 0);
}

TEST_CASE("membership snaps values within tolerance") {
  const auto z = integers(0, 3);
  CHECK(z.contains(2 + 1e-13));
  CHECK(z.snap(2 + 1e-13) == 2);
  CHECK_FALSE(z.contains(2.5));
  const auto h = h_grid(0, 1, 0.1);
  CHECK(h.contains(0.1 + 0.2));
}

TEST_CASE("scattered_points over half-open ranges") {
  CHECK(integers(0, 3).scattered_points(0, 3) == std::vector<double>{0, 1, 2});
  CHECK(reals(0, 1).scattered_points(0, 1).empty());
  CHECK(build_timescale({{0, 1}, {2, 3}}).scattered_points(0, 3) == std::vector<double>{1});
  CHECK_THROWS_AS(integers(0, 3).scattered_points(0.5, 3), DomainError);
}

TEST_CASE("parse_timescale descriptors") {
  CHECK(parse_timescale("R[0,1]") == reals(0, 1));
  CHECK(parse_timescale("Z[0,4]") == integers(0, 4));
  CHECK(parse_timescale("hZ[0,1;0.25]") == h_grid(0, 1, 0.25));
  CHECK(parse_timescale("q[3;2]") == q_grid(2, 3));
  CHECK(parse_timescale("U:(0,1),(2,3)") == build_timescale({{0, 1}, {2, 3}}));
  CHECK(parse_timescale("rand:seed=7,segs=4,span=4") == random_timescale(7));
  CHECK_THROWS_AS(parse_timescale("R[1,0]"), ConstructionError);
  CHECK_THROWS_AS(parse_timescale("W[0,1]"), Error);
}
