#include <cmath>

#include "chronoscale/corpus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/inequality.hpp"
#include "doctest.h"

using namespace chronoscale;

namespace {

TimeScalePair same(const TimeScale& ts) { return {ts, ts}; }

const Rectangle kUnit{0, 1, 0, 1};

BivariateFunction constant(double c) {
  BivariateFunction f = from_expression(std::to_string(c));
  f.exact_mixed = [](double, double, double, double) { return 0.0; };
  return f;
}

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("p_operator examples") {
  const auto xy = corpus_function("xy");
  CHECK(p_operator(constant(2.5), same(reals(0, 1)), kUnit, 0.3, 0.4) == doctest::Approx(2.5));
  CHECK(p_operator(xy, same(reals(0, 1)), kUnit, 1, 1) == doctest::Approx(0.75));
  CHECK(p_operator(xy, same(integers(0, 2)), Rectangle{0, 2, 0, 2}, 1, 1) == doctest::Approx(0.75));
  CHECK_THROWS_AS(p_operator(xy, same(integers(0, 2)), Rectangle{0, 2, 0, 2}, 0.5, 1), DomainError);
}

TEST_CASE("q_operator examples") {
  const auto xy = corpus_function("xy");
  CHECK(q_operator(constant(3), same(reals(0, 1)), kUnit, 0.5, 0.5) == doctest::Approx(0.0));
  CHECK(q_operator(xy, same(reals(0, 1)), kUnit, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_operator(xy, same(integers(0, 2)), Rectangle{0, 2, 0, 2}, 1, 1) == 1);
  CHECK_THROWS_AS(q_operator(xy, same(integers(0, 2)), Rectangle{0, 2, 0, 2}, 0, 1), DomainError);
}

TEST_CASE("identity_residual examples") {
  const auto xy = corpus_function("xy");
  CHECK(std::abs(identity_residual(xy, same(reals(0, 1)), kUnit, 1, 1)) < 1e-12);
  CHECK(identity_residual(xy, same(integers(0, 2)), Rectangle{0, 2, 0, 2}, 1, 1) == 0);
  const auto rnd = same(random_timescale(9));
  const Rectangle whole{rnd.first.min(), rnd.first.max(), rnd.second.min(), rnd.second.max()};
  CHECK(std::abs(identity_residual(constant(-4), rnd, whole, rnd.first.max(), rnd.second.max())) < 1e-12);
}

TEST_CASE("identity holds on the evaluation grid") {
  const std::vector<TimeScalePair> pairs{same(integers(0, 4)), same(h_grid(0, 1, 0.25)), same(q_grid(2, 3)),
                                         {reals(0, 1), integers(0, 3)}};
  for (const auto& f : builtin_corpus()) {
    for (const auto& pair : pairs) {
      const Rectangle rect{pair.first.min(), pair.first.max(), pair.second.min(), pair.second.max()};
      const auto r = verify_identity(f, pair, rect);
      CAPTURE(f.label);
      CAPTURE(pair.descriptor());
      CHECK(r.pass);
    }
  }
}

TEST_CASE("Q is linear and consistent with P") {
  const auto pair = TimeScalePair{build_timescale({{0, 1}, {1.5, 1.5}, {2, 3}}), integers(0, 3)};
  const Rectangle rect{0, 3, 0, 3};
  const auto f = corpus_function("x2y");
  const auto g = corpus_function("sin(x)cos(y)");
  const auto comb = from_expression("2*x^2*y - 3*sin(x)*cos(y)");
  for (double x : evaluation_axis(pair.first, 0, 3)) {
    for (double y : evaluation_axis(pair.second, 0, 3)) {
      CAPTURE(x);
      CAPTURE(y);
      const double qf = q_operator(f, pair, rect, x, y);
      const double qg = q_operator(g, pair, rect, x, y);
      CHECK(close_rel(q_operator(comb, pair, rect, x, y), 2 * qf - 3 * qg, 1e-9));
      CHECK(std::abs(qf - 4 * (f(x, y) - p_operator(f, pair, rect, x, y))) <= 1e-7);
    }
  }
}

TEST_CASE("|Q| is bounded by the integral of |mixed derivative|") {
  const auto pair = same(h_grid(0, 1, 0.25));
  const Rectangle rect{0, 1, 0, 1};
  for (const auto& f : builtin_corpus()) {
    const double bound = delta_integral_2d(
        pair, [&](double x, double y) { return std::abs(mixed_delta(f, pair, x, y)); }, rect);
    for (double x : evaluation_axis(pair.first, 0, 1)) {
      for (double y : evaluation_axis(pair.second, 0, 1)) {
        CHECK(std::abs(q_operator(f, pair, rect, x, y)) <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("product bound examples") {
  const auto c = constant(1.5);
  const auto r0 = verify_thm21(c, c, same(reals(0, 1)), kUnit);
  CHECK(r0.lhs == doctest::Approx(0.0));
  CHECK(r0.pass);
  const auto xy = corpus_function("xy");
  const auto r1 = verify_thm21(xy, xy, same(reals(0, 1)), kUnit);
  CHECK(std::abs(r1.lhs - 1.0 / 144) <= 1e-9);
  CHECK(std::abs(r1.rhs - 1.0 / 16) <= 1e-9);
  CHECK(r1.pass);
  const auto r2 = verify_thm21(xy, xy, same(integers(0, 2)), Rectangle{0, 2, 0, 2});
  const auto o2 = discrete_oracle(TheoremId::kThm21, xy, xy, 2, 2);
  CHECK(r2.pass);
  CHECK(std::abs(r2.lhs - o2.lhs) <= 1e-12);
  CHECK(std::abs(r2.rhs - o2.rhs) <= 1e-12);
}

TEST_CASE("product bound is symmetric in f and g") {
  const auto pair = TimeScalePair{random_timescale(21), random_timescale(22)};
  const Rectangle rect{pair.first.min(), pair.first.max(), pair.second.min(), pair.second.max()};
  const auto f = corpus_function("x2y");
  const auto g = corpus_function("exp(x/4)y");
  const auto fg = verify_thm21(f, g, pair, rect);
  const auto gf = verify_thm21(g, f, pair, rect);
  CHECK(fg.lhs == gf.lhs);
  CHECK(fg.rhs == gf.rhs);
}

TEST_CASE("Gruss bound examples") {
  const auto c = constant(2);
  for (auto variant : {BoundVariant::kStated, BoundVariant::kDerived}) {
    const auto r = verify_thm22(c, c, same(reals(0, 1)), kUnit, variant);
    CHECK(r.lhs == doctest::Approx(0.0));
    CHECK(r.pass);
  }
  const auto xy = corpus_function("xy");
  const Rectangle big{0, 4, 0, 4};
  const auto stated = verify_thm22(xy, xy, same(reals(0, 4)), big, BoundVariant::kStated);
  CHECK(std::abs(stated.lhs - 256.0 / 9) <= 1e-9);
  CHECK(std::abs(stated.rhs - 16) <= 1e-9);
  CHECK_FALSE(stated.pass);
  const auto derived = verify_thm22(xy, xy, same(reals(0, 4)), big, BoundVariant::kDerived);
  CHECK(std::abs(derived.rhs - 256) <= 1e-7);
  CHECK(derived.pass);
}

TEST_CASE("trapezoid bound examples") {
  const auto r0 = verify_thm31(constant(7), same(reals(0, 1)), kUnit);
  CHECK(r0.lhs == doctest::Approx(0.0));
  CHECK(r0.pass);
  const auto r1 = verify_thm31(corpus_function("xy"), same(reals(0, 1)), kUnit);
  CHECK(std::abs(r1.lhs) <= 1e-9);
  CHECK(std::abs(r1.rhs - 0.25) <= 1e-9);
  const auto r2 = verify_thm31(corpus_function("x2y2"), same(reals(0, 1)), kUnit);
  CHECK(std::abs(r2.lhs - 1.0 / 36) <= 1e-9);
  CHECK(std::abs(r2.rhs - 0.25) <= 1e-9);
  CHECK(r2.pass);
}

TEST_CASE("general path agrees with the continuous oracle on the reals") {
  const std::vector<Rectangle> rects{{0, 1, 0, 1}, {0.5, 2, 0, 3}};
  const auto corpus = builtin_corpus();
  for (const auto& rect : rects) {
    const auto pair = TimeScalePair{reals(rect.a, rect.b), reals(rect.c, rect.d)};
    for (const auto& f : corpus) {
      for (auto id : {TheoremId::kThm21, TheoremId::kThm22Derived, TheoremId::kThm31}) {
        const auto& g = corpus[5];
        const auto general = verify(id, f, g, pair, rect);
        const auto oracle = continuous_oracle(id, f, g, pair, rect);
        CAPTURE(f.label);
        CAPTURE(to_string(id));
        CHECK(close_rel(general.lhs, oracle.lhs, 1e-8));
        CHECK(close_rel(general.rhs, oracle.rhs, 1e-8));
      }
    }
  }
}

TEST_CASE("general path agrees with the discrete oracle on the integers") {
  const auto corpus = builtin_corpus();
  for (int k = 2; k <= 4; ++k) {
    const auto pair = same(integers(0, k));
    const Rectangle rect{0, double(k), 0, double(k)};
    for (const auto& f : corpus) {
      for (auto id : {TheoremId::kThm21, TheoremId::kThm22Stated, TheoremId::kThm22Derived, TheoremId::kThm31}) {
        const auto& g = corpus[4];
        const auto general = verify(id, f, g, pair, rect);
        const auto oracle = discrete_oracle(id, f, g, k, k);
        CAPTURE(k);
        CAPTURE(f.label);
        CAPTURE(to_string(id));
        CHECK(close_rel(general.lhs, oracle.lhs, 1e-12));
        CHECK(close_rel(general.rhs, oracle.rhs, 1e-12));
      }
    }
  }
}

TEST_CASE("endpoint anchor moves the lower corner to (a, c)") {
  const auto z = integers(0, 4);
  CHECK(corner_anchor(z, 0, CornerAnchor::kJump) == 1);
  CHECK(corner_anchor(z, 0, CornerAnchor::kEndpoint) == 0);
  CHECK(corner_anchor(reals(0, 1), 0, CornerAnchor::kJump) == 0);
  const auto xy = corpus_function("xy");
  const Rectangle rect{0, 2, 0, 2};
  CHECK(p_operator(xy, same(integers(0, 2)), rect, 1, 1, CornerAnchor::kEndpoint) == doctest::Approx(1.0));
  CHECK(identity_residual(xy, same(integers(0, 2)), rect, 0, 0, {}, CornerAnchor::kEndpoint) == 0);
}

TEST_CASE("theorem ids and anchors parse") {
  for (auto id : {TheoremId::kIdentity, TheoremId::kThm21, TheoremId::kThm22Stated, TheoremId::kThm22Derived,
                  TheoremId::kThm31}) {
    CHECK(parse_theorem_id(to_string(id)) == id);
  }
  CHECK_THROWS_AS(parse_theorem_id("thm99"), ConfigError);
  CHECK(parse_corner_anchor("endpoint") == CornerAnchor::kEndpoint);
  CHECK_THROWS_AS(parse_corner_anchor("middle"), ConfigError);
}
