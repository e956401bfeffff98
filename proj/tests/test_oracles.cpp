// Reference values for the two cross-check oracles. The closed forms are
// worked out by hand; the discrete sums are recomputed here from scratch so
// the oracle is never checked against itself.
#include <algorithm>
#include <cmath>
#include <functional>

#include "chronoscale/corpus.hpp"
#include "chronoscale/inequality.hpp"
#include "doctest.h"

using namespace chronoscale;

namespace {

using Fn = std::function<double(double, double)>;

struct DiscreteReference {
  double thm21_lhs, thm21_rhs, thm22_lhs, thm22_stated_rhs, thm22_derived_rhs, thm31_lhs, thm31_rhs;
};

// Brute-force sums on {0..k} x {0..r} with the lower corner at (1, 1).
DiscreteReference brute_force(const Fn& f, const Fn& g, int k, int r) {
  const double A = 1.0;
  const double C = 1.0;
  auto P = [&](const Fn& h, double x, double y) {
    return 0.5 * (h(A, y) + h(x, C) + h(x, r) + h(k, y)) - 0.25 * (h(A, C) + h(A, r) + h(k, C) + h(k, r));
  };
  auto mixed = [](const Fn& h, double x, double y) {
    return h(x + 1, y + 1) - h(x + 1, y) - h(x, y + 1) + h(x, y);
  };
  auto sup_mixed = [&](const Fn& h) {
    double m = 0.0;
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < r; ++y) {
        m = std::max(m, std::abs(mixed(h, x, y)));
      }
    }
    return m;
  };
  const double area = static_cast<double>(k) * r;
  const double nf = sup_mixed(f);
  const double ng = sup_mixed(g);
  double s21 = 0.0, s21_rhs = 0.0, s22 = 0.0, sum_f = 0.0, sum_abs_mixed = 0.0;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < r; ++y) {
      const double fx = f(x, y), gx = g(x, y);
      s21 += fx * gx - 0.5 * (P(f, x, y) * gx + P(g, x, y) * fx);
      s21_rhs += std::abs(gx) * nf + std::abs(fx) * ng;
      s22 += (fx - P(f, x, y)) * (gx - P(g, x, y));
      sum_f += fx;
      sum_abs_mixed += std::abs(mixed(f, x, y));
    }
  }
  double edge_x = 0.0;
  for (int x = 0; x < k; ++x) {
    edge_x += f(x, C) + f(x, r);
  }
  double edge_y = 0.0;
  for (int y = 0; y < r; ++y) {
    edge_y += f(A, y) + f(k, y);
  }
  const double corners = f(A, C) + f(A, r) + f(k, C) + f(k, r);
  DiscreteReference ref{};
  ref.thm21_lhs = std::abs(s21);
  ref.thm21_rhs = area / 8.0 * s21_rhs;
  ref.thm22_lhs = std::abs(s22);
  ref.thm22_stated_rhs = area * area / 16.0 * nf * ng;
  ref.thm22_derived_rhs = area * area * area / 16.0 * nf * ng;
  ref.thm31_lhs = std::abs(sum_f - 0.5 * (r * edge_x + k * edge_y) + 0.25 * area * corners);
  ref.thm31_rhs = 0.25 * area * sum_abs_mixed;
  return ref;
}

TimeScalePair real_square(double lo, double hi) { return {reals(lo, hi), reals(lo, hi)}; }

}  // namespace

TEST_CASE("continuous oracle reproduces the closed forms on the unit square") {
  const auto pair = real_square(0, 1);
  const Rectangle rect{0, 1, 0, 1};
  const auto xy = corpus_function("xy");

  const auto t21 = continuous_oracle(TheoremId::kThm21, xy, xy, pair, rect);
  CHECK(t21.lhs == doctest::Approx(1.0 / 144).epsilon(1e-12));
  CHECK(t21.rhs == doctest::Approx(1.0 / 16).epsilon(1e-12));
  CHECK(t21.pass);

  const auto t31 = continuous_oracle(TheoremId::kThm31, xy, std::nullopt, pair, rect);
  CHECK(std::abs(t31.lhs) < 1e-12);
  CHECK(t31.rhs == doctest::Approx(0.25).epsilon(1e-12));

  const auto sq = corpus_function("x2y2");
  const auto t31sq = continuous_oracle(TheoremId::kThm31, sq, std::nullopt, pair, rect);
  CHECK(t31sq.lhs == doctest::Approx(1.0 / 36).epsilon(1e-12));
  CHECK(t31sq.rhs == doctest::Approx(0.25).epsilon(1e-12));

  const auto c = corpus_function("const");
  CHECK(std::abs(continuous_oracle(TheoremId::kThm31, c, std::nullopt, pair, rect).lhs) < 1e-12);
}

TEST_CASE("continuous oracle reproduces the stated and derived Gruss bounds on [0,4]^2") {
  const auto pair = real_square(0, 4);
  const Rectangle rect{0, 4, 0, 4};
  const auto xy = corpus_function("xy");
  const auto stated = continuous_oracle(TheoremId::kThm22Stated, xy, xy, pair, rect);
  CHECK(stated.lhs == doctest::Approx(256.0 / 9).epsilon(1e-12));
  CHECK(stated.rhs == doctest::Approx(16.0).epsilon(1e-12));
  CHECK_FALSE(stated.pass);
  const auto derived = continuous_oracle(TheoremId::kThm22Derived, xy, xy, pair, rect);
  CHECK(derived.rhs == doctest::Approx(256.0).epsilon(1e-12));
  CHECK(derived.pass);
}

TEST_CASE("continuous oracle handles functions without a closed-form mixed derivative") {
  const auto pair = real_square(0, 1);
  const Rectangle rect{0, 1, 0, 1};
  const auto f = from_expression("x*y");
  const auto t31 = continuous_oracle(TheoremId::kThm31, f, std::nullopt, pair, rect);
  CHECK(std::abs(t31.lhs) < 1e-10);
  CHECK(t31.rhs == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("discrete oracle matches independent brute-force sums") {
  const auto functions = builtin_corpus();
  for (int k = 2; k <= 4; ++k) {
    for (const auto& f : functions) {
      for (const auto& g : {corpus_function("xy"), corpus_function("x2y2")}) {
        CAPTURE(k);
        CAPTURE(f.label);
        CAPTURE(g.label);
        const auto ref = brute_force(f.eval, g.eval, k, k);
        const auto t21 = discrete_oracle(TheoremId::kThm21, f, g, k, k);
        CHECK(t21.lhs == doctest::Approx(ref.thm21_lhs).epsilon(1e-12));
        CHECK(t21.rhs == doctest::Approx(ref.thm21_rhs).epsilon(1e-12));
        const auto t22s = discrete_oracle(TheoremId::kThm22Stated, f, g, k, k);
        CHECK(t22s.lhs == doctest::Approx(ref.thm22_lhs).epsilon(1e-12));
        CHECK(t22s.rhs == doctest::Approx(ref.thm22_stated_rhs).epsilon(1e-12));
        const auto t22d = discrete_oracle(TheoremId::kThm22Derived, f, g, k, k);
        CHECK(t22d.rhs == doctest::Approx(ref.thm22_derived_rhs).epsilon(1e-12));
      }
      const auto ref = brute_force(f.eval, f.eval, k, k);
      const auto t31 = discrete_oracle(TheoremId::kThm31, f, std::nullopt, k, k);
      CHECK(t31.lhs == doctest::Approx(ref.thm31_lhs).epsilon(1e-12));
      CHECK(t31.rhs == doctest::Approx(ref.thm31_rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("discrete oracle gives zero deviation for a constant") {
  const auto c = corpus_function("const");
  for (int k = 2; k <= 4; ++k) {
    CHECK(discrete_oracle(TheoremId::kThm21, c, c, k, k + 1).lhs == doctest::Approx(0.0));
    CHECK(discrete_oracle(TheoremId::kThm31, c, std::nullopt, k, k).lhs == doctest::Approx(0.0));
    CHECK(discrete_oracle(TheoremId::kIdentity, c, std::nullopt, k, k).lhs == doctest::Approx(0.0));
  }
}

TEST_CASE("discrete identity residual vanishes on integer grids") {
  for (const auto& f : builtin_corpus()) {
    CAPTURE(f.label);
    const auto r = discrete_oracle(TheoremId::kIdentity, f, std::nullopt, 4, 3);
    CHECK(r.lhs <= 1e-12);
    CHECK(r.pass);
  }
}
