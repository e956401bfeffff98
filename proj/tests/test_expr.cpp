#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chronoscale/error.hpp"
#include "chronoscale/expr.hpp"
#include "golden_expressions.hpp"
#include "doctest.h"

using namespace chronoscale;
using chronoscale::testing::golden;

namespace {

double eval(const std::string& text, double x, double y) { return eval_expr(parse_expr(text), x, y); }

}  // namespace

TEST_CASE("golden suite has twenty expressions") { CHECK(golden().size() == 20); }

TEST_CASE("print and parse round-trip is stable") {
  for (const auto& g : golden()) {
    CAPTURE(g.text);
    const ExprAst ast = parse_expr(g.text);
    const std::string printed = print_expr(ast);
    const ExprAst again = parse_expr(printed);
    CHECK(again == ast);
    CHECK(print_expr(again) == printed);
  }
}

TEST_CASE("evaluation matches reference closures") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(0.5, 2.5);
  for (const auto& g : golden()) {
    const ExprAst ast = parse_expr(g.text);
    for (int i = 0; i < 10; ++i) {
      const double x = coord(rng);
      const double y = coord(rng);
      const double want = g.reference(x, y);
      CAPTURE(g.text);
      CHECK(std::abs(eval_expr(ast, x, y) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("parse_expr examples") {
  CHECK(eval("x*y", 2, 3) == 6);
  CHECK(eval("sin(x)+exp(y)", 0, 0) == 1);
  CHECK(eval("x^2*y - 3", 2, 1) == 1);
}

TEST_CASE("eval_expr examples") {
  CHECK_THROWS_AS(eval("1/x", 0, 1), EvalError);
  CHECK(eval("abs(-2)", 0, 0) == 2);
  CHECK(eval("-x^2", 3, 0) == -9);
  CHECK_THROWS_AS(eval("x^0.5", -1, 0), EvalError);
  CHECK_THROWS_AS(eval("x^-1", -2, 0), EvalError);
  CHECK(eval("x^2", -2, 0) == 4);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("x +"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x"), ParseError);
  CHECK_THROWS_AS(parse_expr("x y"), ParseError);
  try {
    parse_expr("x * )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
