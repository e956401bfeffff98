#include "chronoscale/corpus.hpp"

#include <cmath>

#include "chronoscale/error.hpp"
#include "chronoscale/expr.hpp"

namespace chronoscale {

namespace {

BivariateFunction entry(std::string label, BivariateFn eval, std::optional<MixedFn> mixed) {
  BivariateFunction f;
  f.label = std::move(label);
  f.eval = std::move(eval);
  f.exact_mixed = std::move(mixed);
  return f;
}

MixedFn zero_mixed() {
  return [](double, double, double, double) { return 0.0; };
}

}  // namespace

std::vector<BivariateFunction> builtin_corpus() {
  std::vector<BivariateFunction> out;
  out.push_back(entry("const", [](double, double) { return 1.5; }, zero_mixed()));
  out.push_back(entry("x", [](double x, double) { return x; }, zero_mixed()));
  out.push_back(entry("y", [](double, double y) { return y; }, zero_mixed()));
  out.push_back(entry("xy", [](double x, double y) { return x * y; },
                      [](double, double, double, double) { return 1.0; }));
  // Δ1(x^2 y) = (σ1(x) + x) y, then Δ2 drops the y.
  out.push_back(entry("x2y", [](double x, double y) { return x * x * y; },
                      [](double x, double, double sx, double) { return sx + x; }));
  out.push_back(entry("x2y2", [](double x, double y) { return x * x * y * y; },
                      [](double x, double y, double sx, double sy) { return (sx + x) * (sy + y); }));
  out.push_back(entry("x+y", [](double x, double y) { return x + y; }, zero_mixed()));
  out.push_back(entry("sin(x)cos(y)", [](double x, double y) { return std::sin(x) * std::cos(y); }, std::nullopt));
  out.push_back(entry("exp(x/4)y", [](double x, double y) { return std::exp(x / 4.0) * y; }, std::nullopt));
  return out;
}

BivariateFunction corpus_function(const std::string& label) {
  for (BivariateFunction& f : builtin_corpus()) {
    if (f.label == label) {
      return std::move(f);
    }
  }
  throw ConfigError("unknown corpus function '" + label + "'");
}

BivariateFunction from_expression(const std::string& text) {
  const ExprAst ast = parse_expr(text);
  return entry(text, [ast](double x, double y) { return eval_expr(ast, x, y); }, std::nullopt);
}

BivariateFunction resolve_function(const std::string& label_or_expr) {
  for (BivariateFunction& f : builtin_corpus()) {
    if (f.label == label_or_expr) {
      return std::move(f);
    }
  }
  return from_expression(label_or_expr);
}

}  // namespace chronoscale
