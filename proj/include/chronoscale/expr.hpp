#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace chronoscale {

/**
 * Immutable syntax tree for bivariate expressions in x and y.
 *
 * Grammar (lowest to highest precedence):
 *   sum     := product (('+' | '-') product)*
 *   product := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' unary)?
 *   primary := number | 'x' | 'y' | func '(' sum ')' | '(' sum ')'
 *   func    := 'sin' | 'cos' | 'exp' | 'abs'
 *
 * '^' binds tighter than unary minus, so "-x^2" is -(x^2).
 */
class ExprAst {
 public:
  enum class Kind { kConstant, kX, kY, kNeg, kSin, kCos, kExp, kAbs, kAdd, kSub, kMul, kDiv, kPow };

  struct Node;

  explicit ExprAst(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }

  friend bool operator==(const ExprAst& a, const ExprAst& b);

 private:
  std::shared_ptr<const Node> root_;
};

struct ExprAst::Node {
  Kind kind = Kind::kConstant;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

/// Throws ParseError (with byte position) on syntax errors and unknown identifiers.
ExprAst parse_expr(std::string_view text);

/// Deterministic evaluation; throws EvalError naming the offending sub-expression
/// on division by zero, a non-positive base under a non-constant or non-integer
/// exponent, or any non-finite intermediate.
double eval_expr(const ExprAst& ast, double x, double y);

/// Fully parenthesized canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const ExprAst& ast);

}  // namespace chronoscale
