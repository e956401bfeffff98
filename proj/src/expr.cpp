#include "chronoscale/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "chronoscale/error.hpp"
#include "chronoscale/format.hpp"

namespace chronoscale {

namespace {

using Kind = ExprAst::Kind;
using NodePtr = std::shared_ptr<const ExprAst::Node>;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
  auto n = std::make_shared<ExprAst::Node>();
  n->kind = kind;
  n->value = value;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = sum();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return root;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    while (true) {
      if (accept('+')) {
        lhs = make(Kind::kAdd, lhs, product());
      } else if (accept('-')) {
        lhs = make(Kind::kSub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = make(Kind::kMul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Kind::kDiv, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      return make(Kind::kNeg, unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) {
      return make(Kind::kPow, base, unary());
    }
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of expression", pos_);
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      if (!accept(')')) {
        throw ParseError("expected ')'", pos_);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") {
        return make(Kind::kX);
      }
      if (name == "y") {
        return make(Kind::kY);
      }
      Kind fn{};
      if (name == "sin") {
        fn = Kind::kSin;
      } else if (name == "cos") {
        fn = Kind::kCos;
      } else if (name == "exp") {
        fn = Kind::kExp;
      } else if (name == "abs") {
        fn = Kind::kAbs;
      } else {
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      }
      if (!accept('(')) {
        throw ParseError("expected '(' after " + std::string(name), pos_);
      }
      NodePtr arg = sum();
      if (!accept(')')) {
        throw ParseError("expected ')'", pos_);
      }
      return make(fn, arg);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
        ++p;
      }
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError("malformed number", start);
    }
    return make(Kind::kConstant, nullptr, nullptr, value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool same(const ExprAst::Node* a, const ExprAst::Node* b) {
  if (a == b) {
    return true;
  }
  if (a == nullptr || b == nullptr || a->kind != b->kind) {
    return false;
  }
  if (a->kind == Kind::kConstant) {
    return a->value == b->value;
  }
  return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
}

std::string print_node(const ExprAst::Node& n) {
  const auto binary = [&](const char* op) {
    return "(" + print_node(*n.lhs) + " " + op + " " + print_node(*n.rhs) + ")";
  };
  switch (n.kind) {
    case Kind::kConstant:
      return shortest_real(n.value);
    case Kind::kX:
      return "x";
    case Kind::kY:
      return "y";
    case Kind::kNeg:
      return "(-" + print_node(*n.lhs) + ")";
    case Kind::kSin:
      return "sin(" + print_node(*n.lhs) + ")";
    case Kind::kCos:
      return "cos(" + print_node(*n.lhs) + ")";
    case Kind::kExp:
      return "exp(" + print_node(*n.lhs) + ")";
    case Kind::kAbs:
      return "abs(" + print_node(*n.lhs) + ")";
    case Kind::kAdd:
      return binary("+");
    case Kind::kSub:
      return binary("-");
    case Kind::kMul:
      return binary("*");
    case Kind::kDiv:
      return binary("/");
    case Kind::kPow:
      return binary("^");
  }
  return "?";
}

[[noreturn]] void eval_fail(const ExprAst::Node& n, const std::string& why) {
  throw EvalError(why + " in '" + print_node(n) + "'");
}

double eval_node(const ExprAst::Node& n, double x, double y) {
  double r = 0.0;
  switch (n.kind) {
    case Kind::kConstant:
      return n.value;
    case Kind::kX:
      return x;
    case Kind::kY:
      return y;
    case Kind::kNeg:
      return -eval_node(*n.lhs, x, y);
    case Kind::kSin:
      r = std::sin(eval_node(*n.lhs, x, y));
      break;
    case Kind::kCos:
      r = std::cos(eval_node(*n.lhs, x, y));
      break;
    case Kind::kExp:
      r = std::exp(eval_node(*n.lhs, x, y));
      break;
    case Kind::kAbs:
      return std::abs(eval_node(*n.lhs, x, y));
    case Kind::kAdd:
      r = eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
      break;
    case Kind::kSub:
      r = eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
      break;
    case Kind::kMul:
      r = eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
      break;
    case Kind::kDiv: {
      const double num = eval_node(*n.lhs, x, y);
      const double den = eval_node(*n.rhs, x, y);
      if (den == 0.0) {
        eval_fail(n, "division by zero");
      }
      r = num / den;
      break;
    }
    case Kind::kPow: {
      const double base = eval_node(*n.lhs, x, y);
      const ExprAst::Node& e = *n.rhs;
      if (e.kind == Kind::kConstant && e.value >= 0.0 && e.value == std::floor(e.value)) {
        r = std::pow(base, e.value);
      } else {
        const double exponent = eval_node(e, x, y);
        if (!(base > 0.0)) {
          eval_fail(n, "non-positive base " + shortest_real(base) + " needs a constant non-negative integer exponent");
        }
        r = std::pow(base, exponent);
      }
      break;
    }
  }
  if (!std::isfinite(r)) {
    eval_fail(n, "non-finite value");
  }
  return r;
}

}  // namespace

bool operator==(const ExprAst& a, const ExprAst& b) { return same(a.root_.get(), b.root_.get()); }

ExprAst parse_expr(std::string_view text) { return ExprAst(Parser(text).parse()); }

double eval_expr(const ExprAst& ast, double x, double y) { return eval_node(ast.root(), x, y); }

std::string print_expr(const ExprAst& ast) { return print_node(ast.root()); }

}  // namespace chronoscale
