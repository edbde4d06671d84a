#include "ricci_orbit/expr.hpp"

#include <cctype>
#include <vector>

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

struct ExprNode {
  enum class Kind { Number, X, A, Add, Sub, Mul, Div, Neg, Pow } kind = Kind::Number;
  BigRational number;
  unsigned exponent = 0;
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;
using Kind = ExprNode::Kind;

NodePtr leaf(Kind kind, BigRational value = 0) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->number = std::move(value);
  return n;
}

NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("expression: " + what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                       "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'x' || c == 'a' || c == 'F';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = binary(c == '+' ? Kind::Add : Kind::Sub, lhs, term());
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        lhs = binary(c == '*' ? Kind::Mul : Kind::Div, lhs, unary());
      } else if (starts_primary()) {
        lhs = binary(Kind::Mul, lhs, power());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      auto n = std::make_shared<ExprNode>();
      n->kind = Kind::Neg;
      n->lhs = unary();
      return n;
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Pow;
    n->lhs = std::move(base);
    n->exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    return n;
  }

  NodePtr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return leaf(Kind::Number, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (text_.substr(pos_, 2) == "FS") {
      pos_ += 2;
      return binary(Kind::Add, leaf(Kind::Number, 1), leaf(Kind::X));
    }
    if (c == 'x' || c == 'a') {
      ++pos_;
      return leaf(c == 'x' ? Kind::X : Kind::A);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool mentions_a(const ExprNode& n) {
  if (n.kind == Kind::A) return true;
  return (n.lhs && mentions_a(*n.lhs)) || (n.rhs && mentions_a(*n.rhs));
}

RatFunc eval_node(const ExprNode& n, const BigRational* a) {
  switch (n.kind) {
    case Kind::Number:
      return RatFunc::constant(n.number);
    case Kind::X:
      return RatFunc(Poly::x());
    case Kind::A:
      return RatFunc::constant(*a);
    case Kind::Add:
      return eval_node(*n.lhs, a) + eval_node(*n.rhs, a);
    case Kind::Sub:
      return eval_node(*n.lhs, a) - eval_node(*n.rhs, a);
    case Kind::Mul:
      return eval_node(*n.lhs, a) * eval_node(*n.rhs, a);
    case Kind::Div: {
      const RatFunc d = eval_node(*n.rhs, a);
      if (d.is_zero()) throw InvalidInput("expression divides by zero");
      return eval_node(*n.lhs, a) / d;
    }
    case Kind::Neg:
      return -eval_node(*n.lhs, a);
    case Kind::Pow: {
      const RatFunc base = eval_node(*n.lhs, a);
      return RatFunc(base.num().pow(n.exponent), base.den().pow(n.exponent));
    }
  }
  throw InvalidInput("expression: unknown node");
}

BivarPoly bivar_node(const ExprNode& n) {
  switch (n.kind) {
    case Kind::Number:
      return BivarPoly::constant(Poly::constant(n.number));
    case Kind::X:
      return BivarPoly::x();
    case Kind::A:
      return BivarPoly::a();
    case Kind::Add:
      return bivar_node(*n.lhs) + bivar_node(*n.rhs);
    case Kind::Sub:
      return bivar_node(*n.lhs) - bivar_node(*n.rhs);
    case Kind::Mul:
      return bivar_node(*n.lhs) * bivar_node(*n.rhs);
    case Kind::Div: {
      const BivarPoly d = bivar_node(*n.rhs);
      if (d.degree_x() != 0 || d.leading().degree() != 0) {
        throw InvalidInput("polynomial family may only divide by nonzero constants");
      }
      return bivar_node(*n.lhs) * (1 / d.leading().coeff(0));
    }
    case Kind::Neg:
      return -bivar_node(*n.lhs);
    case Kind::Pow:
      return bivar_node(*n.lhs).pow(n.exponent);
  }
  throw InvalidInput("expression: unknown node");
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  std::string_view body = text;
  if (const auto at = text.find('@'); at != std::string_view::npos) {
    body = text.substr(0, at);
    std::string binding(text.substr(at + 1));
    std::erase_if(binding, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (binding.rfind("a=", 0) != 0) throw InvalidInput("expression: expected '@ a=<rational>'");
    e.bound_a_ = parse_rational(std::string_view(binding).substr(2));
  }
  e.root_ = Parser(body).parse_all();
  return e;
}

bool Expression::uses_a() const { return mentions_a(*root_); }

RatFunc Expression::eval(const std::optional<BigRational>& a) const {
  if (bound_a_ && a && *bound_a_ != *a) throw InvalidInput("conflicting values for the parameter a");
  const std::optional<BigRational>& value = bound_a_ ? bound_a_ : a;
  if (uses_a() && !value) throw InvalidInput("expression uses the parameter a but no value was given");
  return eval_node(*root_, value ? &*value : nullptr);
}

BivarPoly Expression::to_bivar() const { return bivar_node(*root_); }

}  // namespace ricci_orbit
