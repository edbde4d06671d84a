#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ricci_orbit/bivar.hpp"
#include "ricci_orbit/ratfunc.hpp"

namespace ricci_orbit {

struct ExprNode;

// Shorthand for rational expressions in x and a parameter a:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//   unary  := '-' unary | '+' unary | power
//   power  := primary ('^' integer)?
//   primary:= number | 'x' | 'a' | 'FS' | '(' expr ')'
//
// Numbers are integers or decimals. FS stands for 1 + x, so the potential
// "FS" is the Fubini-Study potential log(1 + x). A trailing "@ a=p/q" binds
// the parameter.
class Expression {
 public:
  // Throws InvalidInput with the offending position on a syntax error.
  static Expression parse(std::string_view text);

  [[nodiscard]] bool uses_a() const;
  [[nodiscard]] const std::optional<BigRational>& bound_a() const { return bound_a_; }

  // Rational function in x. The parameter comes from the "@ a=" binding,
  // else from `a`; throws InvalidInput when needed and missing, or when both
  // are given and disagree.
  [[nodiscard]] RatFunc eval(const std::optional<BigRational>& a = std::nullopt) const;

  // Polynomial in x and a. Throws InvalidInput on division by anything but
  // a nonzero constant.
  [[nodiscard]] BivarPoly to_bivar() const;

 private:
  std::shared_ptr<const ExprNode> root_;
  std::optional<BigRational> bound_a_;
};

}  // namespace ricci_orbit
