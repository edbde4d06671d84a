#pragma once

#include <optional>
#include <string>

#include "ricci_orbit/poly.hpp"

namespace ricci_orbit {

// Reduced quotient num/den of two polynomials over Q.
//
// Canonical form: gcd(num, den) = 1 and den is monic, so two RatFuncs
// represent the same function iff they compare equal. The zero function
// is 0/1. With a monic denominator the sign of the function for large x
// is the sign of num's leading coefficient.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  // Throws DivisionByZero when den is the zero polynomial.
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly p) : RatFunc(std::move(p), Poly::constant(1)) {}

  static RatFunc constant(const BigRational& c) { return RatFunc(Poly::constant(c)); }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
  // The constant value when both parts are constant.
  [[nodiscard]] std::optional<BigRational> constant_value() const;
  // deg(den) - deg(num); the decay order at infinity.
  [[nodiscard]] int degree_gap() const { return den_.degree() - num_.degree(); }

  // Throws DivisionByZero at a pole.
  [[nodiscard]] BigRational eval(const BigRational& at) const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  friend RatFunc operator*(const BigRational& c, const RatFunc& f) { return RatFunc(f.num_ * c, f.den_); }
  friend RatFunc operator-(const RatFunc& f) { return RatFunc(-f.num_, f.den_); }

  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) = default;

 private:
  Poly num_;
  Poly den_;
};

// Reduction to lowest terms; same as the RatFunc constructor.
inline RatFunc ratfunc_reduce(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

std::string to_string(const RatFunc& f);

}  // namespace ricci_orbit
