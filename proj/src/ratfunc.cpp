#include "ricci_orbit/ratfunc.hpp"

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = *exact_quotient(num, g);
    den = *exact_quotient(den, g);
  }
  const BigRational scale = 1 / den.leading();
  num_ = std::move(num) * scale;
  den_ = std::move(den) * scale;
}

std::optional<BigRational> RatFunc::constant_value() const {
  if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
  return num_.coeff(0);
}

BigRational RatFunc::eval(const BigRational& at) const {
  const BigRational d = den_.eval(at);
  if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    *this = RatFunc(num_ + rhs.num_, den_);
  } else {
    *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by the zero rational function");
  *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::string to_string(const RatFunc& f) {
  if (f.den().degree() == 0) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace ricci_orbit
