#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ricci_orbit/rational.hpp"

namespace ricci_orbit {

// Dense univariate polynomial over Q. Coefficient i multiplies x^i and
// trailing zeros are always trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);
  Poly(std::initializer_list<BigRational> coeffs);

  static Poly constant(const BigRational& c);
  static Poly monomial(const BigRational& c, std::size_t power);
  static Poly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] std::span<const BigRational> coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  // Coefficient of x^i (zero past the degree).
  [[nodiscard]] BigRational coeff(std::size_t i) const;
  [[nodiscard]] const BigRational& leading() const;

  [[nodiscard]] BigRational eval(const BigRational& at) const;
  [[nodiscard]] Poly derivative() const;
  // p(scale * x + shift)
  [[nodiscard]] Poly compose_linear(const BigRational& scale, const BigRational& shift) const;
  // x^n p(1/x) for n >= degree
  [[nodiscard]] Poly reversed(std::size_t n) const;
  [[nodiscard]] Poly pow(unsigned exponent) const;
  [[nodiscard]] Poly shifted_up(std::size_t k) const;  // x^k p

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const BigRational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const BigRational& c) { return lhs *= c; }
  friend Poly operator*(const BigRational& c, Poly rhs) { return rhs *= c; }
  friend Poly operator-(Poly p);

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// Euclidean division over Q; deg(remainder) < deg(divisor).
// Throws DivisionByZero for a zero divisor.
DivRem divrem(const Poly& dividend, const Poly& divisor);

// Quotient when divisor divides dividend exactly, nullopt otherwise.
std::optional<Poly> exact_quotient(const Poly& dividend, const Poly& divisor);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);

Poly monic(const Poly& p);

// Positive rational c with p / c having coprime integer coefficients.
BigRational content(const Poly& p);

// p / content(p): integer coefficients, gcd 1, same sign as p.
Poly primitive_part(const Poly& p);

// p / gcd(p, p'), monic.
Poly square_free_part(const Poly& p);

// Yun decomposition: result[i] is the monic product of the irreducible
// factors of multiplicity i + 1.
std::vector<Poly> square_free_decomposition(const Poly& p);

// "3/2 - x + 2*x^2" style rendering, lowest power first.
std::string to_string(const Poly& p, char var = 'x');

}  // namespace ricci_orbit
