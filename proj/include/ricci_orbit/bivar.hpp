#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ricci_orbit/poly.hpp"

namespace ricci_orbit {

// Polynomial in x whose coefficients are polynomials in a parameter a:
// coeff(i) multiplies x^i. Trailing zero x-coefficients are trimmed.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<Poly> coeffs_in_a);
  // Lifts a polynomial in x with constant coefficients.
  static BivarPoly from_x_poly(const Poly& p);
  static BivarPoly constant(const Poly& c_in_a);
  static BivarPoly x() { return BivarPoly({Poly{}, Poly::constant(1)}); }
  static BivarPoly a() { return constant(Poly::x()); }

  [[nodiscard]] int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] int degree_a() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Poly>& coeffs() const { return coeffs_; }
  [[nodiscard]] Poly coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Poly{}; }
  [[nodiscard]] const Poly& leading() const;
  // Number of stored rational coefficients; drives the size guard.
  [[nodiscard]] std::size_t term_count() const;

  // Polynomial in x at a fixed parameter value.
  [[nodiscard]] Poly at_a(const BigRational& a) const;
  // Polynomial in a at a fixed x.
  [[nodiscard]] Poly at_x(const BigRational& x) const;
  [[nodiscard]] BivarPoly derivative_x() const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Poly& c_in_a);

  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend BivarPoly operator*(BivarPoly lhs, const Poly& c) { return lhs *= c; }
  friend BivarPoly operator*(BivarPoly lhs, const BigRational& c) { return lhs *= Poly::constant(c); }
  friend BivarPoly operator-(const BivarPoly& p) { return p * BigRational(-1); }

  [[nodiscard]] BivarPoly pow(unsigned exponent) const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

// Content over Q[a]: positive rational times the monic gcd of all
// x-coefficients. Zero for the zero polynomial.
Poly content_in_a(const BivarPoly& p);

// p / content_in_a(p).
BivarPoly primitive_part(const BivarPoly& p);

// Quotient if divisor divides dividend in Q[a][x], nullopt otherwise.
std::optional<BivarPoly> exact_quotient(const BivarPoly& dividend, const BivarPoly& divisor);

// D(P) = P' P + x P'' P - x (P')^2 with ' = d/dx.
BivarPoly d_op(const BivarPoly& p);

std::string to_string(const BivarPoly& p);

}  // namespace ricci_orbit
