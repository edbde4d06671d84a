#include "ricci_orbit/bivar.hpp"

#include <algorithm>

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

BivarPoly::BivarPoly(std::vector<Poly> coeffs_in_a) : coeffs_(std::move(coeffs_in_a)) { trim(); }

BivarPoly BivarPoly::from_x_poly(const Poly& p) {
  std::vector<Poly> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.push_back(Poly::constant(v));
  return BivarPoly(std::move(c));
}

BivarPoly BivarPoly::constant(const Poly& c_in_a) { return BivarPoly(std::vector<Poly>{c_in_a}); }

void BivarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int BivarPoly::degree_a() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

const Poly& BivarPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t BivarPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.size();
  return n;
}

Poly BivarPoly::at_a(const BigRational& a) const {
  std::vector<BigRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.eval(a));
  return Poly(std::move(out));
}

Poly BivarPoly::at_x(const BigRational& x) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BivarPoly BivarPoly::derivative_x() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Poly> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * BigRational(static_cast<unsigned long>(i)));
  return BivarPoly(std::move(d));
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Poly& c_in_a) {
  for (auto& c : coeffs_) c *= c_in_a;
  trim();
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Poly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::pow(unsigned exponent) const {
  BivarPoly result = constant(Poly::constant(1));
  BivarPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Poly content_in_a(const BivarPoly& p) {
  if (p.is_zero()) return {};
  Poly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  // Rational content of p / g.
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    const Poly reduced = g.degree() > 0 ? *exact_quotient(c, g) : c;
    for (const auto& v : reduced.coeffs()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  BigRational r(num_gcd, den_lcm);
  r.canonicalize();
  return g * r;
}

BivarPoly primitive_part(const BivarPoly& p) {
  if (p.is_zero()) return p;
  const Poly c = content_in_a(p);
  std::vector<Poly> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) out.push_back(v.is_zero() ? v : *exact_quotient(v, c));
  return BivarPoly(std::move(out));
}

std::optional<BivarPoly> exact_quotient(const BivarPoly& dividend, const BivarPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("bivariate division by zero");
  if (dividend.is_zero()) return BivarPoly{};
  if (dividend.degree_x() < divisor.degree_x()) return std::nullopt;
  std::vector<Poly> rem = dividend.coeffs();
  const int dd = divisor.degree_x();
  std::vector<Poly> quot(static_cast<std::size_t>(dividend.degree_x() - dd + 1));
  const Poly& lead = divisor.leading();
  for (int i = dividend.degree_x(); i >= dd; --i) {
    const Poly& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    auto factor = exact_quotient(top, lead);
    if (!factor) return std::nullopt;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= *factor * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(i - dd)] = std::move(*factor);
  }
  for (int i = 0; i < dd; ++i) {
    if (!rem[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  }
  return BivarPoly(std::move(quot));
}

BivarPoly d_op(const BivarPoly& p) {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly dp = p.derivative_x();
  return dp * p + x * dp.derivative_x() * p - x * dp * dp;
}

std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Poly& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c, 'a') + ")";
    if (i > 0) out += "*x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ricci_orbit
