#include "ricci_orbit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "intpoly.hpp"
#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

using detail::from_ints;
using detail::IntPoly;
using detail::pseudo_remainder;
using detail::to_primitive_ints;

Poly::Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const BigRational& c) { return Poly(std::vector<BigRational>{c}); }

Poly Poly::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

const BigRational& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational Poly::eval(const BigRational& at) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly Poly::compose_linear(const BigRational& scale, const BigRational& shift) const {
  // Horner in the ring Q[x] with the linear polynomial as argument.
  const Poly arg{shift, scale};
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * arg;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::reversed(std::size_t n) const {
  if (is_zero()) return {};
  if (n < coeffs_.size() - 1) throw InvalidInput("reversal length below degree");
  std::vector<BigRational> r(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[n - i] = coeffs_[i];
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigRational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  BigRational tmp;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return Poly(std::move(out));
}

Poly operator-(Poly p) {
  for (auto& v : p.coeffs_) v = -v;
  return p;
}

DivRem divrem(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Poly{}, dividend};

  std::vector<BigRational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const int dd = divisor.degree();
  std::vector<BigRational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const BigRational inv_lead = 1 / divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    const BigRational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::optional<Poly> exact_quotient(const Poly& dividend, const Poly& divisor) {
  auto [q, r] = divrem(dividend, divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

BigRational content(const Poly& p) {
  if (p.is_zero()) return 0;
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return from_ints(to_primitive_ints(p));
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  IntPoly a = to_primitive_ints(p);
  IntPoly b = to_primitive_ints(q);
  if (detail::coprime_mod_primes(a, b)) return Poly::constant(1);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Poly::constant(1);
    IntPoly r = pseudo_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(from_ints(a));
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return Poly::constant(1);
  return monic(*exact_quotient(p, gcd(p, p.derivative())));
}

std::vector<Poly> square_free_decomposition(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  const Poly dp = p.derivative();
  Poly a = gcd(p, dp);
  Poly b = *exact_quotient(p, a);
  Poly c = *exact_quotient(dp, a);
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(monic(a));
    b = *exact_quotient(b, a);
    c = *exact_quotient(d, a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigRational& c = p.coeffs()[i];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace ricci_orbit
