#include "intpoly.hpp"

#include <array>

namespace ricci_orbit::detail {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly to_primitive_ints(const Poly& p) {
  BigInteger lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.size());
  BigInteger g = 0;
  for (const auto& c : p.coeffs()) {
    BigInteger v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

void make_primitive(IntPoly& p) {
  BigInteger g = 0;
  for (const auto& v : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

Poly from_ints(const IntPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return Poly(std::move(c));
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInteger& lb = b.back();
  while (a.size() >= b.size()) {
    BigInteger la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
  return a;
}

IntPoly signed_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  BigInteger lb = b.back();
  const bool negative = lb < 0;
  if (negative) lb = -lb;
  BigInteger t;
  while (a.size() >= b.size()) {
    BigInteger la = a.back();
    if (negative) la = -la;
    const std::size_t shift = a.size() - b.size();
    // a <- |lb| a - sgn(lb) la x^shift b cancels the top term.
    for (auto& v : a) v *= lb;
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_mul(t.get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
      a[shift + i] -= t;
    }
    trim(a);
  }
  make_primitive(a);
  return a;
}

int sign_at(const IntPoly& p, const BigInteger& num, const BigInteger& den) {
  if (p.empty()) return 0;
  // den^n p(num / den) by Horner with a running power of den.
  BigInteger acc = p.back();
  BigInteger den_pow = 1;
  BigInteger t;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    acc *= num;
    den_pow *= den;
    mpz_mul(t.get_mpz_t(), p[i].get_mpz_t(), den_pow.get_mpz_t());
    acc += t;
  }
  return sgn(acc);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1U;
  }
  return r;
}

std::vector<u64> reduce(const IntPoly& p, u64 m) {
  std::vector<u64> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), m);
  return out;
}

void trim(std::vector<u64>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd(a, b) over Z/m.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 inv = pow_mod(b.back(), m - 2, m);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      const u64 f = mul_mod(a.back(), inv, m);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i <= db; ++i) {
        const u64 s = mul_mod(f, b[i], m);
        a[shift + i] = a[shift + i] >= s ? a[shift + i] - s : a[shift + i] + (m - s);
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

constexpr std::array<u64, 3> kPrimes = {(u64{1} << 61) - 1, (u64{1} << 62) - 57, (u64{1} << 63) - 25};

}  // namespace

bool coprime_mod_primes(const IntPoly& p, const IntPoly& q) {
  if (p.empty() || q.empty()) return false;
  for (const u64 m : kPrimes) {
    // The modular gcd bounds the rational one only when no leading
    // coefficient vanishes mod m.
    if (mpz_fdiv_ui(p.back().get_mpz_t(), m) == 0 || mpz_fdiv_ui(q.back().get_mpz_t(), m) == 0) continue;
    if (gcd_degree_mod(reduce(p, m), reduce(q, m), m) == 0) return true;
  }
  return false;
}

}  // namespace ricci_orbit::detail
