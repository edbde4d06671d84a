#pragma once

#include <random>
#include <vector>

#include "ricci_orbit/poly.hpp"
#include "ricci_orbit/radial.hpp"

namespace ricci_orbit::testing {

// mpq_class(n, d) keeps n/d as given; arithmetic needs canonical operands.
inline BigRational ratio(long n, long d) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

// Deterministic generators shared by the property tests.
class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  BigRational rational(long num_lo, long num_hi, long max_den) {
    const long n = integer(num_lo, num_hi);
    return ratio(n, integer(1, max_den));
  }

  // Nonzero polynomial with small integer coefficients and exact degree.
  Poly poly(int degree, long bound = 9) {
    std::vector<BigRational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(integer(-bound, bound));
    while (c.back() == 0) c.back() = integer(1, bound);
    return Poly(std::move(c));
  }

  // 1 + positive coefficients: log of it is a Kahler potential on CP^1
  // whenever it is not a binomial power of degree 1.
  Poly positive_poly(int degree, long bound = 9) {
    std::vector<BigRational> c{1};
    for (int i = 1; i <= degree; ++i) c.emplace_back(integer(1, bound));
    return Poly(std::move(c));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline RatFunc binomial_density(int n, const BigRational& scale = 1) {
  return RatFunc(Poly::constant(BigRational(n) * scale), Poly{1, scale}.pow(2));
}

}  // namespace ricci_orbit::testing
