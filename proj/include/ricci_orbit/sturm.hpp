#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ricci_orbit/poly.hpp"

namespace ricci_orbit {

// A rational number or one of the two infinities.
struct ExtendedRational {
  enum class Kind { NegInfinity, Finite, PosInfinity };
  Kind kind = Kind::Finite;
  BigRational value;

  ExtendedRational() = default;
  ExtendedRational(BigRational v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtendedRational(int v) : value(v) {}                      // NOLINT(google-explicit-constructor)

  static ExtendedRational neg_infinity() { return ExtendedRational(Kind::NegInfinity); }
  static ExtendedRational pos_infinity() { return ExtendedRational(Kind::PosInfinity); }

  [[nodiscard]] bool is_finite() const { return kind == Kind::Finite; }

 private:
  explicit ExtendedRational(Kind k) : kind(k) {}
};

bool operator<(const ExtendedRational& lhs, const ExtendedRational& rhs);

// Signed remainder sequence p, p', -rem(p, p'), ... Every element after the
// first two is scaled by a positive constant to a primitive integer
// polynomial, which leaves the sign pattern untouched.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  [[nodiscard]] const std::vector<Poly>& chain() const { return chain_; }
  [[nodiscard]] const Poly& base() const { return chain_.front(); }

  // Sign variations at a point, zeros skipped.
  [[nodiscard]] int variations(const ExtendedRational& at) const;
  // Distinct roots of the base polynomial in (lo, hi].
  [[nodiscard]] int count(const ExtendedRational& lo, const ExtendedRational& hi) const;

 private:
  std::vector<Poly> chain_;
  std::vector<std::vector<BigInteger>> ints_;  // primitive integer multiples of chain_
};

// Number of distinct real roots of p in (lo, hi]. The square-free part is
// taken first. Throws InvalidInput for p = 0 or lo >= hi.
int sturm_count_roots(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi);

struct IsolatingInterval {
  BigRational lo;
  BigRational hi;
  int root_count = 0;  // distinct roots in (lo, hi]
};

// Disjoint intervals, each holding exactly one distinct root of p in
// (lo, hi], ordered left to right. lo and hi must be finite.
std::vector<IsolatingInterval> isolate_roots(const Poly& p, const BigRational& lo, const BigRational& hi);

// All distinct roots in (0, inf).
std::vector<IsolatingInterval> isolate_positive_roots(const Poly& p);

// Bisect an isolating interval of the square-free polynomial until its
// width is at most max_width.
IsolatingInterval refine(const SturmChain& chain, IsolatingInterval iv, const BigRational& max_width);

// Cauchy bound: every real root has |r| < bound.
BigRational root_bound(const Poly& p);

enum class Positivity { StrictlyPositive, NonNegWithZeros, NotNonNeg };

struct PositivityReport {
  Positivity status = Positivity::StrictlyPositive;
  // NonNegWithZeros: one interval per zero in [0, inf). A zero at the
  // origin is reported as (-delta, 0].
  std::vector<IsolatingInterval> zeros;
  // NotNonNeg: a rational x >= 0 with p(x) < 0, or the sign of p at
  // infinity is negative and witness is absent.
  std::optional<BigRational> negative_at;
  bool negative_at_infinity = false;
};

// Sign of p on [0, inf), decided exactly. Throws InvalidInput for p = 0.
PositivityReport is_positive_on_nonneg_axis(const Poly& p);

// (c0, c1) with p = c0 + c1*t (mod m) for a monic quadratic m.
// Throws InvalidInput when m is not a monic quadratic.
std::pair<BigRational, BigRational> eval_mod_quadratic(const Poly& p, const Poly& m);

// Exact sign of c0 + c1*sqrt(d) for rational d > 0.
int sign_at_sqrt(const BigRational& c0, const BigRational& c1, const BigRational& d);

}  // namespace ricci_orbit
