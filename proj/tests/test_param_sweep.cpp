#include <doctest.h>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/param_sweep.hpp"
#include "support.hpp"

using namespace ricci_orbit;
using ricci_orbit::testing::binomial_density;
using ricci_orbit::testing::Random;
using ricci_orbit::testing::ratio;

namespace {

const BivarPoly kA = BivarPoly::a();
const BivarPoly kX = BivarPoly::x();
const BivarPoly kOne = BivarPoly::constant(Poly{1});

BivarPoly constant(const BigRational& c) { return BivarPoly::constant(Poly::constant(c)); }

const std::vector<SymbolicStep>& steps_to_2() {
  static const auto steps = symbolic_iterate(2);
  return steps;
}

}  // namespace

TEST_CASE("bivariate arithmetic") {
  const BivarPoly p = kOne + kA * kX + kX * kX;
  CHECK(p == default_family());
  CHECK(p.degree_x() == 2);
  CHECK(p.degree_a() == 1);
  CHECK(p.at_a(2) == Poly{1, 2, 1});
  CHECK(p.at_x(1) == Poly{2, 1});
  CHECK(d_op(p) == kA + constant(4) * kX + kA * kX * kX);

  const BivarPoly sq = p.pow(2);
  REQUIRE(exact_quotient(sq, p).has_value());
  CHECK(*exact_quotient(sq, p) == p);
  CHECK_FALSE(exact_quotient(p, kOne + kX).has_value());
  CHECK_THROWS_AS(exact_quotient(p, BivarPoly{}), DivisionByZero);

  const BivarPoly scaled = p * (kA * kA + constant(1)) * BigRational(6);
  CHECK(primitive_part(scaled) == p);
  CHECK(content_in_a(scaled) == Poly{6, 0, 6});
}

TEST_CASE("symbolic iterates of the family") {
  const auto& steps = steps_to_2();
  REQUIRE(steps.size() == 3);

  const BivarPoly P = default_family();
  const BivarPoly A = d_op(P);
  const BivarPoly paper_num = (constant(2) * A.pow(3) - constant(4) * kA * P.pow(3)) * BigRational(2);
  const BivarPoly paper_den = A.pow(2) * P.pow(2);
  CHECK(steps[1].numerator * paper_den == paper_num * steps[1].denominator());
  CHECK(steps[1].numerator.degree_x() == 6);
  CHECK(steps[2].numerator.degree_x() == 18);
  CHECK(steps[2].denominator().degree_x() == 20);
  CHECK(steps[2].raw_degree_num <= 3 * steps[1].raw_degree_num + 2);

  CHECK(steps[1].at(2).num() * binomial_density(4).den() == binomial_density(4).num() * steps[1].at(2).den());
  CHECK(steps[1].at(2) == binomial_density(4));
  CHECK(steps[2].at(2) == binomial_density(4));

  CHECK_THROWS_AS(symbolic_iterate(3, default_family(), 100), SizeLimitExceeded);
}

TEST_CASE("coefficient positivity on parameter intervals") {
  const BivarPoly& n1 = steps_to_2()[1].numerator;
  const CertifiedInterval ok = coeff_positivity_interval(n1, BigRational(3, 2), 2);
  CHECK(ok.property == IntervalProperty::AllXCoeffsPositive);
  CHECK(ok.certificates.size() == 7);
  for (const auto& c : ok.certificates) {
    CHECK(c.roots_in_closed_interval == 0);
    CHECK(c.sample_sign > 0);
  }

  const auto signs = coefficient_signs_at_sqrt(n1, 2);
  REQUIRE(signs.size() == 7);
  CHECK(signs.front() == 0);
  CHECK(signs.back() == 0);
  for (std::size_t i = 1; i + 1 < signs.size(); ++i) CHECK(signs[i] > 0);

  const CertifiedInterval bad = coeff_positivity_interval(n1, BigRational(1, 2), 1);
  CHECK(bad.property == IntervalProperty::CoefficientNotPositive);
  REQUIRE(bad.counterexample.has_value());
  REQUIRE(bad.counterexample->x_power.has_value());
  CHECK(n1.coeff(*bad.counterexample->x_power).eval(bad.counterexample->a) <= 0);
  CHECK(n1.coeff(0).eval(1) == -4);
}

TEST_CASE("Kahler intervals") {
  SweepOptions opts;
  opts.jobs = 2;
  const KahlerIntervalResult k1 = kahler_interval(1, opts);
  REQUIRE(k1.inner.size() == 1);
  CHECK(k1.inner[0].first * k1.inner[0].first > 2);
  CHECK(k1.inner[0].first <= BigRational(14143, 10000));
  CHECK(k1.inner[0].second == 2);
  // Just below sqrt 2 the whole cell is certified not Kahler.
  bool below = false;
  for (const auto& c : k1.cells) {
    if (c.hi * c.hi < 2 && c.hi > ratio(14, 10)) below = below || (c.property == IntervalProperty::NotKahler && c.whole_cell);
  }
  CHECK(below);

  // Cells tile the domain in order.
  BigRational at = opts.domain_lo;
  for (const auto& c : k1.cells) {
    CHECK(c.lo == at);
    CHECK(c.lo < c.hi);
    at = c.hi;
  }
  CHECK(at == opts.domain_hi);

  const KahlerIntervalResult k2 = kahler_interval(2, opts);
  REQUIRE_FALSE(k2.inner.empty());
  CHECK(k2.inner.front().first * k2.inner.front().first > 2);
  CHECK(k2.inner.back().second <= 2);
  CHECK(k2.degrees_num == std::vector<int>{2, 6, 18});
  CHECK(k2.degrees_den == std::vector<int>{4, 8, 20});
  CHECK_FALSE(pointwise_failure(steps_to_2(), 2).has_value());
}

TEST_CASE("sweeps are independent of the worker count") {
  SweepOptions one;
  one.resolution = BigRational(1, 1000);
  SweepOptions four = one;
  four.jobs = 4;
  const KahlerIntervalResult a = kahler_interval(2, one);
  const KahlerIntervalResult b = kahler_interval(2, four);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].lo == b.cells[i].lo);
    CHECK(a.cells[i].property == b.cells[i].property);
  }
  CHECK(a.inner == b.inner);
}

TEST_CASE("property: specialization commutes with the Ricci map") {
  Random rng(51);
  const auto& steps = steps_to_2();
  for (int i = 0; i < 10; ++i) {
    const BigRational a = ratio(1415, 1000) + ratio(rng.integer(0, 584), 1000);
    RadialDensity v = hessian_density(RadialLogPotential(Poly{1, a, 1}));
    CHECK(steps[0].at(a) == v.v());
    for (std::size_t k = 1; k < steps.size(); ++k) {
      v = *ricci(v);
      CHECK(steps[k].at(a) == v.v());
    }
  }
}

TEST_CASE("property: coefficient positivity implies pointwise Kahler") {
  Random rng(52);
  const auto& steps = steps_to_2();
  const BigRational lo(19, 10);
  const BigRational hi(2);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    REQUIRE(coeff_positivity_interval(steps[k].numerator, lo, hi).property == IntervalProperty::AllXCoeffsPositive);
  }
  for (int i = 0; i < 10; ++i) {
    const BigRational a = lo + ratio(rng.integer(0, 1000), 10000);
    CHECK_FALSE(pointwise_failure(steps, a).has_value());
    for (const auto& s : steps) CHECK(check_kahler_cp1(RadialDensity(s.at(a))).is_kahler());
  }
}
