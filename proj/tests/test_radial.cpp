#include <doctest.h>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/radial.hpp"
#include "support.hpp"

using namespace ricci_orbit;
using ricci_orbit::testing::binomial_density;
using ricci_orbit::testing::Random;

namespace {

RadialDensity family_density(const BigRational& a) { return hessian_density(RadialLogPotential(Poly{1, a, 1})); }

RadialDensity first_iterate(const BigRational& a) { return *ricci(family_density(a)); }

}  // namespace

TEST_CASE("hessian density of log potentials") {
  CHECK(family_density(2).v() == binomial_density(2));
  CHECK(hessian_density(RadialLogPotential(Poly{1, 1})).v() == binomial_density(1));

  const BigRational a(3, 2);
  const RatFunc expected(Poly{a, 4, a}, Poly{1, a, 1}.pow(2));
  CHECK(family_density(a).v() == expected);

  CHECK_THROWS_AS(hessian_density(RadialLogPotential(Poly{1})), NotAMetric);
}

TEST_CASE("potential validation") {
  CHECK_THROWS_AS(RadialLogPotential(Poly{2, 1}), InvalidInput);
  CHECK_THROWS_AS(RadialLogPotential(Poly{1, 1}.pow(2), Poly{1, 1}), InvalidInput);
  const RadialLogPotential p = RadialLogPotential::normalized(Poly{2, 2}.pow(2), Poly{3, 3});
  CHECK(p.f() == Poly{1, 1});
  CHECK(p.h() == Poly{1});
  CHECK_THROWS_AS(RadialLogPotential::normalized(Poly{0, 1}, Poly{1}), InvalidInput);
}

TEST_CASE("ricci densities") {
  CHECK(ricci(RadialDensity(binomial_density(1)))->v() == binomial_density(4));

  const BigRational a(3, 2);
  const Poly A{a, 4, a};
  const Poly P{1, a, 1};
  const RatFunc expected(Poly{2} * (Poly{2} * A.pow(3) - Poly{4 * a} * P.pow(3)), A.pow(2) * P.pow(2));
  CHECK(first_iterate(a).v() == expected);

  CHECK(ricci(RadialDensity(binomial_density(1)).scaled(7))->v() == binomial_density(4));

  // Flat metric on the chart: constant density.
  CHECK_FALSE(ricci(RadialDensity(RatFunc::constant(1))).has_value());
}

TEST_CASE("Kahler verdicts") {
  const KahlerVerdict fs = check_kahler_cp1(RadialDensity(binomial_density(1)));
  CHECK(fs.status == KahlerStatus::Kahler);
  CHECK(fs.degree_gap == 2);

  CHECK(check_kahler_cp1(first_iterate(BigRational(3, 2))).is_kahler());

  const KahlerVerdict at_one = check_kahler_cp1(first_iterate(1));
  CHECK(at_one.status == KahlerStatus::NotPositive);
  REQUIRE(std::holds_alternative<BigRational>(at_one.witness));
  CHECK(std::get<BigRational>(at_one.witness) == 0);
  CHECK(first_iterate(1).v().eval(0) == -4);  // 2 * 2a(a^2 - 2) at a = 1

  // Zero at the origin.
  const KahlerVerdict zero_at_origin = check_kahler_cp1(RadialDensity(RatFunc(Poly{0, 1}, Poly{1, 1}.pow(3))));
  CHECK(zero_at_origin.status == KahlerStatus::DegenerateAtFiniteX);
  CHECK_FALSE(zero_at_origin.pole);

  const KahlerVerdict pole = check_kahler_cp1(RadialDensity(RatFunc(Poly{1}, Poly{-1, 1}.pow(2))));
  CHECK(pole.status == KahlerStatus::DegenerateAtFiniteX);
  CHECK(pole.pole);
  REQUIRE(std::holds_alternative<IsolatingInterval>(pole.witness));
  CHECK(std::get<IsolatingInterval>(pole.witness).lo < 1);
  CHECK(std::get<IsolatingInterval>(pole.witness).hi >= 1);

  const KahlerVerdict flat = check_kahler_cp1(RadialDensity(RatFunc::constant(1)));
  CHECK(flat.status == KahlerStatus::DegenerateAtInfinity);
  CHECK(flat.degree_gap == 0);
  CHECK(check_kahler_cp1(RadialDensity(RatFunc(Poly{1}, Poly{1, 1}.pow(3)))).status ==
        KahlerStatus::DegenerateAtInfinity);
  CHECK(check_kahler_cp1(RadialDensity(binomial_density(1)).scaled(-1)).status == KahlerStatus::NotPositive);
}

TEST_CASE("iteration orbits") {
  const IterationOrbit fixed = iterate(family_density(2), 3);
  REQUIRE(fixed.densities.size() == 4);
  CHECK(fixed.densities[0].v() == binomial_density(2));
  for (std::size_t k = 1; k < 4; ++k) CHECK(fixed.densities[k].v() == binomial_density(4));
  for (const auto& v : fixed.verdicts) CHECK(v.is_kahler());
  CHECK_FALSE(fixed.halted_at.has_value());
  CHECK(fixed.halt_reason == HaltReason::None);

  const IterationOrbit halts = iterate(family_density(1), 2);
  REQUIRE(halts.halted_at.has_value());
  CHECK(*halts.halted_at == 1);
  CHECK(halts.densities.size() == 2);
  CHECK(halts.verdicts.size() == 2);
  CHECK(halts.halt_reason == HaltReason::NotKahler);

  const IterationOrbit zero = iterate(family_density(BigRational(3, 2)), 0);
  CHECK(zero.densities.size() == 1);
  CHECK(zero.verdicts.size() == 1);
  CHECK(zero.verdicts[0].is_kahler());

  // -rho of the Fubini-Study form is negative, so the minus orbit halts
  // at the first Ricci step.
  const IterationOrbit minus = iterate(RadialDensity(binomial_density(1)), 2, IterationSign::Minus);
  REQUIRE(minus.halted_at.has_value());
  CHECK(*minus.halted_at == 1);
}

TEST_CASE("Einstein detection") {
  CHECK(is_einstein(RadialDensity(binomial_density(1))) == BigRational(4));
  CHECK(is_einstein(RadialDensity(binomial_density(2))) == BigRational(2));
  CHECK(is_einstein(RadialDensity(binomial_density(4))) == BigRational(1));
  CHECK_FALSE(is_einstein(first_iterate(BigRational(3, 2))).has_value());
  CHECK(is_einstein(RadialDensity(RatFunc::constant(3))) == BigRational(0));
}

TEST_CASE("property: scale invariance and log-additivity") {
  Random rng(21);
  for (int i = 0; i < 100; ++i) {
    const Poly f1 = rng.positive_poly(static_cast<int>(rng.integer(1, 4)), 5);
    const Poly f2 = rng.positive_poly(static_cast<int>(rng.integer(1, 4)), 5);
    const Poly h = rng.integer(0, 1) == 0 ? Poly{1} : Poly{1, BigRational(rng.integer(1, 6), 7)};
    const RadialDensity v = hessian_density(RadialLogPotential(f1));
    const BigRational c = rng.rational(1, 50, 7);
    CHECK(ricci(v.scaled(c)) == ricci(v));

    const auto lhs = hessian_density(RadialLogPotential::normalized(f1 * f2, h)).v();
    const auto rhs = hessian_density(RadialLogPotential::normalized(f1, h)).v() +
                     hessian_density(RadialLogPotential(f2)).v();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: D operator degree drop and value at the origin") {
  Random rng(22);
  for (int i = 0; i < 200; ++i) {
    const Poly p = rng.poly(static_cast<int>(rng.integer(1, 12)));
    const Poly d = d_op(p);
    CHECK(d.degree() <= 2 * p.degree() - 2);
    CHECK(d.coeff(0) == p.derivative().coeff(0) * p.coeff(0));
  }
}

TEST_CASE("property: Einstein densities are fixed after one step") {
  for (int n = 1; n <= 6; ++n) {
    const RadialDensity v(binomial_density(n));
    const auto lambda = is_einstein(v);
    REQUIRE(lambda.has_value());
    const IterationOrbit orbit = iterate(v, 4);
    REQUIRE(orbit.densities.size() == 5);
    CHECK(orbit.densities[1].v() == *lambda * v.v());
    for (std::size_t k = 2; k < orbit.densities.size(); ++k) CHECK(orbit.densities[k] == orbit.densities[1]);
  }
}

TEST_CASE("property: is_einstein matches the quotient definition") {
  Random rng(24);
  for (int i = 0; i < 60; ++i) {
    const Poly f = rng.positive_poly(static_cast<int>(rng.integer(1, 4)));
    RadialDensity v = hessian_density(RadialLogPotential(f));
    if (i % 3 == 0) v = RadialDensity(binomial_density(static_cast<int>(rng.integer(1, 6)), rng.rational(1, 9, 4)));
    if (i % 3 == 1) v = v.scaled(rng.rational(1, 9, 4));
    const auto w = ricci(v);
    const std::optional<BigRational> expected = w ? (w->v() / v.v()).constant_value() : BigRational(0);
    CHECK(is_einstein(v) == expected);
  }
}

TEST_CASE("property: Kahler verdicts agree with sampling") {
  Random rng(23);
  int kahler = 0;
  for (int i = 0; i < 40; ++i) {
    const RadialDensity v = hessian_density(RadialLogPotential(rng.positive_poly(static_cast<int>(rng.integer(2, 5)))));
    const auto w = ricci(v);
    for (const RadialDensity& d : {v, *w}) {
      if (!check_kahler_cp1(d).is_kahler()) continue;
      ++kahler;
      for (int s = 0; s < 1000; ++s) {
        const BigRational x = rng.rational(0, 1000000, static_cast<long>(rng.integer(1, 1000)));
        CHECK(d.v().eval(x) > 0);
      }
    }
  }
  CHECK(kahler > 40);
}
