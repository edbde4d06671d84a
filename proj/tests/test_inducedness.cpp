#include <doctest.h>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/inducedness.hpp"
#include "support.hpp"

using namespace ricci_orbit;
using ricci_orbit::testing::Random;

namespace {

std::vector<BigRational> binomial_row(unsigned n) {
  std::vector<BigRational> row;
  BigInteger c = 1;
  for (unsigned j = 0; j <= n; ++j) {
    row.emplace_back(c);
    c = c * (n - j) / (j + 1);
  }
  return row;
}

bool is_binomial_power(const Poly& p) {
  const auto m = binomial_test(p);
  return m.has_value();
}

}  // namespace

TEST_CASE("projective inducedness of radial potentials") {
  const InducedVerdict quartic = is_projectively_induced_radial(RadialLogPotential(Poly{1, 1}.pow(4)));
  REQUIRE(quartic.induced());
  CHECK(quartic.embedding->n == 4);
  CHECK(quartic.embedding->alphas_squared == binomial_row(4));
  CHECK(quartic.embedding->full());

  const InducedVerdict cubic = is_projectively_induced_radial(RadialLogPotential(Poly{1, 0, 0, 1}));
  REQUIRE(cubic.induced());
  CHECK(cubic.embedding->alphas_squared == std::vector<BigRational>{1, 0, 0, 1});
  CHECK_FALSE(cubic.embedding->full());

  const BigRational a(3, 2);
  const Poly P{1, a, 1};
  const InducedVerdict ricci_pot = is_projectively_induced_radial(ricci_potential(RadialLogPotential(P)));
  CHECK_FALSE(ricci_pot.induced());
  CHECK(ricci_pot.reason == InducedReason::NotPolynomial);

  const InducedVerdict negative = is_projectively_induced_radial(RadialLogPotential(Poly{1, 3, -1, 1}));
  CHECK(negative.reason == InducedReason::NegativeCoefficient);
  CHECK(negative.negative_index == 2);

  // Rational potentials that reduce to polynomials are accepted.
  const InducedVerdict reduced =
      is_projectively_induced_radial(RadialLogPotential::normalized(Poly{1, 1}.pow(3), Poly{1, 1}));
  REQUIRE(reduced.induced());
  CHECK(reduced.embedding->n == 2);
}

TEST_CASE("binomial test") {
  const auto cubic = binomial_test(Poly{1, 3, 3, 1});
  REQUIRE(cubic.has_value());
  CHECK(cubic->n == 3);
  CHECK(cubic->scale == 1);
  const auto square = binomial_test(Poly{1, 2, 1});
  REQUIRE(square.has_value());
  CHECK(square->n == 2);
  CHECK_FALSE(binomial_test(Poly{1, BigRational(3, 2), 1}).has_value());
  CHECK_THROWS_AS(binomial_test(Poly{2, 1}), InvalidInput);

  const auto scaled = binomial_test(Poly{1, 2}.pow(3));
  REQUIRE(scaled.has_value());
  CHECK(scaled->n == 3);
  CHECK(scaled->scale == 2);
  CHECK(binomial_test(Poly{1})->n == 0);
}

TEST_CASE("Ricci potentials") {
  // rho(omega_FS) = 4 omega_FS: potential log (1 + x)^4.
  const RadialLogPotential fs(Poly{1, 1});
  const RadialLogPotential rfs = ricci_potential(fs);
  CHECK(rfs.f() == Poly{1, 1}.pow(4));
  CHECK(rfs.h() == Poly{1});

  // Family: (1 + a x + x^2)^4 / ((a + 4x + a x^2) / a)^2.
  const BigRational a(3, 2);
  const Poly P{1, a, 1};
  const Poly A{1, 4 / a, 1};
  const RadialLogPotential r = ricci_potential(RadialLogPotential(P));
  CHECK(r.f() == P.pow(4));
  CHECK(r.h() == A.pow(2));
  CHECK(hessian_density(r) == *ricci(hessian_density(RadialLogPotential(P))));

  CHECK_THROWS_AS(ricci_potential(RadialLogPotential(Poly{1, 1, 1})), NonPositiveAtOrigin);
}

TEST_CASE("Bochner scale") {
  const BochnerScale two = bochner_scale(RadialLogPotential(Poly{1, 2, 1}));
  CHECK(two.c == 2);
  CHECK(two.normalized_potential.f() == Poly{1, 1, BigRational(1, 4)});
  CHECK(bochner_scale(RadialLogPotential(Poly{1, 1})).c == 1);
  CHECK(bochner_scale(RadialLogPotential(Poly{1, 1}.pow(4))).c == 4);
  CHECK(bochner_scale(RadialLogPotential(Poly{1}, Poly{1, -1})).c == 1);
  CHECK_THROWS_AS(bochner_scale(RadialLogPotential(Poly{1, 0, 1})), NonPositiveAtOrigin);
  CHECK_THROWS_AS(bochner_scale(RadialLogPotential(Poly{1, -1})), NonPositiveAtOrigin);
}

TEST_CASE("property: Ricci potential round-trip") {
  Random rng(31);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 20; ++i) {
    const Poly f = rng.positive_poly(static_cast<int>(rng.integer(1, 5)), 6);
    const Poly h = rng.integer(0, 1) == 0 ? Poly{1} : Poly{1, BigRational(rng.integer(1, 3), 7)};
    const auto pot = RadialLogPotential::normalized(f, h);
    const auto w = ricci(hessian_density(pot));
    if (!w || w->v().eval(0) <= 0 || hessian_density(pot).v().eval(0) <= 0) continue;
    const RadialLogPotential r = ricci_potential(pot);
    CHECK(r.f().coeff(0) == 1);
    CHECK(r.h().coeff(0) == 1);
    CHECK(hessian_density(r) == *w);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("property: embeddings reproduce the density") {
  Random rng(32);
  for (int i = 0; i < 50; ++i) {
    const Poly q = rng.positive_poly(static_cast<int>(rng.integer(1, 6)));
    const Poly h = Poly{1, BigRational(rng.integer(1, 4))};
    const auto pot = RadialLogPotential::normalized(q * h, h);
    const InducedVerdict v = is_projectively_induced_radial(pot);
    REQUIRE(v.induced());
    const Poly back(v.embedding->alphas_squared);
    CHECK(hessian_density(RadialLogPotential(back)) == hessian_density(pot));
  }
}

TEST_CASE("property: only binomial powers have induced Ricci potentials") {
  Random rng(33);
  for (unsigned n = 2; n <= 6; ++n) {
    const RadialLogPotential binomial(Poly{1, 1}.pow(n));
    const InducedVerdict v = is_projectively_induced_radial(ricci_potential(binomial));
    REQUIRE(v.induced());
    CHECK(v.embedding->alphas_squared == binomial_row(4));
    CHECK(binomial_test(binomial.f())->n == n);

    int tested = 0;
    while (tested < 25) {
      const Poly p = rng.positive_poly(static_cast<int>(n), 9);
      if (is_binomial_power(p)) continue;
      const RadialLogPotential pot(p);
      const auto w = ricci(hessian_density(pot));
      if (!w || w->v().eval(0) <= 0) continue;
      CHECK(is_projectively_induced_radial(ricci_potential(pot)).reason == InducedReason::NotPolynomial);
      ++tested;
    }
  }
}

TEST_CASE("property: Bochner normalization is idempotent") {
  Random rng(34);
  for (int i = 0; i < 30; ++i) {
    const RadialLogPotential pot(rng.positive_poly(static_cast<int>(rng.integer(1, 5))));
    const BochnerScale once = bochner_scale(pot);
    const BochnerScale twice = bochner_scale(once.normalized_potential);
    CHECK(twice.c == 1);
    CHECK(twice.normalized_potential == once.normalized_potential);
    CHECK(once.normalized_potential.f().coeff(0) == 1);
  }
}
