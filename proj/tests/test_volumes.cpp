#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/inducedness.hpp"
#include "ricci_orbit/volumes.hpp"
#include "support.hpp"

using namespace ricci_orbit;
using ricci_orbit::testing::binomial_density;
using ricci_orbit::testing::Random;

namespace {

const HighPrec kPi = boost::math::constants::pi<HighPrec>();

RadialDensity family_density(const BigRational& a) { return hessian_density(RadialLogPotential(Poly{1, a, 1})); }

}  // namespace

TEST_CASE("symplectic volumes") {
  const VolumeReport fs = symplectic_volume(RadialDensity(binomial_density(1)));
  REQUIRE(fs.finite);
  CHECK(abs(fs.value - kPi) <= HighPrec("1e-9"));
  CHECK(fs.abs_error_bound <= HighPrec("1e-9"));
  CHECK(fs.tail_cut > 0);

  CHECK_FALSE(symplectic_volume(RadialDensity(RatFunc::constant(1))).finite);
  CHECK_FALSE(symplectic_volume(RadialDensity(RatFunc(Poly{1}, Poly{1, 1}))).finite);

  const VolumeReport ric = symplectic_volume(*ricci(family_density(BigRational(3, 2))));
  REQUIRE(ric.finite);
  CHECK(abs(ric.value - 4 * kPi) <= HighPrec("1e-9"));

  CHECK_THROWS_AS(symplectic_volume(*ricci(family_density(1))), InvalidInput);
  CHECK_THROWS_AS(symplectic_volume(RadialDensity(RatFunc(Poly{1}, Poly{-1, 1}.pow(2)))), InvalidInput);
}

TEST_CASE("chern check") {
  CHECK(chern_check(RadialDensity(binomial_density(1))) <= HighPrec("1e-9"));
  CHECK(chern_check(family_density(BigRational(3, 2))) <= HighPrec("1e-6"));
  CHECK(chern_check(family_density(BigRational(7, 4))) <= HighPrec("1e-6"));
  CHECK_THROWS_AS(chern_check(*ricci(family_density(1))), InvalidInput);
}

TEST_CASE("Euclidean volumes") {
  const EuclideanVolumeVerdict fs = euclidean_volume(RadialLogPotential(Poly{1, 1}), true);
  CHECK(fs.infinite);
  CHECK(fs.basis == EuclideanBasis::BochnerChartCoversPlane);
  REQUIRE(fs.literal_integral.has_value());
  CHECK(abs(fs.literal_integral->value - kPi) <= HighPrec("1e-9"));

  const EuclideanVolumeVerdict disc = euclidean_volume(RadialLogPotential(Poly{1}, Poly{1, -1}), false);
  CHECK_FALSE(disc.infinite);
  REQUIRE(disc.value.has_value());
  CHECK(abs(*disc.value - kPi) <= HighPrec("1e-30"));
  CHECK_FALSE(disc.literal_integral.has_value());

  // Ricci potential of the a = 3/2 member: the literal integral converges to
  // 4 pi while the definitional verdict stays infinite.
  const RadialLogPotential g1 = ricci_potential(RadialLogPotential(Poly{1, BigRational(3, 2), 1}));
  const EuclideanVolumeVerdict v = euclidean_volume(g1, true);
  CHECK(v.infinite);
  REQUIRE(v.literal_integral.has_value());
  REQUIRE(v.literal_integral->finite);
  CHECK(abs(v.literal_integral->value - 4 * kPi) <= HighPrec("1e-9"));
}

TEST_CASE("property: tail cut doubling stays within the tail bound") {
  for (const BigRational a : {BigRational(3, 2), BigRational(7, 4), BigRational(19, 10)}) {
    const RadialDensity w = *ricci(family_density(a));
    const VolumeReport r = symplectic_volume(w);
    REQUIRE(r.finite);
    const HighPrec to_cut = partial_volume(w, r.tail_cut);
    const HighPrec to_double = partial_volume(w, r.tail_cut * 2);
    CHECK(abs(to_double - to_cut) <= abs(r.value - to_cut) + r.abs_error_bound);
    CHECK(abs(to_double - to_cut) > 0);
  }
}

TEST_CASE("property: partial volumes grow without bound for degree gap below 2") {
  const RadialDensity flat(RatFunc::constant(1));
  CHECK(partial_volume(flat, BigRational(1000000)) / kPi > HighPrec(999999));
  const RadialDensity slow(RatFunc(Poly{1, 1, 1}, Poly{1, 1}.pow(3)));
  CHECK(slow.v().degree_gap() == 1);
  CHECK(partial_volume(slow, BigRational(BigInteger("1000000000000"))) > HighPrec(25));
  CHECK(partial_volume(RadialDensity(RatFunc(Poly{0, 1})), BigRational(2000)) > HighPrec(1000000));
}

TEST_CASE("property: volume is linear in the density") {
  Random rng(41);
  for (int i = 0; i < 10; ++i) {
    const RadialDensity v = hessian_density(RadialLogPotential(rng.positive_poly(static_cast<int>(rng.integer(1, 4)))));
    const BigRational c = rng.rational(1, 40, 9);
    const VolumeReport base = symplectic_volume(v);
    const VolumeReport scaled = symplectic_volume(v.scaled(c));
    CHECK(abs(scaled.value - to_high_prec(c) * base.value) <= HighPrec("1e-9"));
  }
}

TEST_CASE("property: chern residual on random Kahler potentials") {
  Random rng(42);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 20; ++i) {
    const RadialDensity v = hessian_density(RadialLogPotential(rng.positive_poly(static_cast<int>(rng.integer(1, 5)))));
    if (!check_kahler_cp1(v).is_kahler()) continue;
    CHECK(chern_check(v) <= HighPrec("1e-6"));
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(HighPrec(1) / 4, 5) == "0.25000");
  CHECK(to_decimal(-HighPrec("1e-40"), 5) == "0.00000");
  CHECK(to_decimal(kPi, 10) == "3.1415926536");
}
