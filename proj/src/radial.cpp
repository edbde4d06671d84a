#include "ricci_orbit/radial.hpp"

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

Poly d_op(const Poly& p) {
  const Poly x = Poly::x();
  const Poly dp = p.derivative();
  return dp * p + x * p.derivative().derivative() * p - x * dp * dp;
}

RadialDensity::RadialDensity(RatFunc v) : v_(std::move(v)) {
  if (v_.is_zero()) throw NotAMetric("density vanishes identically");
}

RadialLogPotential::RadialLogPotential(Poly f, Poly h) : f_(std::move(f)), h_(std::move(h)) {
  if (f_.coeff(0) != 1 || h_.coeff(0) != 1) throw InvalidInput("potential requires f(0) = h(0) = 1");
  if (gcd(f_, h_).degree() > 0) throw InvalidInput("potential requires gcd(f, h) = 1");
}

RadialLogPotential RadialLogPotential::normalized(const Poly& f, const Poly& h) {
  if (f.is_zero() || h.is_zero()) throw InvalidInput("potential with a zero polynomial");
  const Poly g = gcd(f, h);
  Poly fr = *exact_quotient(f, g);
  Poly hr = *exact_quotient(h, g);
  const BigRational f0 = fr.coeff(0);
  const BigRational h0 = hr.coeff(0);
  if (f0 == 0 || h0 == 0) throw InvalidInput("log potential is singular at the origin");
  return RadialLogPotential(fr * (1 / f0), hr * (1 / h0));
}

RadialDensity hessian_density(const RadialLogPotential& pot) {
  const Poly& f = pot.f();
  const Poly& h = pot.h();
  const Poly num = d_op(f) * h * h - d_op(h) * f * f;
  if (num.is_zero()) throw NotAMetric("potential is pluriharmonic");
  const Poly fh = f * h;
  return RadialDensity(RatFunc(num, fh * fh));
}

std::optional<RadialDensity> ricci(const RadialDensity& v) {
  const Poly& a = v.v().num();
  const Poly& b = v.v().den();
  const Poly da = d_op(a);
  const Poly db = d_op(b);
  const Poly a2 = a * a;
  const Poly b2 = b * b;
  const Poly num = (da * b2 - db * a2) * BigRational(-2);
  if (num.is_zero()) return std::nullopt;
  // gcd(a, b) = 1, so gcd(num, a^2 b^2) = gcd(D(a), a^2) gcd(D(b), b^2).
  const Poly ga = gcd(da, a2);
  const Poly gb = gcd(db, b2);
  const Poly g = ga * gb;
  return RadialDensity(RatFunc(*exact_quotient(num, g), *exact_quotient(a2, ga) * *exact_quotient(b2, gb)));
}

KahlerVerdict check_kahler_cp1(const RadialDensity& density) {
  const RatFunc& v = density.v();
  KahlerVerdict verdict;
  verdict.degree_gap = v.degree_gap();

  const PositivityReport num_sign = is_positive_on_nonneg_axis(v.num());
  if (num_sign.status == Positivity::NotNonNeg) {
    verdict.status = KahlerStatus::NotPositive;
    verdict.witness = *num_sign.negative_at;
    return verdict;
  }

  // The denominator is monic; a root in [0, inf) is a pole of v.
  if (v.den().degree() > 0) {
    if (v.den().coeff(0) == 0) {
      verdict.status = KahlerStatus::DegenerateAtFiniteX;
      verdict.pole = true;
      BigRational delta = 1;
      while (sturm_count_roots(v.den(), BigRational(-delta), BigRational(0)) != 1) delta /= 2;
      verdict.witness = IsolatingInterval{-delta, 0, 1};
      return verdict;
    }
    auto poles = isolate_positive_roots(v.den());
    if (!poles.empty()) {
      verdict.status = KahlerStatus::DegenerateAtFiniteX;
      verdict.pole = true;
      verdict.witness = poles.front();
      return verdict;
    }
  }

  if (num_sign.status == Positivity::NonNegWithZeros) {
    verdict.status = KahlerStatus::DegenerateAtFiniteX;
    verdict.witness = num_sign.zeros.front();
    return verdict;
  }

  // Leading ratio is positive here: num > 0 on [0, inf) and den is monic.
  if (verdict.degree_gap != 2) verdict.status = KahlerStatus::DegenerateAtInfinity;
  return verdict;
}

IterationOrbit iterate(const RadialDensity& v0, std::size_t k_max, IterationSign sign) {
  IterationOrbit orbit;
  orbit.densities.push_back(v0);
  orbit.verdicts.push_back(check_kahler_cp1(v0));
  if (!orbit.verdicts.back().is_kahler()) {
    orbit.halted_at = 0;
    orbit.halt_reason = HaltReason::NotKahler;
    return orbit;
  }
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto next = ricci(orbit.densities.back());
    if (!next) {
      orbit.halted_at = k;
      orbit.halt_reason = HaltReason::RicciFlat;
      return orbit;
    }
    const RadialDensity signed_form = sign == IterationSign::Plus ? *next : next->scaled(-1);
    orbit.densities.push_back(std::move(*next));
    orbit.verdicts.push_back(check_kahler_cp1(signed_form));
    if (!orbit.verdicts.back().is_kahler()) {
      orbit.halted_at = k;
      orbit.halt_reason = HaltReason::NotKahler;
      return orbit;
    }
  }
  return orbit;
}

std::optional<BigRational> is_einstein(const RadialDensity& v) {
  const auto w = ricci(v);
  if (!w) return BigRational(0);
  // Both sides are reduced with monic denominators, so w = lambda v forces
  // equal denominators and proportional numerators.
  const RatFunc& a = w->v();
  const RatFunc& b = v.v();
  if (a.den() != b.den() || a.num().degree() != b.num().degree()) return std::nullopt;
  const BigRational lambda = a.num().leading() / b.num().leading();
  if (a.num() != b.num() * lambda) return std::nullopt;
  return lambda;
}

}  // namespace ricci_orbit
