#include "ricci_orbit/inducedness.hpp"

#include <algorithm>

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

bool EmbeddingData::full() const {
  return std::all_of(alphas_squared.begin(), alphas_squared.end(), [](const BigRational& a) { return a > 0; });
}

InducedVerdict is_projectively_induced_radial(const RadialLogPotential& pot) {
  InducedVerdict verdict;
  // gcd(f, h) = 1 and h(0) = 1, so f/h is a polynomial iff h = 1.
  if (pot.h().degree() > 0) {
    verdict.reason = InducedReason::NotPolynomial;
    return verdict;
  }
  const Poly& q = pot.f();
  if (q.degree() <= 0) {
    verdict.reason = InducedReason::ZeroForm;
    return verdict;
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q.coeffs()[j] < 0) {
      verdict.reason = InducedReason::NegativeCoefficient;
      verdict.negative_index = j;
      return verdict;
    }
  }
  EmbeddingData data;
  data.n = static_cast<std::size_t>(q.degree());
  data.alphas_squared.assign(q.coeffs().begin(), q.coeffs().end());
  verdict.embedding = std::move(data);
  return verdict;
}

std::optional<BinomialMatch> binomial_test(const Poly& q) {
  if (q.coeff(0) != 1) throw InvalidInput("binomial test needs Q(0) = 1");
  if (q.degree() <= 0) return std::nullopt;
  const auto n = static_cast<unsigned>(q.degree());
  const BigRational c = q.coeff(1) / n;
  if (c == 0) return std::nullopt;
  if (Poly{1, c}.pow(n) != q) return std::nullopt;
  return BinomialMatch{n, c};
}

RadialLogPotential ricci_potential(const RadialLogPotential& pot) {
  const RadialDensity v = hessian_density(pot);
  const Poly& a = v.v().num();
  const Poly& b = v.v().den();
  if (a.coeff(0) == 0 || b.coeff(0) == 0) {
    throw NonPositiveAtOrigin("density degenerates at the origin; no normalized Ricci potential");
  }
  const auto w = ricci(v);
  if (!w || w->v().den().coeff(0) == 0 || w->v().eval(0) <= 0) {
    throw NonPositiveAtOrigin("Ricci density is not positive at the origin");
  }
  const Poly bn = b * (1 / b.coeff(0));
  const Poly an = a * (1 / a.coeff(0));
  return RadialLogPotential::normalized(bn * bn, an * an);
}

BochnerScale bochner_scale(const RadialLogPotential& pot) {
  const BigRational c = pot.f().coeff(1) - pot.h().coeff(1);
  if (c <= 0) throw NonPositiveAtOrigin("metric is not positive at the origin (c <= 0)");
  const BigRational inv = 1 / c;
  return {c, RadialLogPotential(pot.f().compose_linear(inv, 0), pot.h().compose_linear(inv, 0))};
}

}  // namespace ricci_orbit
