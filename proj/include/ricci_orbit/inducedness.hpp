#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ricci_orbit/radial.hpp"

namespace ricci_orbit {

// Monomial embedding z -> [alpha_0 : alpha_1 z : ... : alpha_n z^n] of CP^1
// into CP^n, recorded through a_j = |alpha_j|^2. The induced potential is
// log(sum_j a_j x^j).
struct EmbeddingData {
  std::size_t n = 0;
  std::vector<BigRational> alphas_squared;
  // Every a_j > 0, i.e. the map is linearly full.
  [[nodiscard]] bool full() const;
};

enum class InducedReason { Induced, NotPolynomial, NegativeCoefficient, ZeroForm };

struct InducedVerdict {
  InducedReason reason = InducedReason::Induced;
  std::optional<EmbeddingData> embedding;
  std::size_t negative_index = 0;  // NegativeCoefficient only

  [[nodiscard]] bool induced() const { return embedding.has_value(); }
};

// A radial potential log(f/h) comes from a monomial map into CP^n exactly
// when f/h reduces to a polynomial Q with nonnegative coefficients
// (Q(0) = 1 holds by normalization).
InducedVerdict is_projectively_induced_radial(const RadialLogPotential& pot);

struct BinomialMatch {
  unsigned n = 0;
  BigRational scale;  // Q = (1 + scale x)^n
};

// Detects Q = (1 + c x)^n; c = 1 is the metric n g_FS. Throws InvalidInput
// unless Q(0) = 1.
std::optional<BinomialMatch> binomial_test(const Poly& q);

// Diastasis-normalized potential of the Ricci form: for v = A/B reduced,
// log(B^2 A(0)^2 / (A^2 B(0)^2)), so hessian_density(result) = ricci(v).
// Throws NonPositiveAtOrigin unless v and its Ricci density are finite and
// positive at x = 0.
RadialLogPotential ricci_potential(const RadialLogPotential& pot);

struct BochnerScale {
  BigRational c;
  RadialLogPotential normalized_potential;
};

// Radial Bochner coordinate w = sqrt(c) z with c = f'(0) - h'(0), the
// coefficient of x in the expansion of the potential. The returned
// potential is phi(x / c). Throws NonPositiveAtOrigin when c <= 0.
BochnerScale bochner_scale(const RadialLogPotential& pot);

}  // namespace ricci_orbit
