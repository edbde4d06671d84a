#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ricci_orbit/bivar.hpp"
#include "ricci_orbit/radial.hpp"

namespace ricci_orbit {

inline constexpr std::size_t kDefaultSizeLimit = 4'000'000;
inline constexpr unsigned kDefaultMaxIterate = 4;

// The paper family P_a = 1 + a x + x^2.
BivarPoly default_family();

struct DenominatorFactor {
  BivarPoly poly;  // primitive over Q[a]
  unsigned exponent = 0;
};

// Density of the k-th iterate over Q(a): numerator / prod factor^exponent.
struct SymbolicStep {
  BivarPoly numerator;
  std::vector<DenominatorFactor> factors;
  int raw_degree_num = 0;  // deg_x before trial division
  int raw_degree_den = 0;

  [[nodiscard]] BivarPoly denominator() const;
  [[nodiscard]] int denominator_degree_x() const;
  // Exact specialization, reduced to lowest terms.
  [[nodiscard]] RatFunc at(const BigRational& a) const;
};

// Steps 0..k for the family log P: step 0 is the density D(P)/P^2 and each
// later step is the Ricci density of the previous one. Common factors are
// removed by content extraction and trial division by the known
// denominator factors. Throws SizeLimitExceeded when an intermediate
// numerator exceeds size_limit stored coefficients.
std::vector<SymbolicStep> symbolic_iterate(unsigned k, const BivarPoly& family = default_family(),
                                           std::size_t size_limit = kDefaultSizeLimit);

enum class IntervalProperty { AllXCoeffsPositive, KahlerAtAllSamples, NotKahler, CoefficientNotPositive };

// Sturm evidence that one x-coefficient c(a) keeps its sign on [lo, hi].
struct CoefficientCertificate {
  bool family = false;  // coefficient of the family polynomial itself
  std::size_t iterate = 0;
  std::size_t x_power = 0;
  bool identically_zero = false;
  int variations_lo = 0;
  int variations_hi = 0;
  int roots_in_closed_interval = 0;
  BigRational sample;
  int sample_sign = 0;
};

struct Counterexample {
  BigRational a;
  std::size_t iterate = 0;
  std::optional<std::size_t> x_power;  // failing coefficient, if that is the witness
  std::optional<BigRational> x;        // point where the density is negative
  std::string description;
};

struct CertifiedInterval {
  BigRational lo;
  BigRational hi;
  IntervalProperty property = IntervalProperty::AllXCoeffsPositive;
  // NotKahler: the counterexample holds for every a in [lo, hi] (checked
  // exactly), not only at counterexample.a.
  bool whole_cell = false;
  std::vector<CoefficientCertificate> certificates;
  std::vector<BigRational> samples;  // KahlerAtAllSamples
  std::optional<Counterexample> counterexample;
};

// Certifies every x-coefficient of n positive on [lo, hi] (coefficients that
// vanish identically are tolerated except the constant and leading ones).
// On failure returns CoefficientNotPositive with a parameter value where a
// coefficient is <= 0.
CertifiedInterval coeff_positivity_interval(const BivarPoly& n, const BigRational& lo, const BigRational& hi);

// Exact sign of each x-coefficient at a = sqrt(d), via reduction modulo a^2 - d.
std::vector<int> coefficient_signs_at_sqrt(const BivarPoly& n, const BigRational& d);

struct SweepOptions {
  BigRational domain_lo = 0;
  BigRational domain_hi = 2;
  BigRational resolution = BigRational(1, 10000);
  unsigned initial_cells = 16;
  unsigned jobs = 1;
  std::size_t size_limit = kDefaultSizeLimit;
  BivarPoly family = default_family();
};

struct KahlerIntervalResult {
  unsigned k = 0;
  std::vector<CertifiedInterval> cells;  // ordered, covering the domain
  // Maximal runs of cells certified AllXCoeffsPositive or KahlerAtAllSamples.
  std::vector<std::pair<BigRational, BigRational>> inner;
  std::vector<CertifiedInterval> gaps;  // NotKahler cells
  std::vector<int> degrees_num;         // deg_x per step
  std::vector<int> degrees_den;
};

// Orbit verdict at one parameter value: the first iterate j <= k whose
// density is not Kahler, with its verdict; nullopt when all are Kahler.
std::optional<std::pair<std::size_t, KahlerVerdict>> pointwise_failure(const std::vector<SymbolicStep>& steps,
                                                                       const BigRational& a);

// Parameter values in the domain for which rho^0 .. rho^k are all Kahler.
KahlerIntervalResult kahler_interval(unsigned k, const SweepOptions& opts = {});

std::string to_string(IntervalProperty p);

}  // namespace ricci_orbit
