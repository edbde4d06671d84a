#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ricci_orbit/ratfunc.hpp"
#include "ricci_orbit/sturm.hpp"

namespace ricci_orbit {

// Every form is written as omega = (i/2) v(x) dz ^ dzbar with x = |z|^2 on
// the affine chart {z0 != 0} of CP^1. A density is the rational function v.
//
// For a radial potential phi(x) the density of (i/2) ddbar(phi) is
// (x phi')'. For phi = log P this is d_op(P) / P^2.

// D(P) = P' P + x P'' P - x (P')^2.
Poly d_op(const Poly& p);

// Nonzero density of a radial (1,1)-form.
class RadialDensity {
 public:
  // Throws NotAMetric when v is identically zero.
  explicit RadialDensity(RatFunc v);

  [[nodiscard]] const RatFunc& v() const { return v_; }
  [[nodiscard]] RadialDensity scaled(const BigRational& c) const { return RadialDensity(c * v_); }

  friend bool operator==(const RadialDensity&, const RadialDensity&) = default;

 private:
  RatFunc v_;
};

// Potential phi(x) = log(f(x) / h(x)) with f(0) = h(0) = 1 and gcd(f, h) = 1.
// The normalization makes phi vanish at the origin; a radial function of
// x = |z|^2 never carries purely holomorphic terms, so phi is of diastasis
// type as soon as phi(0) = 0.
class RadialLogPotential {
 public:
  // Throws InvalidInput unless the invariants already hold.
  RadialLogPotential(Poly f, Poly h);
  explicit RadialLogPotential(Poly f) : RadialLogPotential(std::move(f), Poly::constant(1)) {}

  // Divides out gcd(f, h) and rescales both to value 1 at the origin.
  // Throws InvalidInput when f or h vanishes at 0 after cancellation.
  static RadialLogPotential normalized(const Poly& f, const Poly& h);

  [[nodiscard]] const Poly& f() const { return f_; }
  [[nodiscard]] const Poly& h() const { return h_; }

  friend bool operator==(const RadialLogPotential&, const RadialLogPotential&) = default;

 private:
  Poly f_;
  Poly h_;
};

// v = (D(f) h^2 - D(h) f^2) / (f h)^2. Throws NotAMetric if v = 0.
RadialDensity hessian_density(const RadialLogPotential& pot);

// Density w of the Ricci form rho = -i ddbar log v = (i/2) w dz ^ dzbar:
// for v = A/B, w = -2 (D(A) B^2 - D(B) A^2) / (A B)^2.
// nullopt means w vanishes identically (Ricci-flat).
std::optional<RadialDensity> ricci(const RadialDensity& v);

enum class KahlerStatus { Kahler, DegenerateAtFiniteX, DegenerateAtInfinity, NotPositive };

struct KahlerVerdict {
  KahlerStatus status = KahlerStatus::Kahler;
  int degree_gap = 0;
  // NotPositive: a rational x >= 0 with v(x) < 0.
  // DegenerateAtFiniteX: isolating interval of a zero or pole in [0, inf).
  std::variant<std::monostate, BigRational, IsolatingInterval> witness;
  // DegenerateAtFiniteX: whether the witness locates a pole (else a zero).
  bool pole = false;

  [[nodiscard]] bool is_kahler() const { return status == KahlerStatus::Kahler; }
};

// Decides whether omega extends to a Kahler form on CP^1: v > 0 on [0, inf)
// without poles, and deg(den) - deg(num) = 2 with positive leading ratio so
// that v(1/y)/y^2 extends positively through y = 0.
KahlerVerdict check_kahler_cp1(const RadialDensity& v);

enum class IterationSign { Plus, Minus };

enum class HaltReason { None, NotKahler, RicciFlat };

struct IterationOrbit {
  std::vector<RadialDensity> densities;  // rho^0 .. rho^k
  std::vector<KahlerVerdict> verdicts;   // one per density, sign applied for k >= 1
  std::optional<std::size_t> halted_at;
  HaltReason halt_reason = HaltReason::None;
};

// rho^0 = v0, rho^k = Ric(rho^{k-1}) while +-rho^l stays Kahler.
IterationOrbit iterate(const RadialDensity& v0, std::size_t k_max, IterationSign sign = IterationSign::Plus);

// lambda with Ric(v) = lambda v, if any. Ricci-flat gives lambda = 0.
std::optional<BigRational> is_einstein(const RadialDensity& v);

}  // namespace ricci_orbit
