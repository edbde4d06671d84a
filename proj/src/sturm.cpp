#include "ricci_orbit/sturm.hpp"

#include <algorithm>

#include "intpoly.hpp"
#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

namespace {

int sign_at(const Poly& p, const ExtendedRational& at) {
  if (p.is_zero()) return 0;
  switch (at.kind) {
    case ExtendedRational::Kind::PosInfinity:
      return sgn(p.leading());
    case ExtendedRational::Kind::NegInfinity:
      return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
    case ExtendedRational::Kind::Finite:
      break;
  }
  return sgn(p.eval(at.value));
}

// Sign changes in the coefficient sequence; an upper bound on the number of
// positive roots with the same parity.
int descartes_variations(const Poly& p) {
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

bool operator<(const ExtendedRational& lhs, const ExtendedRational& rhs) {
  using K = ExtendedRational::Kind;
  if (lhs.kind == K::Finite && rhs.kind == K::Finite) return lhs.value < rhs.value;
  if (lhs.kind == rhs.kind) return false;
  return lhs.kind == K::NegInfinity || rhs.kind == K::PosInfinity;
}

// Each element is a positive multiple of the classical Sturm sequence
// p, p', -rem(p, p'), ..., computed over Z with positive scalings only.
SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("Sturm chain of the zero polynomial");
  ints_.push_back(detail::to_primitive_ints(p));
  if (p.degree() > 0) ints_.push_back(detail::to_primitive_ints(p.derivative()));
  while (ints_.size() >= 2 && ints_.back().size() > 1) {
    detail::IntPoly next = detail::signed_remainder(ints_[ints_.size() - 2], ints_.back());
    if (next.empty()) break;
    for (auto& v : next) v = -v;
    ints_.push_back(std::move(next));
  }
  chain_.reserve(ints_.size());
  chain_.push_back(p);
  for (std::size_t i = 1; i < ints_.size(); ++i) chain_.push_back(detail::from_ints(ints_[i]));
}

int SturmChain::variations(const ExtendedRational& at) const {
  int changes = 0;
  int last = 0;
  for (std::size_t i = 0; i < ints_.size(); ++i) {
    const int s = at.kind == ExtendedRational::Kind::Finite
                      ? detail::sign_at(ints_[i], at.value.get_num(), at.value.get_den())
                      : sign_at(chain_[i], at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const ExtendedRational& lo, const ExtendedRational& hi) const {
  return variations(lo) - variations(hi);
}

int sturm_count_roots(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi) {
  if (p.is_zero()) throw InvalidInput("root count of the zero polynomial");
  if (!(lo < hi)) throw InvalidInput("root count needs lo < hi");
  if (p.degree() == 0) return 0;
  return SturmChain(square_free_part(p)).count(lo, hi);
}

BigRational root_bound(const Poly& p) {
  if (p.degree() <= 0) return 1;
  BigRational m = 0;
  const BigRational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    m = std::max(m, BigRational(abs(p.coeffs()[static_cast<std::size_t>(i)]) / lead));
  }
  return m + 1;
}

namespace {

void isolate(const SturmChain& chain, const BigRational& lo, int v_lo, const BigRational& hi, int v_hi,
             std::vector<IsolatingInterval>& out) {
  const int n = v_lo - v_hi;
  if (n <= 0) return;
  if (n == 1) {
    out.push_back({lo, hi, 1});
    return;
  }
  const BigRational mid = (lo + hi) / 2;
  const int v_mid = chain.variations(mid);
  isolate(chain, lo, v_lo, mid, v_mid, out);
  isolate(chain, mid, v_mid, hi, v_hi, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const Poly& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero()) throw InvalidInput("root isolation of the zero polynomial");
  if (!(lo < hi)) throw InvalidInput("root isolation needs lo < hi");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0) return out;
  const SturmChain chain(square_free_part(p));
  isolate(chain, lo, chain.variations(lo), hi, chain.variations(hi), out);
  return out;
}

std::vector<IsolatingInterval> isolate_positive_roots(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("root isolation of the zero polynomial");
  if (descartes_variations(p) == 0) return {};
  return isolate_roots(p, 0, root_bound(p));
}

IsolatingInterval refine(const SturmChain& chain, IsolatingInterval iv, const BigRational& max_width) {
  int v_lo = chain.variations(iv.lo);
  while (iv.hi - iv.lo > max_width) {
    const BigRational mid = (iv.lo + iv.hi) / 2;
    const int v_mid = chain.variations(mid);
    if (v_lo - v_mid >= 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
      v_lo = v_mid;
    }
  }
  return iv;
}

PositivityReport is_positive_on_nonneg_axis(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("positivity of the zero polynomial");
  PositivityReport report;
  const BigRational at_zero = p.coeff(0);
  if (at_zero < 0) {
    report.status = Positivity::NotNonNeg;
    report.negative_at = BigRational(0);
    return report;
  }
  if (p.leading() < 0) {
    report.status = Positivity::NotNonNeg;
    report.negative_at_infinity = true;
    // Past the root bound the sign is the leading sign.
    report.negative_at = root_bound(p);
    return report;
  }
  if (p.degree() == 0) return report;
  if (at_zero > 0 && descartes_variations(p) == 0) return report;

  const Poly sqf = square_free_part(p);
  const SturmChain chain(sqf);
  const BigRational bound = root_bound(p);
  std::vector<IsolatingInterval> roots;
  isolate(chain, 0, chain.variations(BigRational(0)), bound, chain.variations(bound), roots);

  if (roots.empty() && at_zero > 0) return report;

  // Separate the isolating intervals strictly so that one rational sample
  // between consecutive roots sees the sign of p on that whole gap.
  for (std::size_t i = 0; i < roots.size(); ++i) {
    while (roots[i].lo == 0 || (i + 1 < roots.size() && roots[i].hi >= roots[i + 1].lo)) {
      roots[i] = refine(chain, roots[i], (roots[i].hi - roots[i].lo) / 2);
      if (i + 1 < roots.size()) roots[i + 1] = refine(chain, roots[i + 1], (roots[i + 1].hi - roots[i + 1].lo) / 2);
    }
  }
  std::vector<BigRational> samples;
  if (!roots.empty()) samples.push_back(roots.front().lo);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  samples.push_back(bound);
  for (const auto& x : samples) {
    if (p.eval(x) < 0) {
      report.status = Positivity::NotNonNeg;
      report.negative_at = x;
      return report;
    }
  }

  report.status = Positivity::NonNegWithZeros;
  if (at_zero == 0) {
    BigRational delta = 1;
    while (sturm_count_roots(p, BigRational(-delta), BigRational(0)) != 1) delta /= 2;
    report.zeros.push_back({-delta, 0, 1});
  }
  report.zeros.insert(report.zeros.end(), roots.begin(), roots.end());
  return report;
}

std::pair<BigRational, BigRational> eval_mod_quadratic(const Poly& p, const Poly& m) {
  if (m.degree() != 2 || m.leading() != 1) throw InvalidInput("modulus must be a monic quadratic");
  const Poly r = divrem(p, m).remainder;
  return {r.coeff(0), r.coeff(1)};
}

int sign_at_sqrt(const BigRational& c0, const BigRational& c1, const BigRational& d) {
  if (d <= 0) throw InvalidInput("sign_at_sqrt needs d > 0");
  const int s0 = sgn(c0);
  const int s1 = sgn(c1);
  if (s1 == 0) return s0;
  if (s0 == 0 || s0 == s1) return s1;
  // Opposite signs: compare c0^2 with d*c1^2.
  const BigRational lhs = c0 * c0;
  const BigRational rhs = d * c1 * c1;
  if (lhs == rhs) return 0;
  return lhs > rhs ? s0 : s1;
}

}  // namespace ricci_orbit
