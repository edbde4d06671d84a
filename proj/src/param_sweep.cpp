#include "ricci_orbit/param_sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

BivarPoly default_family() { return BivarPoly({Poly{1}, Poly{0, 1}, Poly{1}}); }

BivarPoly SymbolicStep::denominator() const {
  BivarPoly den = BivarPoly::constant(Poly::constant(1));
  for (const auto& f : factors) den = den * f.poly.pow(f.exponent);
  return den;
}

int SymbolicStep::denominator_degree_x() const {
  int d = 0;
  for (const auto& f : factors) d += f.poly.degree_x() * static_cast<int>(f.exponent);
  return d;
}

RatFunc SymbolicStep::at(const BigRational& a) const {
  Poly den = Poly::constant(1);
  for (const auto& f : factors) den *= f.poly.at_a(a).pow(f.exponent);
  return RatFunc(numerator.at_a(a), std::move(den));
}

namespace {

void check_size(const BivarPoly& p, std::size_t limit) {
  if (p.term_count() > limit) {
    throw SizeLimitExceeded("symbolic numerator has " + std::to_string(p.term_count()) +
                            " coefficients, limit is " + std::to_string(limit));
  }
}

void trial_reduce(SymbolicStep& step) {
  for (auto& f : step.factors) {
    while (f.exponent > 0) {
      auto q = exact_quotient(step.numerator, f.poly);
      if (!q) break;
      step.numerator = std::move(*q);
      --f.exponent;
    }
  }
  std::erase_if(step.factors, [](const DenominatorFactor& f) { return f.exponent == 0; });
}

void add_factor(std::vector<DenominatorFactor>& factors, const BivarPoly& poly, unsigned exponent) {
  if (poly.degree_x() < 1) return;
  for (auto& f : factors) {
    if (f.poly == poly) {
      f.exponent += exponent;
      return;
    }
  }
  factors.push_back({poly, exponent});
}

SymbolicStep ricci_step(const SymbolicStep& prev, std::size_t size_limit) {
  const BivarPoly n = primitive_part(prev.numerator);
  const auto& fs = prev.factors;

  std::vector<BivarPoly> squares;
  squares.reserve(fs.size());
  for (const auto& f : fs) squares.push_back(f.poly * f.poly);

  BivarPoly all_squares = BivarPoly::constant(Poly::constant(1));
  for (const auto& s : squares) all_squares = all_squares * s;

  BivarPoly sum;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    BivarPoly term = d_op(fs[i].poly) * BigRational(fs[i].exponent);
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (j != i) term = term * squares[j];
    }
    sum += term;
  }

  SymbolicStep step;
  step.numerator = (d_op(n) * all_squares - n * n * sum) * BigRational(-2);
  check_size(step.numerator, size_limit);
  add_factor(step.factors, n, 2);
  for (const auto& f : fs) add_factor(step.factors, f.poly, 2);
  step.raw_degree_num = step.numerator.degree_x();
  step.raw_degree_den = step.denominator_degree_x();
  trial_reduce(step);
  return step;
}

CoefficientCertificate certify_coefficient(const Poly& c, const BigRational& lo, const BigRational& hi) {
  CoefficientCertificate cert;
  cert.sample = (lo + hi) / 2;
  if (c.is_zero()) {
    cert.identically_zero = true;
    return cert;
  }
  cert.sample_sign = sgn(c.eval(cert.sample));
  if (c.degree() == 0) return cert;
  const SturmChain chain(square_free_part(c));
  cert.variations_lo = chain.variations(lo);
  cert.variations_hi = chain.variations(hi);
  cert.roots_in_closed_interval = cert.variations_lo - cert.variations_hi + (c.eval(lo) == 0 ? 1 : 0);
  return cert;
}

bool certifies_positive(const CoefficientCertificate& c) {
  return !c.identically_zero && c.roots_in_closed_interval == 0 && c.sample_sign > 0;
}

// A parameter value in [lo, hi] where c <= 0, given that c is not certified
// positive there.
Counterexample coefficient_counterexample(const Poly& c, std::size_t power, const BigRational& lo,
                                          const BigRational& hi) {
  Counterexample ce;
  ce.x_power = power;
  const auto describe = [&](const BigRational& a) {
    ce.a = a;
    ce.description = "coefficient of x^" + std::to_string(power) + " is " + to_string(c.eval(a)) + " at a = " +
                     to_string(a);
    return ce;
  };
  for (const BigRational& a : {lo, BigRational((lo + hi) / 2), hi}) {
    if (c.eval(a) <= 0) return describe(a);
  }
  auto roots = isolate_roots(c, lo, hi);
  const SturmChain chain(square_free_part(c));
  for (auto& iv : roots) {
    for (int guard = 0; guard < 256; ++guard) {
      if (c.eval(iv.hi) <= 0) return describe(iv.hi);
      const BigRational probe = iv.lo + (iv.hi - iv.lo) / 2;
      if (c.eval(probe) <= 0) return describe(probe);
      iv = refine(chain, iv, (iv.hi - iv.lo) / 2);
    }
  }
  // Only even-multiplicity zeros at irrational points remain.
  const auto& iv = roots.front();
  ce.a = iv.hi;
  ce.description = "coefficient of x^" + std::to_string(power) + " vanishes in (" + to_string(iv.lo) + ", " +
                   to_string(iv.hi) + "]";
  return ce;
}

std::optional<std::vector<CoefficientCertificate>> certify_all_positive(const std::vector<SymbolicStep>& steps,
                                                                        const std::vector<BivarPoly>& dens,
                                                                        const BivarPoly& family,
                                                                        const BigRational& lo,
                                                                        const BigRational& hi) {
  std::vector<CoefficientCertificate> certs;
  const BigRational mid = (lo + hi) / 2;
  auto take = [&](const BivarPoly& n, bool is_family, std::size_t iterate) {
    const CertifiedInterval ci = coeff_positivity_interval(n, lo, hi);
    if (ci.property != IntervalProperty::AllXCoeffsPositive) return false;
    for (auto c : ci.certificates) {
      c.family = is_family;
      c.iterate = iterate;
      certs.push_back(std::move(c));
    }
    return true;
  };
  if (!take(family, true, 0)) return std::nullopt;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const SymbolicStep& s = steps[j];
    const BivarPoly& den = dens[j];
    if (den.degree_x() - s.numerator.degree_x() != 2) return std::nullopt;
    // Every factor is sign-definite on the cell once the earlier numerators
    // are certified; one evaluation fixes the sign of the product.
    if (den.at_a(mid).coeff(0) <= 0) return std::nullopt;
    if (!take(s.numerator, false, j)) return std::nullopt;
  }
  return certs;
}

// v_j(a, x*) < 0 for every a in [lo, hi], decided by the sign of the
// univariate polynomial N_j(a, x*) * den_j(a, x*).
bool certify_negative_on_cell(const SymbolicStep& step, const BivarPoly& den, const BigRational& x,
                              const BigRational& lo, const BigRational& hi) {
  const Poly r = step.numerator.at_x(x) * den.at_x(x);
  if (r.is_zero()) return false;
  const CoefficientCertificate c = certify_coefficient(r, lo, hi);
  return c.roots_in_closed_interval == 0 && c.sample_sign < 0;
}

std::string describe_verdict(std::size_t iterate, const KahlerVerdict& v) {
  std::string out = "iterate " + std::to_string(iterate) + ": ";
  switch (v.status) {
    case KahlerStatus::Kahler:
      return out + "Kahler";
    case KahlerStatus::NotPositive:
      out += "density negative";
      if (const auto* x = std::get_if<BigRational>(&v.witness)) out += " at x = " + to_string(*x);
      return out;
    case KahlerStatus::DegenerateAtFiniteX:
      out += v.pole ? "pole" : "zero";
      if (const auto* iv = std::get_if<IsolatingInterval>(&v.witness)) {
        out += " in (" + to_string(iv->lo) + ", " + to_string(iv->hi) + "]";
      }
      return out;
    case KahlerStatus::DegenerateAtInfinity:
      return out + "degree gap " + std::to_string(v.degree_gap) + " at infinity";
  }
  return out;
}

Counterexample make_counterexample(const BigRational& a, std::size_t iterate, const KahlerVerdict& v) {
  Counterexample ce;
  ce.a = a;
  ce.iterate = iterate;
  if (const auto* x = std::get_if<BigRational>(&v.witness)) ce.x = *x;
  ce.description = describe_verdict(iterate, v);
  return ce;
}

class CellCertifier {
 public:
  CellCertifier(const std::vector<SymbolicStep>& steps, const SweepOptions& opts) : steps_(steps), opts_(opts) {
    dens_.reserve(steps.size());
    for (const auto& s : steps) dens_.push_back(s.denominator());
  }

  void run(const BigRational& lo, const BigRational& hi, std::vector<CertifiedInterval>& out) const {
    CertifiedInterval cell;
    cell.lo = lo;
    cell.hi = hi;
    const BigRational mid = (lo + hi) / 2;

    if (auto certs = certify_all_positive(steps_, dens_, opts_.family, lo, hi)) {
      cell.property = IntervalProperty::AllXCoeffsPositive;
      cell.certificates = std::move(*certs);
      out.push_back(std::move(cell));
      return;
    }

    if (auto fail = pointwise_failure(steps_, mid)) {
      const auto& [j, verdict] = *fail;
      if (const auto* x = std::get_if<BigRational>(&verdict.witness);
          x != nullptr && verdict.status == KahlerStatus::NotPositive &&
          certify_negative_on_cell(steps_[j], dens_[j], *x, lo, hi)) {
        cell.property = IntervalProperty::NotKahler;
        cell.whole_cell = true;
        cell.counterexample = make_counterexample(mid, j, verdict);
        out.push_back(std::move(cell));
        return;
      }
    }

    if (hi - lo > opts_.resolution) {
      run(lo, mid, out);
      run(mid, hi, out);
      return;
    }

    cell.samples = {lo, mid, hi};
    for (const auto& a : cell.samples) {
      if (auto fail = pointwise_failure(steps_, a)) {
        cell.property = IntervalProperty::NotKahler;
        cell.counterexample = make_counterexample(a, fail->first, fail->second);
        cell.samples.clear();
        out.push_back(std::move(cell));
        return;
      }
    }
    cell.property = IntervalProperty::KahlerAtAllSamples;
    out.push_back(std::move(cell));
  }

 private:
  const std::vector<SymbolicStep>& steps_;
  const SweepOptions& opts_;
  std::vector<BivarPoly> dens_;
};

bool is_inner(IntervalProperty p) {
  return p == IntervalProperty::AllXCoeffsPositive || p == IntervalProperty::KahlerAtAllSamples;
}

}  // namespace

std::vector<SymbolicStep> symbolic_iterate(unsigned k, const BivarPoly& family, std::size_t size_limit) {
  if (family.degree_x() < 1) throw InvalidInput("family must have positive degree in x");
  const BivarPoly p = primitive_part(family);
  std::vector<SymbolicStep> steps;
  SymbolicStep base;
  base.numerator = d_op(p);
  if (base.numerator.is_zero()) throw NotAMetric("family potential is pluriharmonic");
  base.factors.push_back({p, 2});
  base.raw_degree_num = base.numerator.degree_x();
  base.raw_degree_den = 2 * p.degree_x();
  trial_reduce(base);
  steps.push_back(std::move(base));
  for (unsigned j = 1; j <= k; ++j) steps.push_back(ricci_step(steps.back(), size_limit));
  return steps;
}

CertifiedInterval coeff_positivity_interval(const BivarPoly& n, const BigRational& lo, const BigRational& hi) {
  if (!(lo < hi)) throw InvalidInput("coefficient positivity needs lo < hi");
  CertifiedInterval out;
  out.lo = lo;
  out.hi = hi;
  if (n.is_zero()) {
    out.property = IntervalProperty::CoefficientNotPositive;
    out.counterexample = Counterexample{lo, 0, 0, std::nullopt, "polynomial is identically zero"};
    return out;
  }
  const auto top = static_cast<std::size_t>(n.degree_x());
  for (std::size_t i = 0; i <= top; ++i) {
    const Poly& c = n.coeffs()[i];
    CoefficientCertificate cert = certify_coefficient(c, lo, hi);
    cert.x_power = i;
    const bool interior_zero = cert.identically_zero && i != 0 && i != top;
    if (!interior_zero && !certifies_positive(cert)) {
      out.property = IntervalProperty::CoefficientNotPositive;
      out.counterexample = c.is_zero() ? Counterexample{lo, 0, i, std::nullopt, "coefficient of x^" + std::to_string(i) + " is zero"}
                                       : coefficient_counterexample(c, i, lo, hi);
      out.certificates.push_back(std::move(cert));
      return out;
    }
    out.certificates.push_back(std::move(cert));
  }
  out.property = IntervalProperty::AllXCoeffsPositive;
  return out;
}

std::vector<int> coefficient_signs_at_sqrt(const BivarPoly& n, const BigRational& d) {
  const Poly modulus{-d, 0, 1};
  std::vector<int> signs;
  signs.reserve(n.coeffs().size());
  for (const auto& c : n.coeffs()) {
    const auto [c0, c1] = eval_mod_quadratic(c, modulus);
    signs.push_back(sign_at_sqrt(c0, c1, d));
  }
  return signs;
}

std::optional<std::pair<std::size_t, KahlerVerdict>> pointwise_failure(const std::vector<SymbolicStep>& steps,
                                                                       const BigRational& a) {
  for (std::size_t j = 0; j < steps.size(); ++j) {
    KahlerVerdict verdict;
    try {
      const RatFunc v = steps[j].at(a);
      if (v.is_zero()) {
        verdict.status = KahlerStatus::DegenerateAtFiniteX;
        return std::make_pair(j, verdict);
      }
      verdict = check_kahler_cp1(RadialDensity(v));
    } catch (const DivisionByZero&) {
      verdict.status = KahlerStatus::DegenerateAtFiniteX;
      verdict.pole = true;
    }
    if (!verdict.is_kahler()) return std::make_pair(j, verdict);
  }
  return std::nullopt;
}

KahlerIntervalResult kahler_interval(unsigned k, const SweepOptions& opts) {
  if (opts.resolution <= 0) throw InvalidInput("resolution must be positive");
  if (!(opts.domain_lo < opts.domain_hi)) throw InvalidInput("empty parameter domain");
  if (opts.initial_cells == 0) throw InvalidInput("need at least one initial cell");

  KahlerIntervalResult result;
  result.k = k;
  const auto steps = symbolic_iterate(k, opts.family, opts.size_limit);
  for (const auto& s : steps) {
    result.degrees_num.push_back(s.numerator.degree_x());
    result.degrees_den.push_back(s.denominator_degree_x());
  }

  const unsigned n_cells = opts.initial_cells;
  const BigRational width = (opts.domain_hi - opts.domain_lo) / n_cells;
  std::vector<std::vector<CertifiedInterval>> per_cell(n_cells);
  const CellCertifier certifier(steps, opts);

  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned i = next++; i < n_cells; i = next++) {
      const BigRational lo = opts.domain_lo + width * i;
      const BigRational hi = i + 1 == n_cells ? opts.domain_hi : BigRational(opts.domain_lo + width * (i + 1));
      certifier.run(lo, hi, per_cell[i]);
    }
  };
  const unsigned jobs = std::max(1U, std::min(opts.jobs, n_cells));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  for (auto& cells : per_cell) {
    for (auto& c : cells) result.cells.push_back(std::move(c));
  }
  for (const auto& c : result.cells) {
    if (is_inner(c.property)) {
      if (!result.inner.empty() && result.inner.back().second == c.lo) {
        result.inner.back().second = c.hi;
      } else {
        result.inner.emplace_back(c.lo, c.hi);
      }
    } else {
      result.gaps.push_back(c);
    }
  }
  return result;
}

std::string to_string(IntervalProperty p) {
  switch (p) {
    case IntervalProperty::AllXCoeffsPositive:
      return "AllXCoeffsPositive";
    case IntervalProperty::KahlerAtAllSamples:
      return "KahlerAtAllSamples";
    case IntervalProperty::NotKahler:
      return "NotKahler";
    case IntervalProperty::CoefficientNotPositive:
      return "CoefficientNotPositive";
  }
  return "unknown";
}

}  // namespace ricci_orbit
