#include "ricci_orbit/volumes.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/inducedness.hpp"

namespace ricci_orbit {

namespace {

const HighPrec& pi() {
  static const HighPrec value = boost::math::constants::pi<HighPrec>();
  return value;
}

// Rational integrand with coefficients rounded once to HighPrec.
class HighPrecRational {
 public:
  HighPrecRational(const Poly& num, const Poly& den) : num_(convert(num)), den_(convert(den)) {}

  HighPrec operator()(const HighPrec& t) const { return horner(num_, t) / horner(den_, t); }

 private:
  static std::vector<HighPrec> convert(const Poly& p) {
    std::vector<HighPrec> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(to_high_prec(c));
    return out;
  }
  static HighPrec horner(const std::vector<HighPrec>& c, const HighPrec& t) {
    HighPrec acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  std::vector<HighPrec> num_;
  std::vector<HighPrec> den_;
};

// (1 - t)^deg(p) p(t / (1 - t)), written out exactly.
Poly homogenize(const Poly& p) {
  const std::size_t n = p.size() - 1;
  const Poly one_minus_t{1, -1};
  Poly out;
  for (std::size_t i = 0; i <= n; ++i) {
    if (p.coeffs()[i] == 0) continue;
    out += Poly::monomial(p.coeffs()[i], i) * one_minus_t.pow(static_cast<unsigned>(n - i));
  }
  return out;
}

// Integrand in t = x / (1 + x): v(t / (1 - t)) / (1 - t)^2.
HighPrecRational compactified(const RatFunc& v) {
  const Poly& num = v.num();
  const Poly& den = v.den();
  Poly n_t = homogenize(num);
  Poly d_t = homogenize(den);
  const int excess = den.degree() - num.degree() - 2;
  const Poly one_minus_t{1, -1};
  if (excess >= 0) {
    n_t *= one_minus_t.pow(static_cast<unsigned>(excess));
  } else {
    d_t *= one_minus_t.pow(static_cast<unsigned>(-excess));
  }
  return {n_t, d_t};
}

struct Panel {
  HighPrec value = 0;
  HighPrec error = 0;
};

template <class F>
Panel adaptive(const F& f, const HighPrec& a, const HighPrec& b, const QuadratureOptions& opts, int depth) {
  using Rule = boost::math::quadrature::gauss_kronrod<HighPrec, 15>;
  HighPrec err = 0;
  const HighPrec value = Rule::integrate(f, a, b, 0, HighPrec(0), &err);
  if (err <= opts.panel_tolerance || depth >= opts.max_depth) return {value, err};
  const HighPrec mid = (a + b) / 2;
  // Fixed left-then-right order keeps the sum reproducible.
  const Panel left = adaptive(f, a, mid, opts, depth + 1);
  const Panel right = adaptive(f, mid, b, opts, depth + 1);
  return {left.value + right.value, left.error + right.error};
}

HighPrec quadrature_to(const RatFunc& v, const BigRational& cut, const QuadratureOptions& opts, HighPrec* error) {
  const HighPrecRational g = compactified(v);
  const HighPrec t_end = to_high_prec(cut / (1 + cut));
  const Panel p = adaptive(g, HighPrec(0), t_end, opts, 0);
  if (error != nullptr) *error = p.error;
  return p.value;
}

struct Tail {
  BigRational estimate;
  BigRational bound;
};

// integral_X^inf v dx = integral_0^Y y^(gap-2) Nrev(y) / Drev(y) dy with
// Y = 1/X. Writing H = h0 + h1 y + y^2 M / Drev, the remainder term is
// bounded by |M| / |Drev| evaluated coefficientwise on [0, Y].
std::optional<Tail> analytic_tail(const RatFunc& v, const BigRational& cut) {
  const Poly& num = v.num();
  const Poly& den = v.den();
  const int gap = den.degree() - num.degree();
  const Poly hn = num.reversed(static_cast<std::size_t>(num.degree())).shifted_up(static_cast<std::size_t>(gap - 2));
  const Poly hd = den.reversed(static_cast<std::size_t>(den.degree()));
  const BigRational d0 = hd.coeff(0);
  const BigRational h0 = hn.coeff(0) / d0;
  const BigRational h1 = (hn.coeff(1) * d0 - hn.coeff(0) * hd.coeff(1)) / (d0 * d0);
  const Poly shifted = hn - Poly{h0, h1} * hd;
  std::vector<BigRational> m_coeffs;
  for (std::size_t i = 2; i < shifted.size(); ++i) m_coeffs.push_back(shifted.coeffs()[i]);
  const Poly m(std::move(m_coeffs));

  const BigRational y = 1 / cut;
  BigRational den_lower = abs(d0);
  BigRational y_pow = 1;
  for (std::size_t i = 1; i < hd.size(); ++i) {
    y_pow *= y;
    den_lower -= abs(hd.coeffs()[i]) * y_pow;
  }
  if (den_lower <= 0) return std::nullopt;
  BigRational num_upper = 0;
  y_pow = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    num_upper += abs(m.coeffs()[i]) * y_pow;
    y_pow *= y;
  }
  const BigRational y3 = y * y * y;
  return Tail{h0 * y + h1 * y * y / 2, num_upper / den_lower * y3 / 3};
}

void require_no_poles(const RatFunc& v) {
  const Poly& den = v.den();
  if (den.degree() <= 0) return;
  if (den.coeff(0) == 0 || !isolate_positive_roots(den).empty()) {
    throw InvalidInput("density has a pole on [0, inf)");
  }
}

}  // namespace

HighPrec to_high_prec(const BigRational& q) {
  return HighPrec(q.get_num().get_str()) / HighPrec(q.get_den().get_str());
}

std::string to_decimal(const HighPrec& value, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  std::string s = os.str();
  if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

VolumeReport signed_volume(const RadialDensity& density, const QuadratureOptions& opts) {
  const RatFunc& v = density.v();
  require_no_poles(v);
  VolumeReport report;
  if (v.degree_gap() < 2) return report;
  report.finite = true;

  BigRational cut = 64;
  std::optional<Tail> tail;
  for (int i = 0; i < 200; ++i) {
    tail = analytic_tail(v, cut);
    if (tail && tail->bound <= opts.tail_tolerance) break;
    cut *= 4;
  }
  if (!tail) throw Error("analytic tail bound did not converge");

  HighPrec quad_err = 0;
  const HighPrec quad = quadrature_to(v, cut, opts, &quad_err);
  report.tail_cut = cut;
  report.value = pi() * (quad + to_high_prec(tail->estimate));
  report.abs_error_bound = pi() * (quad_err + to_high_prec(tail->bound));
  return report;
}

VolumeReport symplectic_volume(const RadialDensity& density, const QuadratureOptions& opts) {
  const PositivityReport sign = is_positive_on_nonneg_axis(density.v().num());
  if (sign.status == Positivity::NotNonNeg) throw InvalidInput("symplectic volume of a non-positive density");
  return signed_volume(density, opts);
}

HighPrec partial_volume(const RadialDensity& density, const BigRational& cut, const QuadratureOptions& opts) {
  if (cut <= 0) throw InvalidInput("partial volume needs a positive cut");
  require_no_poles(density.v());
  return pi() * quadrature_to(density.v(), cut, opts, nullptr);
}

HighPrec chern_check(const RadialDensity& v, const QuadratureOptions& opts) {
  if (!check_kahler_cp1(v).is_kahler()) throw InvalidInput("chern check needs a Kahler density on CP^1");
  const auto w = ricci(v);
  if (!w) return 4 * pi();
  const VolumeReport vol = signed_volume(*w, opts);
  if (!vol.finite) throw Error("Ricci density of a Kahler metric on CP^1 is not integrable");
  return abs(vol.value - 4 * pi());
}

EuclideanVolumeVerdict euclidean_volume(const RadialLogPotential& pot, bool on_cp1, const QuadratureOptions& opts) {
  EuclideanVolumeVerdict verdict;
  verdict.bochner_c = bochner_scale(pot).c;

  try {
    verdict.literal_integral = signed_volume(hessian_density(pot), opts);
  } catch (const InvalidInput&) {
    // Poles on [0, inf): no literal integral over the whole chart.
  }

  if (on_cp1) return verdict;

  const Poly fh = pot.f() * pot.h();
  if (fh.degree() <= 0) return verdict;
  const auto roots = isolate_positive_roots(fh);
  if (roots.empty()) return verdict;

  const SturmChain chain(square_free_part(fh));
  const IsolatingInterval r = refine(chain, roots.front(), BigRational(1, BigInteger("1" + std::string(45, '0'))));
  const HighPrec radius_sq = to_high_prec(r.hi);
  verdict.infinite = false;
  verdict.basis = EuclideanBasis::QuadratureOfLiteralIntegral;
  verdict.domain_radius_sq = radius_sq;
  // Pull-back of Lebesgue measure under w = sqrt(c) z has constant weight c.
  verdict.value = pi() * to_high_prec(verdict.bochner_c) * radius_sq;
  return verdict;
}

}  // namespace ricci_orbit
