#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ricci_orbit/radial.hpp"

namespace ricci_orbit {

using HighPrec = boost::multiprecision::cpp_bin_float_50;

struct QuadratureOptions {
  // Absolute error target per panel, in units of the x-integral.
  HighPrec panel_tolerance = HighPrec("1e-18");
  // Target for the analytic tail remainder bound.
  BigRational tail_tolerance = BigRational(1, BigInteger("1000000000000000000"));
  int max_depth = 40;
};

// Area of the form: pi * integral_0^inf v(x) dx, since (i/2) dz ^ dzbar is
// the Lebesgue measure and dA = pi d(|z|^2) for radial integrands.
struct VolumeReport {
  bool finite = false;
  HighPrec value;            // meaningful iff finite
  HighPrec abs_error_bound;  // quadrature estimate + rigorous tail bound
  BigRational tail_cut;      // x-value where the analytic tail takes over
};

// Throws InvalidInput when v is negative somewhere on [0, inf).
VolumeReport symplectic_volume(const RadialDensity& v, const QuadratureOptions& opts = {});

// Same integral without the sign precondition. Finiteness is decided by the
// degree gap (>= 2 finite); a pole on [0, inf) throws InvalidInput.
VolumeReport signed_volume(const RadialDensity& v, const QuadratureOptions& opts = {});

// pi * integral_0^cut v(x) dx by quadrature alone, for any degree gap.
HighPrec partial_volume(const RadialDensity& v, const BigRational& cut, const QuadratureOptions& opts = {});

// |vol(Ric(v)) - 4 pi|: the Ricci form of a metric on CP^1 integrates to
// 2 pi c_1 = 4 pi. Throws InvalidInput unless v is Kahler on CP^1.
HighPrec chern_check(const RadialDensity& v, const QuadratureOptions& opts = {});

enum class EuclideanBasis { BochnerChartCoversPlane, QuadratureOfLiteralIntegral };

struct EuclideanVolumeVerdict {
  bool infinite = true;
  std::optional<HighPrec> value;  // set iff finite
  EuclideanBasis basis = EuclideanBasis::BochnerChartCoversPlane;
  BigRational bochner_c;
  // Boundary radius^2 (in x) of the domain of the potential, when finite.
  std::optional<HighPrec> domain_radius_sq;
  // pi * integral_0^inf of the density of the potential taken literally,
  // i.e. the integral one gets by treating the density as the Lebesgue
  // weight. Reported alongside the definitional verdict.
  std::optional<VolumeReport> literal_integral;
};

// Lebesgue volume of the image of the Bochner map w = sqrt(c) z. On CP^1
// the map is defined on the whole affine chart, so the image is C. Off
// CP^1 the domain is the disc |z|^2 < R where R is the first positive zero
// of f h (no zero: the whole plane), with image area pi c R.
EuclideanVolumeVerdict euclidean_volume(const RadialLogPotential& pot, bool on_cp1,
                                        const QuadratureOptions& opts = {});

// Fixed-point decimal rendering with the given number of significant digits.
std::string to_decimal(const HighPrec& value, int digits = 40);

HighPrec to_high_prec(const BigRational& q);

}  // namespace ricci_orbit
