#pragma once

#include <json.hpp>

#include "ricci_orbit/inducedness.hpp"
#include "ricci_orbit/param_sweep.hpp"
#include "ricci_orbit/radial.hpp"
#include "ricci_orbit/volumes.hpp"

namespace ricci_orbit {

// Insertion-ordered objects keep the output byte-stable.
using Json = nlohmann::ordered_json;

// Number of fractional digits in rendered decimals.
inline constexpr int kDecimalPlaces = 30;

Json to_json(const BigRational& q);
Json to_json(const Poly& p);
Json to_json(const RatFunc& f);
Json to_json(const RadialLogPotential& pot);
Json to_json(const IsolatingInterval& iv);
Json to_json(const PositivityReport& r);
Json to_json(const KahlerVerdict& v);
Json to_json(const IterationOrbit& orbit);
Json to_json(const EmbeddingData& e);
Json to_json(const InducedVerdict& v);
Json to_json(const VolumeReport& r);
Json to_json(const EuclideanVolumeVerdict& v);
Json to_json(const CoefficientCertificate& c);
Json to_json(const CertifiedInterval& c, bool evidence);
Json to_json(const KahlerIntervalResult& r, bool evidence);

std::string to_string(KahlerStatus s);
std::string to_string(HaltReason r);
std::string to_string(InducedReason r);
std::string to_string(Positivity p);

// Coefficients may be JSON integers or strings accepted by parse_rational.
// All parsers throw InvalidInput on malformed input.
BigRational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
// {"num": [...], "den": [...]}; "den" defaults to [1].
RatFunc ratfunc_from_json(const Json& j);
// {"f": [...], "h": [...]}; "h" defaults to [1]. Normalized at the origin.
RadialLogPotential potential_from_json(const Json& j);

}  // namespace ricci_orbit
