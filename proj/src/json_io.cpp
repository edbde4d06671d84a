#include "ricci_orbit/json_io.hpp"

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

Json to_json(const BigRational& q) { return to_string(q); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const RadialLogPotential& pot) { return Json{{"f", to_json(pot.f())}, {"h", to_json(pot.h())}}; }

Json to_json(const IsolatingInterval& iv) {
  return Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"roots", iv.root_count}};
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::StrictlyPositive:
      return "StrictlyPositive";
    case Positivity::NonNegWithZeros:
      return "NonNegWithZeros";
    case Positivity::NotNonNeg:
      return "NotNonNeg";
  }
  return "?";
}

Json to_json(const PositivityReport& r) {
  Json out{{"status", to_string(r.status)}};
  Json zeros = Json::array();
  for (const auto& z : r.zeros) zeros.push_back(to_json(z));
  out["zeros"] = zeros;
  out["negative_at"] = r.negative_at ? to_json(*r.negative_at) : Json();
  return out;
}

std::string to_string(KahlerStatus s) {
  switch (s) {
    case KahlerStatus::Kahler:
      return "Kahler";
    case KahlerStatus::DegenerateAtFiniteX:
      return "DegenerateAtFiniteX";
    case KahlerStatus::DegenerateAtInfinity:
      return "DegenerateAtInfinity";
    case KahlerStatus::NotPositive:
      return "NotPositive";
  }
  return "?";
}

std::string to_string(HaltReason r) {
  switch (r) {
    case HaltReason::None:
      return "none";
    case HaltReason::NotKahler:
      return "not_kahler";
    case HaltReason::RicciFlat:
      return "ricci_flat";
  }
  return "?";
}

std::string to_string(InducedReason r) {
  switch (r) {
    case InducedReason::Induced:
      return "Induced";
    case InducedReason::NotPolynomial:
      return "NotPolynomial";
    case InducedReason::NegativeCoefficient:
      return "NegativeCoefficient";
    case InducedReason::ZeroForm:
      return "ZeroForm";
  }
  return "?";
}

Json to_json(const KahlerVerdict& v) {
  Json out{{"status", to_string(v.status)}, {"degree_gap", v.degree_gap}};
  if (const auto* x = std::get_if<BigRational>(&v.witness)) {
    out["witness"] = Json{{"x", to_json(*x)}};
  } else if (const auto* iv = std::get_if<IsolatingInterval>(&v.witness)) {
    out["witness"] = Json{{"interval", to_json(*iv)}, {"pole", v.pole}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const IterationOrbit& orbit) {
  Json densities = Json::array();
  Json verdicts = Json::array();
  Json degrees = Json::array();
  Json einstein = Json::array();
  for (std::size_t i = 0; i < orbit.densities.size(); ++i) {
    const RatFunc& v = orbit.densities[i].v();
    densities.push_back(to_json(v));
    degrees.push_back(Json{{"num", v.num().degree()}, {"den", v.den().degree()}});
    const auto lambda = is_einstein(orbit.densities[i]);
    einstein.push_back(lambda ? to_json(*lambda) : Json());
    if (i < orbit.verdicts.size()) verdicts.push_back(to_json(orbit.verdicts[i]));
  }
  return Json{{"densities", densities},
              {"verdicts", verdicts},
              {"degrees", degrees},
              {"einstein", einstein},
              {"halted_at", orbit.halted_at ? Json(*orbit.halted_at) : Json()},
              {"halt_reason", to_string(orbit.halt_reason)}};
}

Json to_json(const EmbeddingData& e) {
  Json a = Json::array();
  for (const auto& c : e.alphas_squared) a.push_back(to_json(c));
  return Json{{"n", e.n}, {"a", a}, {"full", e.full()}};
}

Json to_json(const InducedVerdict& v) {
  Json out{{"induced", v.induced()}, {"reason", to_string(v.reason)}};
  out["embedding"] = v.embedding ? to_json(*v.embedding) : Json();
  if (v.reason == InducedReason::NegativeCoefficient) out["negative_index"] = v.negative_index;
  return out;
}

Json to_json(const VolumeReport& r) {
  Json out{{"finite", r.finite}};
  if (r.finite) {
    out["value"] = to_decimal(r.value, kDecimalPlaces);
    out["err"] = to_decimal(r.abs_error_bound, kDecimalPlaces);
    out["tail_cut"] = to_json(r.tail_cut);
  } else {
    out["value"] = nullptr;
    out["err"] = nullptr;
    out["tail_cut"] = nullptr;
  }
  return out;
}

Json to_json(const EuclideanVolumeVerdict& v) {
  Json out{{"verdict", v.infinite ? "Infinite" : "Finite"}};
  out["value"] = v.value ? Json(to_decimal(*v.value, kDecimalPlaces)) : Json();
  out["basis"] = v.basis == EuclideanBasis::BochnerChartCoversPlane ? "BochnerChartCoversPlane"
                                                                     : "QuadratureOfLiteralIntegral";
  out["bochner_c"] = to_json(v.bochner_c);
  out["domain_radius_sq"] = v.domain_radius_sq ? Json(to_decimal(*v.domain_radius_sq, kDecimalPlaces)) : Json();
  out["literal_integral"] = v.literal_integral ? to_json(*v.literal_integral) : Json();
  return out;
}

Json to_json(const CoefficientCertificate& c) {
  Json out{{"source", c.family ? "family" : "iterate"}};
  if (!c.family) out["iterate"] = c.iterate;
  out["x_power"] = c.x_power;
  out["identically_zero"] = c.identically_zero;
  out["sturm_variations"] = Json::array({c.variations_lo, c.variations_hi});
  out["roots_in_closed_interval"] = c.roots_in_closed_interval;
  out["sample"] = to_json(c.sample);
  out["sample_sign"] = c.sample_sign;
  return out;
}

Json to_json(const CertifiedInterval& c, bool evidence) {
  Json out{{"lo", to_json(c.lo)}, {"hi", to_json(c.hi)}, {"property", to_string(c.property)}};
  if (c.property == IntervalProperty::NotKahler) out["whole_cell"] = c.whole_cell;
  if (c.counterexample) {
    const Counterexample& ce = *c.counterexample;
    Json w{{"a", to_json(ce.a)}, {"iterate", ce.iterate}};
    if (ce.x_power) w["x_power"] = *ce.x_power;
    if (ce.x) w["x"] = to_json(*ce.x);
    w["description"] = ce.description;
    out["counterexample"] = w;
  }
  if (evidence) {
    Json samples = Json::array();
    for (const auto& s : c.samples) samples.push_back(to_json(s));
    out["samples"] = samples;
    Json certs = Json::array();
    for (const auto& cert : c.certificates) certs.push_back(to_json(cert));
    out["certificates"] = certs;
  }
  return out;
}

Json to_json(const KahlerIntervalResult& r, bool evidence) {
  Json inner = Json::array();
  for (const auto& [lo, hi] : r.inner) {
    inner.push_back(Json{{"lo", to_json(lo)},
                         {"hi", to_json(hi)},
                         {"lo_decimal", to_decimal(to_high_prec(lo), kDecimalPlaces)},
                         {"hi_decimal", to_decimal(to_high_prec(hi), kDecimalPlaces)}});
  }
  Json cells = Json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c, evidence));
  return Json{{"k", r.k},
              {"degrees", Json{{"num", r.degrees_num}, {"den", r.degrees_den}}},
              {"inner", inner},
              {"cells", cells}};
}

BigRational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigRational(BigInteger(std::to_string(j.get<std::uint64_t>())))
                                  : BigRational(BigInteger(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) throw InvalidInput("floating-point coefficient; write it as a string like \"1.25\" or \"5/4\"");
  throw InvalidInput("expected a rational coefficient, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a coefficient array, got " + j.dump());
  std::vector<BigRational> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly(std::move(c));
}

namespace {

Poly field_or_one(const Json& j, const char* key) {
  if (!j.contains(key)) return Poly::constant(1);
  return poly_from_json(j.at(key));
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object, got " + j.dump());
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidInput("unexpected key \"" + key + "\"");
  }
}

}  // namespace

RatFunc ratfunc_from_json(const Json& j) {
  require_keys(j, {"num", "den"});
  if (!j.contains("num")) throw InvalidInput("density needs a \"num\" array");
  const Poly den = field_or_one(j, "den");
  if (den.is_zero()) throw InvalidInput("density denominator is zero");
  return RatFunc(poly_from_json(j.at("num")), den);
}

RadialLogPotential potential_from_json(const Json& j) {
  require_keys(j, {"f", "h"});
  if (!j.contains("f")) throw InvalidInput("potential needs an \"f\" array");
  return RadialLogPotential::normalized(poly_from_json(j.at("f")), field_or_one(j, "h"));
}

}  // namespace ricci_orbit
