// Python module _core. Inputs are strings (shorthand expressions or JSON
// objects); results are returned as JSON text and decoded by the package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/expr.hpp"
#include "ricci_orbit/json_io.hpp"

namespace py = pybind11;
using namespace ricci_orbit;

namespace {

using OptText = std::optional<std::string>;

bool is_json_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

std::optional<BigRational> param(const OptText& a) {
  if (!a) return std::nullopt;
  return parse_rational(*a);
}

RadialLogPotential potential(const std::string& text, const OptText& a) {
  if (is_json_text(text)) return potential_from_json(Json::parse(text));
  const RatFunc q = Expression::parse(text).eval(param(a));
  return RadialLogPotential::normalized(q.num(), q.den());
}

RadialDensity density(const std::string& text, const OptText& a) {
  if (is_json_text(text)) return RadialDensity(ratfunc_from_json(Json::parse(text)));
  return RadialDensity(Expression::parse(text).eval(param(a)));
}

std::string dump(const Json& j) { return j.dump(); }

IterationSign sign_of(const std::string& s) {
  if (s == "+") return IterationSign::Plus;
  if (s == "-") return IterationSign::Minus;
  throw InvalidInput("sign must be + or -");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> base(m, "RicciOrbitError", PyExc_ValueError);
  static py::exception<SizeLimitExceeded> size(m, "SizeLimitExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SizeLimitExceeded& e) {
      py::set_error(size, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(base, e.what());
    }
  });

  m.def(
      "hessian_density",
      [](const std::string& pot, const OptText& a) { return dump(to_json(hessian_density(potential(pot, a)).v())); },
      py::arg("potential"), py::arg("a") = py::none());

  m.def(
      "ricci",
      [](const std::string& v, const OptText& a) -> OptText {
        const auto w = ricci(density(v, a));
        if (!w) return std::nullopt;
        return dump(to_json(w->v()));
      },
      py::arg("density"), py::arg("a") = py::none());

  m.def(
      "iterate",
      [](const std::string& v, std::size_t k, const std::string& sign, const OptText& a) {
        return dump(to_json(iterate(density(v, a), k, sign_of(sign))));
      },
      py::arg("density"), py::arg("k") = 3, py::arg("sign") = "+", py::arg("a") = py::none());

  m.def(
      "check_kahler",
      [](const std::string& v, const OptText& a) { return dump(to_json(check_kahler_cp1(density(v, a)))); },
      py::arg("density"), py::arg("a") = py::none());

  m.def(
      "is_einstein",
      [](const std::string& v, const OptText& a) -> OptText {
        const auto lambda = is_einstein(density(v, a));
        if (!lambda) return std::nullopt;
        return to_string(*lambda);
      },
      py::arg("density"), py::arg("a") = py::none());

  m.def(
      "ricci_potential",
      [](const std::string& pot, const OptText& a) { return dump(to_json(ricci_potential(potential(pot, a)))); },
      py::arg("potential"), py::arg("a") = py::none());

  m.def(
      "is_projectively_induced",
      [](const std::string& pot, const OptText& a) {
        return dump(to_json(is_projectively_induced_radial(potential(pot, a))));
      },
      py::arg("potential"), py::arg("a") = py::none());

  m.def(
      "symplectic_volume",
      [](const std::string& v, const OptText& a) {
        py::gil_scoped_release release;
        return dump(to_json(symplectic_volume(density(v, a))));
      },
      py::arg("density"), py::arg("a") = py::none());

  m.def(
      "kahler_interval",
      [](unsigned k, const std::string& lo, const std::string& hi, const std::string& resolution, unsigned jobs,
         const OptText& family, bool evidence) {
        SweepOptions o;
        o.domain_lo = parse_rational(lo);
        o.domain_hi = parse_rational(hi);
        o.resolution = parse_rational(resolution);
        if (o.domain_lo >= o.domain_hi) throw InvalidInput("domain needs lo < hi");
        if (o.resolution <= 0) throw InvalidInput("resolution must be positive");
        if (jobs == 0) throw InvalidInput("jobs must be at least 1");
        o.jobs = jobs;
        if (family) o.family = Expression::parse(*family).to_bivar();
        py::gil_scoped_release release;
        return dump(to_json(kahler_interval(k, o), evidence));
      },
      py::arg("k"), py::arg("lo") = "0", py::arg("hi") = "2", py::arg("resolution") = "1/10000",
      py::arg("jobs") = 1, py::arg("family") = py::none(), py::arg("evidence") = false);
}
