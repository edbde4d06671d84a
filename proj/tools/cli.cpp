#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "ricci_orbit/errors.hpp"
#include "ricci_orbit/expr.hpp"
#include "ricci_orbit/json_io.hpp"

namespace ricci_orbit::cli {

namespace {

constexpr const char* kDefaultFamily = "1 + a*x + x^2";
constexpr const char* kSizeLimitEnv = "RICCI_ORBIT_SIZE_LIMIT";

struct Config {
  std::optional<std::string> potential;
  std::optional<std::string> density;
  std::optional<std::string> family;
  std::optional<std::string> a;
  std::optional<unsigned> k;
  std::string sign = "+";
  std::string resolution = "1/10000";
  std::string format = "json";
  bool evidence = false;
  unsigned jobs = 1;
  std::optional<std::size_t> size_limit;
  bool ricci_of = false;
  std::vector<std::string> domain;
  bool euclidean = false;
  bool on_disc = false;
  bool coefficients = false;
  std::optional<std::string> at_sqrt;
};

std::string load_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

bool is_json_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

std::optional<BigRational> parameter(const Config& cfg) {
  if (!cfg.a) return std::nullopt;
  return parse_rational(*cfg.a);
}

RadialLogPotential potential_from_text(const std::string& arg, const std::optional<BigRational>& a) {
  const std::string text = load_text(arg);
  if (is_json_text(text)) return potential_from_json(Json::parse(text));
  const RatFunc q = Expression::parse(text).eval(a);
  return RadialLogPotential::normalized(q.num(), q.den());
}

RatFunc density_from_text(const std::string& arg, const std::optional<BigRational>& a) {
  const std::string text = load_text(arg);
  if (is_json_text(text)) return ratfunc_from_json(Json::parse(text));
  return Expression::parse(text).eval(a);
}

Expression family_expression(const Config& cfg) { return Expression::parse(cfg.family.value_or(kDefaultFamily)); }

struct Input {
  std::optional<RadialLogPotential> potential;
  std::optional<RadialDensity> density;
};

// Exactly one of --potential / --density; with neither, --a selects a member
// of the family.
Input resolve_input(const Config& cfg) {
  if (cfg.potential && cfg.density) throw InvalidInput("give exactly one of --potential and --density");
  const auto a = parameter(cfg);
  Input in;
  if (cfg.density) {
    in.density = RadialDensity(density_from_text(*cfg.density, a));
    return in;
  }
  if (cfg.potential) {
    in.potential = potential_from_text(*cfg.potential, a);
  } else {
    if (!a) throw InvalidInput("give --potential, --density, or --a to pick a member of the family");
    const RatFunc q = family_expression(cfg).eval(a);
    in.potential = RadialLogPotential::normalized(q.num(), q.den());
  }
  in.density = hessian_density(*in.potential);
  return in;
}

const RadialLogPotential& require_potential(const Input& in, const char* what) {
  if (!in.potential) throw InvalidInput(std::string(what) + " needs a potential, not a density");
  return *in.potential;
}

IterationSign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return IterationSign::Plus;
  if (s == "-" || s == "minus") return IterationSign::Minus;
  throw InvalidInput("--sign must be + or -");
}

std::size_t size_limit(const Config& cfg) {
  if (cfg.size_limit) return *cfg.size_limit;
  if (const char* env = std::getenv(kSizeLimitEnv)) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::strlen(env)) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string(kSizeLimitEnv) + " must be a nonnegative integer");
  }
  return kDefaultSizeLimit;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw InvalidInput("format " + cfg.format + " is not available for this command");
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scientific(const HighPrec& v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(20) << v;
  return os.str();
}

// x = 0 followed by 20 points per decade on [1e-3, 1e6].
std::vector<HighPrec> plot_grid() {
  std::vector<HighPrec> xs{HighPrec(0)};
  for (int i = 0; i <= 180; ++i) xs.push_back(pow(HighPrec(10), HighPrec(i - 60) / 20));
  return xs;
}

HighPrec eval_high_prec(const Poly& p, const HighPrec& x) {
  HighPrec acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + to_high_prec(*it);
  return acc;
}

void write_plot_rows(std::ostream& out, const RatFunc& v, const std::string& prefix) {
  for (const auto& x : plot_grid()) {
    out << prefix << scientific(x) << "," << scientific(eval_high_prec(v.num(), x) / eval_high_prec(v.den(), x))
        << "\n";
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_iterate(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv", "plotdata"});
  const Input in = resolve_input(cfg);
  const unsigned k = cfg.k.value_or(3);
  const IterationOrbit orbit = iterate(*in.density, k, parse_sign(cfg.sign));
  const Json report = to_json(orbit);

  if (cfg.format == "json") {
    Json j{{"command", "iterate"}, {"k", k}, {"sign", cfg.sign}};
    if (in.potential) j["potential"] = to_json(*in.potential);
    for (const auto& [key, value] : report.items()) j[key] = value;
    j["complete"] = !orbit.halted_at.has_value();
    print_json(out, j);
  } else if (cfg.format == "csv") {
    out << "step,deg_num,deg_den,verdict,einstein,density\n";
    for (std::size_t i = 0; i < orbit.densities.size(); ++i) {
      const RatFunc& v = orbit.densities[i].v();
      const auto lambda = is_einstein(orbit.densities[i]);
      out << i << "," << v.num().degree() << "," << v.den().degree() << ","
          << (i < orbit.verdicts.size() ? to_string(orbit.verdicts[i].status) : "") << ","
          << (lambda ? to_string(*lambda) : "") << "," << csv_quote(to_string(v)) << "\n";
    }
  } else {
    out << "step,x,v\n";
    for (std::size_t i = 0; i < orbit.densities.size(); ++i) {
      write_plot_rows(out, orbit.densities[i].v(), std::to_string(i) + ",");
    }
  }
  return orbit.halted_at ? kHalted : kOk;
}

int cmd_check_kahler(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const Input in = resolve_input(cfg);
  const RadialDensity v = parse_sign(cfg.sign) == IterationSign::Minus ? in.density->scaled(-1) : *in.density;
  Json j{{"command", "check kahler"}, {"sign", cfg.sign}, {"density", to_json(v.v())},
         {"verdict", to_json(check_kahler_cp1(v))}};
  if (cfg.evidence) {
    j["numerator_positivity"] = to_json(is_positive_on_nonneg_axis(v.v().num()));
    Json poles = Json::array();
    if (v.v().den().degree() > 0) {
      for (const auto& iv : isolate_positive_roots(v.v().den())) poles.push_back(to_json(iv));
    }
    j["positive_poles"] = poles;
  }
  print_json(out, j);
  return kOk;
}

int cmd_check_einstein(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const Input in = resolve_input(cfg);
  const auto lambda = is_einstein(*in.density);
  Json j{{"command", "check einstein"}, {"density", to_json(in.density->v())}, {"einstein", lambda.has_value()},
         {"lambda", lambda ? to_json(*lambda) : Json()}};
  if (cfg.evidence) {
    const auto w = ricci(*in.density);
    j["ricci_density"] = w ? to_json(w->v()) : to_json(RatFunc());
  }
  print_json(out, j);
  return kOk;
}

int cmd_check_induced(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const Input in = resolve_input(cfg);
  RadialLogPotential pot = require_potential(in, "check induced");
  Json j{{"command", "check induced"}, {"potential", to_json(pot)}};
  if (cfg.ricci_of) {
    pot = ricci_potential(pot);
    j["ricci_potential"] = to_json(pot);
  }
  const InducedVerdict verdict = is_projectively_induced_radial(pot);
  j["verdict"] = to_json(verdict);
  if (verdict.induced()) {
    const auto match = binomial_test(Poly(verdict.embedding->alphas_squared));
    j["binomial"] = match ? Json{{"n", match->n}, {"scale", to_json(match->scale)}} : Json();
  } else {
    j["binomial"] = nullptr;
  }
  print_json(out, j);
  return kOk;
}

int cmd_check_bochner(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const Input in = resolve_input(cfg);
  const RadialLogPotential& pot = require_potential(in, "check bochner");
  const BochnerScale b = bochner_scale(pot);
  print_json(out, Json{{"command", "check bochner"},
                       {"potential", to_json(pot)},
                       {"c", to_json(b.c)},
                       {"normalized_potential", to_json(b.normalized_potential)}});
  return kOk;
}

SweepOptions sweep_options(const Config& cfg) {
  SweepOptions o;
  o.resolution = parse_rational(cfg.resolution);
  if (o.resolution <= 0) throw InvalidInput("--resolution must be positive");
  if (!cfg.domain.empty()) {
    if (cfg.domain.size() != 2) throw InvalidInput("--domain takes two values");
    o.domain_lo = parse_rational(cfg.domain[0]);
    o.domain_hi = parse_rational(cfg.domain[1]);
    if (o.domain_lo >= o.domain_hi) throw InvalidInput("--domain needs lo < hi");
  }
  if (cfg.jobs == 0) throw InvalidInput("--jobs must be at least 1");
  o.jobs = cfg.jobs;
  o.size_limit = size_limit(cfg);
  if (cfg.family) o.family = family_expression(cfg).to_bivar();
  return o;
}

int cmd_sweep_coefficients(const Config& cfg, const SweepOptions& o, unsigned k, std::ostream& out) {
  require_format(cfg, {"json"});
  const auto steps = symbolic_iterate(k, o.family, o.size_limit);
  const BivarPoly& n = steps[k].numerator;
  const CertifiedInterval ci = coeff_positivity_interval(n, o.domain_lo, o.domain_hi);
  Json j{{"command", "sweep"},
         {"mode", "coefficients"},
         {"family", to_string(o.family)},
         {"k", k},
         {"deg_x", n.degree_x()},
         {"interval", to_json(ci, true)}};
  if (cfg.at_sqrt) {
    const BigRational d = parse_rational(*cfg.at_sqrt);
    if (d < 0) throw InvalidInput("--at-sqrt needs a nonnegative value");
    j["signs_at_sqrt"] = Json{{"d", to_json(d)}, {"signs", coefficient_signs_at_sqrt(n, d)}};
  }
  print_json(out, j);
  return kOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  const unsigned k = cfg.k.value_or(2);
  if (k > kDefaultMaxIterate) {
    throw InvalidInput("--k is capped at " + std::to_string(kDefaultMaxIterate) + " for sweeps");
  }
  const SweepOptions o = sweep_options(cfg);
  if (cfg.coefficients) return cmd_sweep_coefficients(cfg, o, k, out);

  const KahlerIntervalResult r = kahler_interval(k, o);
  if (cfg.format == "json") {
    Json j{{"command", "sweep"},
           {"family", to_string(o.family)},
           {"domain", Json::array({to_json(o.domain_lo), to_json(o.domain_hi)})},
           {"resolution", to_json(o.resolution)}};
    const Json body = to_json(r, cfg.evidence);
    for (const auto& [key, value] : body.items()) j[key] = value;
    print_json(out, j);
  } else {
    out << "a_lo,a_hi,k,verdict,witness\n";
    for (const auto& c : r.cells) {
      out << to_string(c.lo) << "," << to_string(c.hi) << "," << k << "," << to_string(c.property) << ","
          << csv_quote(c.counterexample ? c.counterexample->description : "") << "\n";
    }
  }
  return kOk;
}

int cmd_volume(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv", "plotdata"});
  const Input in = resolve_input(cfg);

  if (cfg.euclidean) {
    require_format(cfg, {"json"});
    const RadialLogPotential& pot = require_potential(in, "volume --euclidean");
    const EuclideanVolumeVerdict v = euclidean_volume(pot, !cfg.on_disc);
    print_json(out, Json{{"command", "volume"},
                         {"kind", "euclidean"},
                         {"domain", cfg.on_disc ? "disc" : "CP1"},
                         {"potential", to_json(pot)},
                         {"report", to_json(v)}});
    return kOk;
  }

  RadialDensity v = *in.density;
  if (cfg.ricci_of) {
    auto w = ricci(v);
    if (!w) throw InvalidInput("the Ricci form vanishes identically");
    v = *w;
  }
  if (cfg.format == "plotdata") {
    out << "x,v\n";
    write_plot_rows(out, v.v(), "");
    return kOk;
  }
  const VolumeReport r = symplectic_volume(v);
  if (cfg.format == "csv") {
    out << "finite,value,err,tail_cut\n";
    const Json j = to_json(r);
    out << (r.finite ? "true" : "false") << "," << (r.finite ? j["value"].get<std::string>() : "") << ","
        << (r.finite ? j["err"].get<std::string>() : "") << "," << (r.finite ? to_string(r.tail_cut) : "") << "\n";
    return kOk;
  }
  Json j{{"command", "volume"}, {"kind", "symplectic"}, {"density", to_json(v.v())}};
  const Json body = to_json(r);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["value_over_pi"] =
      r.finite ? Json(to_decimal(r.value / boost::math::constants::pi<HighPrec>(), kDecimalPlaces)) : Json();
  print_json(out, j);
  return kOk;
}

void add_input_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--potential", cfg.potential,
                  "Potential log(f/h): JSON {\"f\":[...],\"h\":[...]}, a shorthand expression, or a file");
  cmd->add_option("--density", cfg.density,
                  "Density v: JSON {\"num\":[...],\"den\":[...]}, a shorthand expression, or a file");
  cmd->add_option("--a", cfg.a, "Parameter value p/q; alone it selects a member of the family");
  cmd->add_option("--family", cfg.family, "Family polynomial in x and a (default 1 + a*x + x^2)");
  cmd->add_option("--format", cfg.format, "Output format: json, csv or plotdata")->capture_default_str();
  cmd->add_flag("--evidence", cfg.evidence, "Include certificates in the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Kahler-Ricci iteration on radial metrics of CP^1", "ricci-orbit"};
  app.require_subcommand(1);

  CLI::App* it = app.add_subcommand("iterate", "Iterate the Ricci map from a density");
  add_input_options(it, cfg);
  it->add_option("--k", cfg.k, "Number of Ricci steps (default 3)");
  it->add_option("--sign", cfg.sign, "Sign of the iteration, + or -")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "Run one verdict");
  check->require_subcommand(1);
  CLI::App* kahler = check->add_subcommand("kahler", "Does the density extend to a Kahler form on CP^1");
  CLI::App* einstein = check->add_subcommand("einstein", "Is the density Kahler-Einstein");
  CLI::App* induced = check->add_subcommand("induced", "Is the potential projectively induced");
  CLI::App* bochner = check->add_subcommand("bochner", "Bochner coordinate scale");
  for (CLI::App* c : {kahler, einstein, induced, bochner}) add_input_options(c, cfg);
  kahler->add_option("--sign", cfg.sign, "Check the density with this sign")->capture_default_str();
  induced->add_flag("--ricci-of", cfg.ricci_of, "Test the Ricci potential instead");

  CLI::App* sweep = app.add_subcommand("sweep", "Certify Kahler parameter intervals of the family");
  sweep->add_option("--family", cfg.family, "Family polynomial in x and a (default 1 + a*x + x^2)");
  sweep->add_option("--k", cfg.k, "Last iterate to certify (default 2)");
  sweep->add_option("--resolution", cfg.resolution, "Smallest cell width")->capture_default_str();
  sweep->add_option("--domain", cfg.domain, "Parameter range lo hi (default 0 2)")->expected(2);
  sweep->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  sweep->add_option("--size-limit", cfg.size_limit, std::string("Coefficient budget (env ") + kSizeLimitEnv + ")");
  sweep->add_option("--format", cfg.format, "Output format: json or csv")->capture_default_str();
  sweep->add_flag("--evidence", cfg.evidence, "Include per-cell certificates");
  sweep->add_flag("--coefficients", cfg.coefficients,
                  "Certify the x-coefficients of the k-th numerator over the whole domain");
  sweep->add_option("--at-sqrt", cfg.at_sqrt, "With --coefficients: exact coefficient signs at a = sqrt(D)");

  CLI::App* volume = app.add_subcommand("volume", "Volume of the form, or its Euclidean volume");
  add_input_options(volume, cfg);
  volume->add_flag("--ricci-of", cfg.ricci_of, "Integrate the Ricci form instead");
  volume->add_flag("--euclidean", cfg.euclidean, "Lebesgue volume of the Bochner coordinate image");
  volume->add_flag("--on-disc", cfg.on_disc, "With --euclidean: the potential lives on its maximal disc");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*it) return cmd_iterate(cfg, out);
    if (*kahler) return cmd_check_kahler(cfg, out);
    if (*einstein) return cmd_check_einstein(cfg, out);
    if (*induced) return cmd_check_induced(cfg, out);
    if (*bochner) return cmd_check_bochner(cfg, out);
    if (*sweep) return cmd_sweep(cfg, out);
    if (*volume) return cmd_volume(cfg, out);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotAMetric& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NonPositiveAtOrigin& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace ricci_orbit::cli
