#include "hodgevf/cli.hpp"

#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgevf/hodge.hpp"
#include "hodgevf/oracles.hpp"
#include "hodgevf/parser.hpp"
#include "hodgevf/report.hpp"
#include "hodgevf/vfilt.hpp"

namespace hodgevf::cli {

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string polynomial;
  std::string element;
  std::string vars;
  std::string weights;
  std::string alpha;
  std::optional<unsigned> p;
  std::string max_degree;
  std::string ceiling;
  std::string exponents;
  std::string format = "text";
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw InputError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(flag + ": " + e.what());
  }
}

// Parsed input polynomial with its Milnor data and filtration.
struct Session {
  std::string text;
  std::vector<std::string> names;
  std::unique_ptr<VFiltration> v;

  const MilnorData& milnor() const { return v->milnor(); }
  Polynomial parse(const std::string& expr) const { return parse_expression(expr, names); }
};

Session open_session(const Options& o) {
  if (o.polynomial.empty()) throw InputError("missing polynomial: pass -f <expr>");
  Session s;
  s.text = o.polynomial;
  s.names = o.vars.empty() ? scan_variables(o.polynomial) : split_list(o.vars);
  Polynomial f = parse_expression(o.polynomial, s.names);
  std::optional<WeightSystem> w;
  if (!o.weights.empty()) {
    std::vector<Rational> values;
    for (const std::string& item : split_list(o.weights)) values.push_back(parse_flag_rational("--weights", item));
    if (values.size() != s.names.size())
      throw InputError("--weights: expected " + std::to_string(s.names.size()) + " weights, got " +
                       std::to_string(values.size()));
    w = WeightSystem(std::move(values));
  }
  s.v = std::make_unique<VFiltration>(build_milnor(f, w));
  return s;
}

Report base_report(const Session& s) {
  Report r;
  r.input = input_json(s.text, s.names, s.milnor());
  r.invariants = invariants_json(*s.v, s.names);
  return r;
}

Rational require_alpha(const Options& o) {
  if (o.alpha.empty()) throw InputError("missing --alpha");
  return parse_flag_rational("--alpha", o.alpha);
}

Rational ceiling_or(const Options& o, long fallback) {
  if (o.ceiling.empty()) return Rational(fallback);
  Rational c = parse_flag_rational("--ceiling", o.ceiling);
  if (c <= 0) throw InputError("--ceiling must be positive");
  return c;
}

// "N" counts in units of the integer grading (plain degree for homogeneous
// f); "p/q" is a weighted degree.
std::optional<Rational> max_degree(const Options& o, const MilnorData& m) {
  if (o.max_degree.empty()) return std::nullopt;
  Rational d = parse_flag_rational("--max-degree", o.max_degree);
  if (d < 0) throw InputError("--max-degree must be non-negative");
  if (o.max_degree.find('/') != std::string::npos) return d;
  return d / Rational(m.weights().grading().scale);
}

std::vector<unsigned> p_values(const Options& o, std::vector<unsigned> fallback) {
  if (o.p) return {*o.p};
  return fallback;
}

bool is_fermat_cubic(const Polynomial& f) {
  auto spec = diagonal_spec_of(f);
  if (!spec || spec->exponents != std::vector<unsigned>{3, 3, 3}) return false;
  for (const Term& t : f.terms())
    if (t.coeff != 1) return false;
  return true;
}

template <typename Fn>
Verification guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const PreconditionError& e) {
    return skipped(name, e.what());
  }
}

void verify_theorem1(Report& r, const Session& s, const Options& o) {
  auto md = max_degree(o, s.milnor());
  for (unsigned p : p_values(o, {0, 1, 2, 3}))
    r.verifications.push_back(degree_verification("theorem1", compare_hodge_with_v(*s.v, p, md.value_or(default_max_degree(p)), true)));
}

void verify_eq242(Report& r, const Session& s, const Options& o, bool soft) {
  auto md = max_degree(o, s.milnor());
  for (unsigned p : p_values(o, {0, 1})) {
    if (soft)
      r.verifications.push_back(guarded("eq242 p=" + std::to_string(p),
                                        [&] { return degree_verification("eq242", verify_242(s.milnor(), p, md)); }));
    else
      r.verifications.push_back(degree_verification("eq242", verify_242(s.milnor(), p, md)));
  }
}

void verify_remark_i(Report& r, const Session& s, const Options& o, bool soft) {
  auto md = max_degree(o, s.milnor());
  for (unsigned p : p_values(o, {0, 1, 2, 3})) {
    if (soft)
      r.verifications.push_back(guarded("remark_i p=" + std::to_string(p), [&] {
        return degree_verification("remark_i", hodgevf::verify_remark_i(s.milnor(), p, md));
      }));
    else
      r.verifications.push_back(degree_verification("remark_i", hodgevf::verify_remark_i(s.milnor(), p, md)));
  }
}

void verify_oracle(Report& r, const Session& s, const Options& o, bool soft) {
  auto spec = diagonal_spec_of(s.milnor().f());
  if (!spec) {
    if (soft) {
      r.verifications.push_back(skipped("oracle", "f is not of the form sum_i c_i x_i^a_i"));
      return;
    }
    throw PreconditionError("f must be of the form sum_i c_i x_i^a_i");
  }
  const Rational ceiling = ceiling_or(o, 3);
  r.verifications.push_back(oracle_verification(compare_with_oracle(*s.v, *spec, 10, ceiling), *spec));
}

void verify_all(Report& r, const Session& s, const Options& o) {
  const Rational ceiling = ceiling_or(o, 3);
  verify_theorem1(r, s, o);
  verify_eq242(r, s, o, true);
  verify_remark_i(r, s, o, true);
  if (is_fermat_cubic(s.milnor().f()))
    r.verifications.push_back(remark_ii_verification(counterexample_remark_ii()));
  else
    r.verifications.push_back(skipped("remark_ii", "applies to x^3 + y^3 + z^3 only"));
  r.verifications.push_back(corollary1_verification(verify_corollary1(s.milnor())));
  r.verifications.push_back(dims_verification(*s.v, ceiling));
  r.verifications.push_back(properties_verification(check_properties(*s.v, ceiling), ceiling));
  verify_oracle(r, s, o, true);
}

std::optional<DiagonalSpec> oracle_spec(const Options& o, std::vector<std::string>& names) {
  if (!o.exponents.empty()) {
    std::vector<unsigned> a;
    for (const std::string& item : split_list(o.exponents)) {
      Rational v = parse_flag_rational("--exponents", item);
      if (!is_integer(v) || v < 2 || v > 4096) throw InputError("--exponents: entries must be integers >= 2");
      a.push_back(static_cast<unsigned>(v.get_num().get_ui()));
    }
    if (a.size() > kMaxVars) throw InputError("--exponents: too many variables");
    if (o.vars.empty()) {
      for (std::size_t i = 0; i < a.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    } else {
      names = split_list(o.vars);
      if (names.size() != a.size()) throw InputError("--vars does not match --exponents");
    }
    return DiagonalSpec(std::move(a));
  }
  if (o.polynomial.empty()) throw InputError("missing input: pass --exponents a,b,... or -f <diagonal polynomial>");
  names = o.vars.empty() ? scan_variables(o.polynomial) : split_list(o.vars);
  auto spec = diagonal_spec_of(parse_expression(o.polynomial, names));
  if (!spec) throw PreconditionError("f must be of the form sum_i c_i x_i^a_i");
  return spec;
}

Report run_oracle(const std::string& which, const Options& o) {
  std::vector<std::string> names;
  DiagonalSpec spec = *oracle_spec(o, names);
  Report r;
  r.input = Json{{"exponents", spec.exponents}, {"variables", names}};
  Json result;
  if (which == "spectrum") {
    Spectrum sp = bp_spectrum(spec);
    result["spectrum"] = spectrum_json(sp);
    result["total"] = sp.total();
  } else {
    if (o.element.empty()) throw InputError("missing monomial: pass -g <monomial>");
    Polynomial g = parse_expression(o.element, names);
    if (!g.is_monomial()) throw InputError("-g must be a single monomial");
    Rational alpha = require_alpha(o);
    result["element"] = to_string(g, names);
    result["alpha"] = to_string(alpha);
    result["member"] = bp_v_member(spec, g.leading().mono, alpha);
  }
  r.result = std::move(result);
  return r;
}

Report run_vfilt(const std::string& which, const Session& s, const Options& o) {
  Report r = base_report(s);
  Json result;
  if (which == "member" || which == "order") {
    if (o.element.empty()) throw InputError("missing element: pass -g <expr>");
    Polynomial g = s.parse(o.element);
    result["element"] = to_string(g, s.names);
    if (which == "member") {
      Rational alpha = require_alpha(o);
      result["alpha"] = to_string(alpha);
      result["threshold"] = to_string(s.v->threshold(alpha));
      result["member"] = s.v->member(g, alpha);
    } else {
      Rational ceiling = ceiling_or(o, 3);
      VOrder ord = s.v->order(g, ceiling);
      result["ceiling"] = to_string(ceiling);
      result["order"] = to_string(ord.value);
      result["above_ceiling"] = ord.above_ceiling;
    }
  } else if (which == "level") {
    Rational alpha = require_alpha(o);
    auto level = s.v->level(alpha);
    std::vector<Polynomial> gens;
    for (const VGenerator& g : level->generators) gens.push_back(g.value);
    result["alpha"] = to_string(alpha);
    result["threshold"] = to_string(level->threshold);
    result["truncation"] = level->truncation;
    result["codim"] = s.v->codim(alpha);
    result["generators"] = polynomial_list(gens, s.names);
    result["groebner_basis"] = polynomial_list(level->ideal.basis(), s.names);
  } else {
    Rational ceiling = ceiling_or(o, 3);
    JumpList jl = s.v->jumping_numbers(ceiling);
    Json jumps = Json::array();
    for (const Jump& j : jl.jumps) jumps.push_back(Json{{"alpha", to_string(j.alpha)}, {"gr_dim", j.gr_dim}});
    result["ceiling"] = to_string(ceiling);
    result["jumps"] = std::move(jumps);
  }
  r.result = std::move(result);
  return r;
}

Report run_multiplier(const Session& s, const Options& o) {
  Report r = base_report(s);
  Rational alpha = require_alpha(o);
  IdealHandle ideal = s.v->multiplier_ideal(alpha);
  r.result = Json{{"alpha", to_string(alpha)},
                  {"groebner_basis", polynomial_list(ideal.basis(), s.names)},
                  {"colength", quotient_dim(ideal)}};
  return r;
}

Report run_hodge_slice(const Session& s, const Options& o) {
  Report r = base_report(s);
  const unsigned p = o.p.value_or(0);
  const Rational top = max_degree(o, s.milnor()).value_or(default_max_degree(p));
  const IntegerGrading g = s.milnor().weights().grading();
  HodgeIdeal hodge(s.milnor(), p);
  Json slices = Json::array();
  const long last = floor(top * Rational(g.scale)).get_si();
  for (long e = 0; e <= last; ++e) {
    GradedSlice slice = hodge.slice(e);
    if (!slice.attainable()) continue;
    Json entry{{"degree", to_string(g.to_weighted(e))}};
    Json body = slice_json(slice, s.names);
    for (auto& [key, value] : body.items()) entry[key] = value;
    slices.push_back(std::move(entry));
  }
  r.result = Json{{"p", p}, {"max_degree", to_string(top)}, {"slices", std::move(slices)}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Microlocal V-filtrations and Hodge ideals of weighted homogeneous isolated singularities", "hodgevf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", HODGEVF_VERSION);

  app.add_option("-f,--polynomial", o.polynomial, "Defining polynomial f");
  app.add_option("-g,--element", o.element, "Ring element or monomial to test");
  app.add_option("--vars", o.vars, "Comma-separated variable order (default: first appearance)");
  app.add_option("--weights", o.weights, "Comma-separated weights w_i (default: inferred)");
  app.add_option("--alpha", o.alpha, "Filtration index p/q");
  app.add_option("--p", o.p, "Hodge level p");
  app.add_option("--max-degree", o.max_degree, "Top degree: N in grading units, or a weighted degree p/q");
  app.add_option("--ceiling", o.ceiling, "Upper bound on filtration indices");
  app.add_option("--exponents", o.exponents, "Diagonal exponents a_1,...,a_n for the oracle");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string verb, noun;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, std::string& slot) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&slot, name] { slot = name; });
    return sub;
  };
  add(&app, "invariants", "mu, spectrum, mlct, lct, reduced Bernstein-Sato roots", verb);
  add(&app, "spectrum", "Spectral numbers with multiplicities", verb);
  add(&app, "multiplier", "Multiplier ideal J(alpha D) for 0 < alpha < 1", verb);
  CLI::App* vfilt = add(&app, "vfilt", "Microlocal V-filtration queries", verb);
  vfilt->require_subcommand(1);
  for (const char* n : {"member", "order", "level", "jumping"}) add(vfilt, n, std::string("vfilt ") + n, noun);
  CLI::App* hodge = add(&app, "hodge", "Hodge ideal slices", verb);
  hodge->require_subcommand(1);
  add(hodge, "slice", "Graded slices of I(D,p) up to --max-degree", noun);
  CLI::App* verify = add(&app, "verify", "Run verifications", verb);
  verify->require_subcommand(1);
  for (const char* n : {"theorem1", "eq242", "remark-i", "remark-ii", "dims", "oracle", "all"})
    add(verify, n, std::string("verify ") + n, noun);
  CLI::App* oracle = add(&app, "oracle", "Closed-form answers for diagonal f", verb);
  oracle->require_subcommand(1);
  for (const char* n : {"spectrum", "member"}) add(oracle, n, std::string("oracle ") + n, noun);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Report report;
    if (verb == "oracle") {
      report = run_oracle(noun, o);
    } else if (verb == "verify" && noun == "remark-ii") {
      report.input = Json{{"polynomial", "x^3 + y^3 + z^3"}};
      report.verifications.push_back(remark_ii_verification(counterexample_remark_ii()));
    } else {
      Session s = open_session(o);
      if (verb == "invariants") {
        report = base_report(s);
      } else if (verb == "spectrum") {
        report = base_report(s);
        report.result = Json{{"spectrum", spectrum_json(s.v->spectrum())}, {"total", s.v->spectrum().total()}};
      } else if (verb == "multiplier") {
        report = run_multiplier(s, o);
      } else if (verb == "vfilt") {
        report = run_vfilt(noun, s, o);
      } else if (verb == "hodge") {
        report = run_hodge_slice(s, o);
      } else {
        report = base_report(s);
        if (noun == "theorem1") {
          verify_theorem1(report, s, o);
        } else if (noun == "eq242") {
          verify_eq242(report, s, o, false);
        } else if (noun == "remark-i") {
          verify_remark_i(report, s, o, false);
        } else if (noun == "dims") {
          report.verifications.push_back(dims_verification(*s.v, ceiling_or(o, 3)));
        } else if (noun == "oracle") {
          verify_oracle(report, s, o, false);
        } else {
          verify_all(report, s, o);
        }
      }
    }
    out << (o.format == "json" ? render_json(report) : render_text(report));
    return report.any_failed() ? kVerificationFailed : kOk;
  } catch (const ParseError& e) {
    err << "error: parse error at offset " << e.offset() << ": " << e.what() << '\n';
  } catch (const WeightError& e) {
    err << "error: weights: " << e.what() << '\n';
  } catch (const MilnorError& e) {
    err << "error: isolated singularity required: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace hodgevf::cli
