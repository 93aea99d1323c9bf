#include "hodgevf/report.hpp"

#include <sstream>

namespace hodgevf {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

bool Report::any_failed() const {
  for (const Verification& v : verifications)
    if (v.status == Status::Fail) return true;
  return false;
}

Json Report::to_json() const {
  Json out;
  out["version"] = HODGEVF_VERSION;
  out["input"] = input;
  out["invariants"] = invariants;
  Json list = Json::array();
  for (const Verification& v : verifications)
    list.push_back(Json{{"name", v.name}, {"status", to_string(v.status)}, {"details", v.details}});
  out["verifications"] = std::move(list);
  if (result) out["result"] = *result;
  return out;
}

std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool all_scalars(const Json& arr) {
  for (const Json& e : arr)
    if (e.is_structured()) return false;
  return true;
}

void write_text(std::ostream& os, const Json& j, int indent);

void write_entry(std::ostream& os, const std::string& key, const Json& value, int indent) {
  const std::string pad(indent, ' ');
  if (value.is_object()) {
    if (value.empty()) return;
    os << pad << key << ":\n";
    write_text(os, value, indent + 2);
  } else if (value.is_array()) {
    if (all_scalars(value)) {
      os << pad << key << ":";
      for (const Json& e : value) os << ' ' << scalar_text(e);
      os << '\n';
    } else {
      os << pad << key << ":\n";
      write_text(os, value, indent + 2);
    }
  } else {
    os << pad << key << ": " << scalar_text(value) << '\n';
  }
}

void write_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) write_entry(os, key, value, indent);
  } else if (j.is_array()) {
    for (const Json& e : j) {
      if (e.is_object()) {
        // first field on the bullet line, the rest indented below it
        bool first = true;
        for (const auto& [key, value] : e.items()) {
          if (first && !value.is_structured()) {
            os << pad << "- " << key << ": " << scalar_text(value) << '\n';
          } else {
            if (first) os << pad << "-\n";
            write_entry(os, key, value, indent + 2);
          }
          first = false;
        }
      } else {
        os << pad << "- " << scalar_text(e) << '\n';
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "hodgevf " << HODGEVF_VERSION << '\n';
  write_entry(os, "input", r.input, 0);
  write_entry(os, "invariants", r.invariants, 0);
  if (!r.verifications.empty()) {
    os << "verifications:\n";
    for (const Verification& v : r.verifications) {
      os << "  [" << to_string(v.status) << "] " << v.name << '\n';
      write_text(os, v.details, 6);
    }
  }
  if (r.result) write_entry(os, "result", *r.result, 0);
  return os.str();
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

Json polynomial_list(const std::vector<Polynomial>& polys, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const Polynomial& p : polys) out.push_back(to_string(p, names));
  return out;
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& [alpha, mult] : s.multiplicity) out.push_back(Json{{"alpha", to_string(alpha)}, {"multiplicity", mult}});
  return out;
}

Json input_json(const std::string& text, const std::vector<std::string>& names, const MilnorData& m) {
  Json out;
  out["polynomial"] = text;
  out["normalized"] = to_string(m.f(), names);
  out["variables"] = names;
  out["weights"] = rational_list(m.weights().values());
  return out;
}

Json invariants_json(const VFiltration& v, const std::vector<std::string>& names) {
  const MilnorData& m = v.milnor();
  Json out;
  out["mu"] = m.mu();
  out["weight_sum"] = to_string(m.weights().sum());
  out["mlct"] = to_string(v.mlct());
  out["lct"] = to_string(lct(m));
  out["spectrum"] = spectrum_json(v.spectrum());
  out["reduced_bs_roots"] = rational_list(reduced_bs_roots(m));
  out["hodge_floor"] = v.hodge_floor();
  Json basis = Json::array();
  for (const Monomial& b : m.basis()) basis.push_back(to_string(b, names));
  out["milnor_basis"] = std::move(basis);
  out["warnings"] = m.warnings();
  return out;
}

Json slice_json(const GradedSlice& s, const std::vector<std::string>& names) {
  Json out;
  out["dim"] = s.dim();
  out["ambient_dim"] = s.ambient_dim();
  out["basis"] = polynomial_list(s.rows(), names);
  return out;
}

Verification degree_verification(const std::string& name, const DegreeReport& r) {
  Verification v;
  v.name = name + " p=" + std::to_string(r.p);
  v.status = r.passed() ? Status::Pass : Status::Fail;
  Json& d = v.details;
  d["p"] = r.p;
  d["modulo_f"] = r.modulo_f;
  d["max_degree"] = to_string(r.max_degree);
  d["degrees_checked"] = r.degrees.size();
  auto failure = r.first_failure();
  d["first_failure"] = failure ? Json(to_string(*failure)) : Json(nullptr);
  Json dims = Json::array();
  for (const DegreeCheck& c : r.degrees)
    dims.push_back(Json{{"degree", to_string(c.degree)}, {"hodge_dim", c.lhs_dim}, {"v_dim", c.rhs_dim}, {"equal", c.equal}});
  d["slices"] = std::move(dims);
  return v;
}

Verification remark_ii_verification(const RemarkIIReport& r) {
  Verification v;
  v.name = "remark_ii";
  v.status = r.passed() ? Status::Pass : Status::Fail;
  v.details = Json{{"polynomial", "x^3 + y^3 + z^3"},
                   {"x^4 in V^3", r.x4_in_v3},
                   {"x*(y^3 + z^3) not in V^3", r.witness_not_in_v3},
                   {"12*x^4 - 6*x*(y^3 + z^3) in I(D,2)", r.hodge_contains_derivative},
                   {"I(D,2) != V^3 in degree 4", r.hodge_differs_from_v3},
                   {"x*(y^3 + z^3) in V^3 + (f)", r.witness_in_v3_plus_f},
                   {"derivatives match", r.derivatives_match},
                   {"d/dx (1/f)", r.first_derivative},
                   {"d^2/dx^2 (1/f)", r.second_derivative}};
  return v;
}

Verification corollary1_verification(const FloorReport& r) {
  Verification v;
  v.name = "corollary1";
  v.status = r.passed() ? Status::Pass : Status::Fail;
  v.details = Json{{"hodge_floor", r.hodge_floor},
                   {"floor_weight_sum", r.weight_sum_floor.get_str()},
                   {"v_unit", r.v_unit},
                   {"hodge_unit", r.hodge_unit}};
  return v;
}

Verification dims_verification(const VFiltration& vf, const Rational& ceiling) {
  Verification v;
  v.name = "dims";
  bool ok = true;
  Json rows = Json::array();
  for (const Rational& c : vf.candidates(ceiling)) {
    const std::size_t formula = vf.gr_dim_formula(c);
    const std::size_t direct = vf.gr_dim_direct(c);
    ok = ok && formula == direct;
    rows.push_back(Json{{"alpha", to_string(c)}, {"formula", formula}, {"direct", direct}});
  }
  v.status = ok ? Status::Pass : Status::Fail;
  v.details = Json{{"ceiling", to_string(ceiling)}, {"candidates", std::move(rows)}};
  return v;
}

Verification properties_verification(const std::vector<PropertyCheck>& checks, const Rational& ceiling) {
  Verification v;
  v.name = "properties";
  bool ok = true;
  v.details["ceiling"] = to_string(ceiling);
  for (const PropertyCheck& c : checks) {
    ok = ok && c.passed;
    v.details[c.name] = c.passed ? Json("pass") : Json("fail: " + c.detail);
  }
  v.status = ok ? Status::Pass : Status::Fail;
  return v;
}

Verification oracle_verification(const OracleComparison& c, const DiagonalSpec& spec) {
  Verification v;
  v.name = "oracle";
  v.status = c.passed() ? Status::Pass : Status::Fail;
  v.details = Json{{"exponents", spec.exponents},
                   {"spectrum_agrees", c.spectrum_agrees},
                   {"membership_checks", c.membership_checks},
                   {"first_mismatch", c.first_mismatch ? Json(*c.first_mismatch) : Json(nullptr)}};
  return v;
}

Verification skipped(const std::string& name, const std::string& reason) {
  Verification v;
  v.name = name;
  v.status = Status::Skipped;
  v.details = Json{{"reason", reason}};
  return v;
}

}  // namespace hodgevf
