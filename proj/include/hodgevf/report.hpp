#pragma once

// Serialization of computation results. Every rational is an exact "p/q"
// string and key order is fixed, so equal inputs give byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgevf/hodge.hpp"
#include "hodgevf/milnor.hpp"
#include "hodgevf/oracles.hpp"
#include "hodgevf/vfilt.hpp"

namespace hodgevf {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Verification {
  std::string name;
  Status status = Status::Skipped;
  Json details = Json::object();
};

struct Report {
  Json input = Json::object();
  Json invariants = Json::object();
  std::vector<Verification> verifications;
  std::optional<Json> result;

  bool any_failed() const;
  Json to_json() const;
};

std::string render_json(const Report& r);
std::string render_text(const Report& r);

Json rational_list(const std::vector<Rational>& values);
Json polynomial_list(const std::vector<Polynomial>& polys, const std::vector<std::string>& names);
Json spectrum_json(const Spectrum& s);
Json input_json(const std::string& text, const std::vector<std::string>& names, const MilnorData& m);
Json invariants_json(const VFiltration& v, const std::vector<std::string>& names);
Json slice_json(const GradedSlice& s, const std::vector<std::string>& names);

Verification degree_verification(const std::string& name, const DegreeReport& r);
Verification remark_ii_verification(const RemarkIIReport& r);
Verification corollary1_verification(const FloorReport& r);
Verification dims_verification(const VFiltration& v, const Rational& ceiling);
Verification properties_verification(const std::vector<PropertyCheck>& checks, const Rational& ceiling);
Verification oracle_verification(const OracleComparison& c, const DiagonalSpec& spec);
Verification skipped(const std::string& name, const std::string& reason);

}  // namespace hodgevf
