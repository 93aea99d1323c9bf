#pragma once

#include <string>
#include <vector>

#include "hodgevf/milnor.hpp"
#include "hodgevf/parser.hpp"
#include "hodgevf/polynomial.hpp"

namespace hodgevf::testing {

inline const std::vector<std::string> kXYZ = {"x", "y", "z"};
inline const std::vector<std::string> kXY = {"x", "y"};

inline Polynomial poly(const std::string& text, const std::vector<std::string>& names) {
  return parse_expression(text, names);
}

inline Polynomial poly(const std::string& text) { return parse_expression(text, scan_variables(text)); }

inline MilnorData milnor(const std::string& text) { return build_milnor(poly(text)); }

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

// sum_i x_i^{a_i} in variables x1, x2, ...
inline std::string diagonal_text(const std::vector<unsigned>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out += (i ? " + x" : "x") + std::to_string(i + 1) + "^" + std::to_string(a[i]);
  return out;
}

inline std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace hodgevf::testing
