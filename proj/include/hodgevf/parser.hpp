#pragma once

// Expression language for polynomial input:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'
//   NAME    := [a-z][a-z0-9_]*
//
// Whitespace is ignored between tokens. Multiplication must be explicit.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodgevf/polynomial.hpp"

namespace hodgevf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Polynomial parse_expression(std::string_view text, std::span<const std::string> variables);

// Variable names in order of first appearance; throws ParseError on
// characters outside the grammar's alphabet.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace hodgevf
