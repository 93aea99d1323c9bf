#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hodgevf/monomial.hpp"
#include "hodgevf/rational.hpp"

namespace hodgevf {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are unique, carry nonzero coefficients and are kept in descending
/// grevlex order, so equal polynomials have identical term vectors. The
/// variable count is fixed at construction and checked by every binary
/// operation.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  // Combines duplicate monomials and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Leading term in grevlex order; requires !is_zero().
  const Term& leading() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  // Multiplication by a single term c * m.
  Polynomial times(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t i) const;
  // Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t i);

// Exact division: the quotient q with num == q * den, or nullopt if den does
// not divide num. den must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

// Canonical print: descending grevlex terms, coefficients as integers or p/q,
// explicit '*' between factors. Parses back to the same polynomial.
std::string to_string(const Polynomial& p, std::span<const std::string> variables);
std::string to_string(const Monomial& m, std::span<const std::string> variables);

}  // namespace hodgevf
