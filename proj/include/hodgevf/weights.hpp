#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgevf/polynomial.hpp"

namespace hodgevf {

/// Integer rescaling of a weight system: w_i = weights[i] / scale with scale
/// the lcm of the denominators. A weighted homogeneous f has integer degree
/// `scale` in this grading, and for w_i = 1/d it is the ordinary degree.
struct IntegerGrading {
  std::vector<long> weights;
  long scale = 1;

  long degree(const Monomial& m) const;
  Rational to_weighted(long int_degree) const { return make_rational(int_degree, scale); }
  // Integer degree of a rational weighted degree, or -1 when e * scale is not
  // an integer (e is then off the grid).
  long from_weighted(const Rational& e) const;
};

/// Positive rational weights (w_1, ..., w_n).
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<Rational> weights);

  static WeightSystem homogeneous(std::size_t nvars, long d);

  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& values() const { return w_; }
  Rational sum() const;
  bool is_homogeneous() const;  // all weights equal

  Rational weighted_degree(const Monomial& m) const;
  const IntegerGrading& grading() const { return grading_; }

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.w_ == b.w_; }

 private:
  std::vector<Rational> w_;
  IntegerGrading grading_;
};

// alpha(v) = sum_i (m_i + 1) w_i.
Rational alpha_value(const Monomial& v, const WeightSystem& w);

class WeightError : public std::runtime_error {
 public:
  enum class Kind { Underdetermined, Inconsistent, NonPositive, Degenerate };
  WeightError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Unique positive solution of sum_i m_i w_i = 1 over the monomials of f.
WeightSystem infer_weights(const Polynomial& f);

// True iff every monomial of f has weighted degree 1. On success also checks
// the Euler identity sum_i w_i x_i f_i = f (a failure there is a logic error).
bool check_weighted_homogeneous(const Polynomial& f, const WeightSystem& w);

struct PowerCheck {
  bool ok = false;
  std::string message;
  explicit operator bool() const { return ok; }
};

// Whether x_i^{1/w_i} occurs in f for every i.
PowerCheck check_coordinate_powers(const Polynomial& f, const WeightSystem& w);

}  // namespace hodgevf
