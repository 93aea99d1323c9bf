#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hodgevf/graded.hpp"
#include "hodgevf/polynomial.hpp"
#include "hodgevf/weights.hpp"

namespace hodgevf {

/// Global degree-compatible order: compare by (weighted) degree, break ties
/// reverse lexicographically. Plain grevlex uses unit weights.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, WeightedGrevlex };

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder weighted_grevlex(const WeightSystem& w);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return weights_.size(); }
  const std::vector<long>& weights() const { return weights_; }

  long degree(const Monomial& m) const;
  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<long> weights) : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_ = Kind::Grevlex;
  std::vector<long> weights_;
};

class InfiniteQuotientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ideal given by generators, with its reduced monic Groebner basis
/// computed on first use. Copies share the basis and the graded-slice cache;
/// concurrent first use computes the basis exactly once.
class IdealHandle {
 public:
  IdealHandle() : IdealHandle(0, {}) {}
  IdealHandle(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order);
  IdealHandle(std::size_t nvars, std::vector<Polynomial> generators);  // grevlex

  std::size_t nvars() const;
  const MonomialOrder& order() const;
  const std::vector<Polynomial>& generators() const;

  // Reduced monic basis sorted by ascending leading monomial.
  const std::vector<Polynomial>& basis() const;
  // Leading monomials of basis(), same order.
  const std::vector<Monomial>& leading_monomials() const;

  bool is_unit() const;
  Polynomial normal_form(const Polynomial& g) const;
  bool contains(const Polynomial& g) const { return normal_form(g).is_zero(); }
  bool contains(const IdealHandle& other) const;

  // Degree-e piece for a grading in which all generators are homogeneous.
  GradedSlice graded_slice(const Rational& e, const WeightSystem& w) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

IdealHandle buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& g, const IdealHandle& ideal);

// Monomials outside the leading ideal, ascending grevlex. Without a bound the
// quotient must be finite dimensional; with one, only monomials of total
// degree <= bound are listed.
std::vector<Monomial> standard_monomials(const IdealHandle& ideal, std::optional<unsigned> degree_bound = {});
std::size_t quotient_dim(const IdealHandle& ideal);
bool has_finite_quotient(const IdealHandle& ideal);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
// Ideal generated by all k-fold products of generators; k = 0 gives the unit ideal.
IdealHandle ideal_power_times(const IdealHandle& ideal, int k);

GradedSlice graded_slice(const IdealHandle& ideal, const Rational& e, const WeightSystem& w);

}  // namespace hodgevf
