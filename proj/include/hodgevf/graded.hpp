#pragma once

// Weighted-degree pieces of graded subspaces of Q[x_1..x_n], kept as
// canonical reduced row-echelon bases.

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "hodgevf/polynomial.hpp"
#include "hodgevf/weights.hpp"

namespace hodgevf {

/// Finite basis of the weighted-degree-e piece of a graded subspace.
///
/// Columns are the monomials of degree e in descending grevlex order. Rows
/// are monic with pairwise distinct leading monomials (pivots), every pivot
/// appears in exactly one row, and rows are sorted by pivot. This form is
/// unique for a given subspace.
class GradedSlice {
 public:
  GradedSlice() = default;
  // Row-reduces `spanning` (any polynomials supported on `support`).
  GradedSlice(Rational degree, std::vector<Monomial> support, const std::vector<Polynomial>& spanning,
              bool attainable = true);

  static GradedSlice full(Rational degree, std::vector<Monomial> support);

  const Rational& degree() const { return degree_; }
  const std::vector<Monomial>& support() const { return support_; }
  const std::vector<Polynomial>& rows() const { return rows_; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return support_.size(); }
  bool is_full() const { return rows_.size() == support_.size(); }
  // False when no monomial has this weighted degree.
  bool attainable() const { return attainable_; }

  bool contains(const Polynomial& g) const;
  bool contains(const GradedSlice& other) const;

  friend bool operator==(const GradedSlice& a, const GradedSlice& b) {
    return a.degree_ == b.degree_ && a.rows_ == b.rows_;
  }

 private:
  friend class GradedSpan;

  Rational degree_;
  std::vector<Monomial> support_;
  std::vector<Polynomial> rows_;
  bool attainable_ = false;
};

// Subspace equality; throws std::invalid_argument on a degree mismatch.
bool slice_equal(const GradedSlice& a, const GradedSlice& b);
GradedSlice slice_sum(const GradedSlice& a, const GradedSlice& b);

/// Degreewise slices of the ideal generated by homogeneous elements.
///
/// The source returns the generators of a given integer degree. Slices are
/// built bottom-up as I_E = span(generators of degree E) + sum_i x_i I_{E-W_i},
/// which equals the span of all u*g with u a monomial. Results are memoized;
/// access is serialized internally.
class GradedSpan {
 public:
  using GeneratorSource = std::function<std::vector<Polynomial>(long int_degree)>;

  GradedSpan(std::size_t nvars, IntegerGrading grading, GeneratorSource source);

  const IntegerGrading& grading() const { return grading_; }
  GradedSlice slice(long int_degree) const;
  // Off-grid degrees yield an empty, non-attainable slice.
  GradedSlice slice(const Rational& e) const;

 private:
  const GradedSlice& compute(long int_degree) const;

  std::size_t nvars_;
  IntegerGrading grading_;
  GeneratorSource source_;
  mutable std::mutex mutex_;
  mutable std::map<long, GradedSlice> cache_;
};

// Generator source for a fixed list of homogeneous generators. Throws
// std::invalid_argument if a generator is not homogeneous for the grading.
GradedSpan::GeneratorSource fixed_generators(std::vector<Polynomial> generators, const IntegerGrading& grading);

}  // namespace hodgevf
