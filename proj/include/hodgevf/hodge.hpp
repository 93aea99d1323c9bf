#pragma once

// Hodge ideals of a weighted homogeneous isolated singularity, one weighted
// degree at a time. With A^{>=k} the monomial ideal of all v with
// alpha(v) >= k, the Hodge filtration of O(*D) is
//
//   F_p = sum_{|nu| <= p} d^nu ( A^{>=p+1-|nu|} / f^{p+1-|nu|} )
//
// as an O-module, and the p-th Hodge ideal is f^{p+1} F_p.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgevf/graded.hpp"
#include "hodgevf/milnor.hpp"
#include "hodgevf/vfilt.hpp"

namespace hodgevf {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// numerator / f^pole_order in O(*D). Kept canonical: when pole_order > 0 the
/// numerator is not divisible by f.
class PoleFraction {
 public:
  PoleFraction(Polynomial numerator, unsigned pole_order, Polynomial f);

  const Polynomial& numerator() const { return numerator_; }
  unsigned pole_order() const { return pole_order_; }
  const Polynomial& f() const { return *f_; }
  // The numerator over f^m for m >= pole_order().
  Polynomial numerator_over(unsigned m) const;

  friend bool operator==(const PoleFraction& a, const PoleFraction& b) {
    return a.pole_order_ == b.pole_order_ && a.numerator_ == b.numerator_;
  }

 private:
  friend PoleFraction quotient_derivative(const PoleFraction& q, std::size_t i);
  PoleFraction(Polynomial numerator, unsigned pole_order, std::shared_ptr<const Polynomial> f);
  void canonicalize();

  Polynomial numerator_;
  unsigned pole_order_ = 0;
  std::shared_ptr<const Polynomial> f_;
};

// d/dx_i (g / f^m) = (f * d_i g - m * g * f_i) / f^{m+1}, canonicalized.
PoleFraction quotient_derivative(const PoleFraction& q, std::size_t i);

/// The p-th Hodge ideal as a graded family of slices.
class HodgeIdeal {
 public:
  HodgeIdeal(const MilnorData& m, unsigned p);

  unsigned p() const { return p_; }
  GradedSlice slice(const Rational& e) const { return span_->slice(e); }
  GradedSlice slice(long int_degree) const { return span_->slice(int_degree); }

  // The numerators f^{p+1} d^nu(v / f^{p+1-|nu|}) of integer degree E.
  std::vector<Polynomial> generators(long int_degree) const;

  struct Data {
    Polynomial f;
    std::vector<Polynomial> partials;
    IntegerGrading grading;
    unsigned p;
  };

 private:
  unsigned p_;
  std::shared_ptr<const Data> data_;
  std::shared_ptr<GradedSpan> span_;
};

struct HodgeSlice {
  unsigned p = 0;
  Rational degree;
  GradedSlice slice;
};

HodgeSlice hodge_slice(const MilnorData& m, unsigned p, const Rational& e);

struct DegreeCheck {
  Rational degree;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  bool equal = false;
};

/// Degreewise comparison of I^(D,p) with V^{p+1}, optionally modulo (f).
struct DegreeReport {
  std::string name;
  unsigned p = 0;
  bool modulo_f = false;
  Rational max_degree;
  std::vector<DegreeCheck> degrees;

  bool passed() const;
  std::optional<Rational> first_failure() const;
};

// Default upper weighted degree for the comparisons: p + 2.
Rational default_max_degree(unsigned p);

DegreeReport compare_hodge_with_v(const VFiltration& v, unsigned p, const Rational& max_degree, bool modulo_f);

// I^(D,p) + (f) = V^{p+1} + (f) in every degree <= max_degree.
DegreeReport verify_theorem1(const MilnorData& m, unsigned p, std::optional<Rational> max_degree = {});
// I^(D,p) = V^{p+1} for homogeneous f and p in {0, 1}.
DegreeReport verify_242(const MilnorData& m, unsigned p, std::optional<Rational> max_degree = {});
// I^(D,p) = V^{p+1} for nondegenerate quadrics, any p.
DegreeReport verify_remark_i(const MilnorData& m, unsigned p, std::optional<Rational> max_degree = {});

/// I^(D,p) is the unit ideal exactly for p < floor(sum w_i), read off both
/// from the unit transitions of V^{p+1} and from the degree-0 Hodge slices.
struct FloorReport {
  unsigned hodge_floor = 0;
  Integer weight_sum_floor;
  std::vector<bool> v_unit;      // V^{p+1} = O, p = 0..hodge_floor
  std::vector<bool> hodge_unit;  // 1 in I^(D,p), p = 0..hodge_floor
  bool passed() const;
};
FloorReport verify_corollary1(const MilnorData& m);

/// The p = 2 failure of the strict equality for x^3 + y^3 + z^3.
struct RemarkIIReport {
  bool x4_in_v3 = false;
  bool witness_not_in_v3 = false;  // x(y^3+z^3)
  bool hodge_contains_derivative = false;  // 12x^4 - 6x(y^3+z^3) in I^(D,2)
  bool hodge_differs_from_v3 = false;
  bool witness_in_v3_plus_f = false;
  // d_x(1/f) = -3x^2/f^2 and d_x^2(1/f) = (12x^4 - 6x(y^3+z^3))/f^3
  bool derivatives_match = false;
  std::string first_derivative;
  std::string second_derivative;

  bool passed() const {
    return x4_in_v3 && witness_not_in_v3 && hodge_contains_derivative && hodge_differs_from_v3 &&
           witness_in_v3_plus_f && derivatives_match;
  }
};

RemarkIIReport counterexample_remark_ii();

}  // namespace hodgevf
