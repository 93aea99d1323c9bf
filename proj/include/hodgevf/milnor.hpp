#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgevf/groebner.hpp"
#include "hodgevf/polynomial.hpp"
#include "hodgevf/weights.hpp"

namespace hodgevf {

class MilnorError : public std::runtime_error {
 public:
  enum class Kind { NotWeightedHomogeneous, SmoothDivisor, NonIsolated };
  MilnorError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Multiset of spectral numbers alpha -> n_{f,alpha}.
struct Spectrum {
  std::map<Rational, unsigned> multiplicity;

  unsigned total() const;
  unsigned operator[](const Rational& alpha) const;
  Rational min() const;
  Rational max() const;
  std::vector<Rational> values() const;  // distinct, ascending

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Milnor algebra data of a weighted homogeneous isolated singularity.
///
/// The monomial basis v_j is the set of grevlex standard monomials of the
/// Jacobian ideal, so mu = basis.size() and alphas[j] = alpha(v_j).
class MilnorData {
 public:
  const Polynomial& f() const { return f_; }
  const WeightSystem& weights() const { return w_; }
  std::size_t nvars() const { return f_.nvars(); }
  const std::vector<Polynomial>& partials() const { return partials_; }
  const IdealHandle& jacobian() const { return jacobian_; }
  std::size_t mu() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<Rational>& alphas() const { return alphas_; }
  // Non-fatal diagnostics, e.g. a missing x_i^{a_i} monomial.
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool has_coordinate_powers() const { return coordinate_powers_; }

 private:
  friend MilnorData build_milnor(const Polynomial& f, std::optional<WeightSystem> w);
  MilnorData(Polynomial f, WeightSystem w, std::vector<Polynomial> partials, IdealHandle jacobian)
      : f_(std::move(f)), w_(std::move(w)), partials_(std::move(partials)), jacobian_(std::move(jacobian)) {}

  Polynomial f_;
  WeightSystem w_;
  std::vector<Polynomial> partials_;
  IdealHandle jacobian_;
  std::vector<Monomial> basis_;
  std::vector<Rational> alphas_;
  std::vector<std::string> warnings_;
  bool coordinate_powers_ = false;
};

// Infers weights when none are given. Throws WeightError or MilnorError.
MilnorData build_milnor(const Polynomial& f, std::optional<WeightSystem> w = {});

Spectrum spectrum(const MilnorData& m);

// sum_i w_i, checked against the minimal spectral number.
Rational mlct(const MilnorData& m);
// min(1, mlct).
Rational lct(const MilnorData& m);
// Roots of the reduced Bernstein-Sato polynomial, negated: the distinct
// spectral numbers, ascending; checked to lie in [mlct, n - mlct].
std::vector<Rational> reduced_bs_roots(const MilnorData& m);

}  // namespace hodgevf
