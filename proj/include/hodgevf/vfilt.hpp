#pragma once

// Microlocal V-filtration on the local ring of a weighted homogeneous
// isolated singularity f, with x_i^{1/w_i} monomials in f:
//
//   V^alpha = sum over (j, nu) with alpha(v_j) + |nu| >= alpha of  A * y^nu * v_j,
//   y^nu = prod_i f_i^{nu_i},  v_j the Milnor-algebra monomial basis.
//
// The index set is infinite; it is truncated at |nu| = K with
// K = max(0, ceil(alpha - mlct)). Every j qualifies once |nu| >= K and 1 is a
// basis monomial, so that level contributes exactly (df)^K.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hodgevf/groebner.hpp"
#include "hodgevf/milnor.hpp"

namespace hodgevf {

struct VGenerator {
  Monomial basis_monomial;  // v_j
  Monomial nu;              // exponent vector of y^nu
  Polynomial value;         // y^nu * v_j
};

struct VLevel {
  Rational alpha;
  // Smallest grid point >= alpha; the ideal only depends on it.
  Rational threshold;
  unsigned truncation = 0;  // K
  std::vector<VGenerator> generators;
  IdealHandle ideal;
};

struct Jump {
  Rational alpha;
  std::size_t gr_dim = 0;
};

struct JumpList {
  std::vector<Jump> jumps;  // strictly increasing
  Rational ceiling;
};

/// Order of g: the largest grid index c with g in V^c. When g still lies in
/// the first grid index above the ceiling the order is not determined and
/// `above_ceiling` is set; `value` then holds the largest index <= ceiling.
struct VOrder {
  Rational value;
  bool above_ceiling = false;
};

class VFiltration {
 public:
  explicit VFiltration(MilnorData milnor);

  const MilnorData& milnor() const { return m_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const Rational& mlct() const { return mlct_; }

  // Grid {alpha(v_j) + k : k in N} up to and including ceiling, ascending.
  std::vector<Rational> candidates(const Rational& ceiling) const;
  bool is_candidate(const Rational& alpha) const;
  Rational threshold(const Rational& alpha) const;  // smallest grid point >= alpha
  Rational successor(const Rational& alpha) const;  // smallest grid point > alpha

  std::shared_ptr<const VLevel> level(const Rational& alpha) const;
  bool member(const Polynomial& g, const Rational& alpha) const;
  VOrder order(const Polynomial& g, const Rational& ceiling) const;
  // dim A / V^alpha.
  std::size_t codim(const Rational& alpha) const;

  JumpList jumping_numbers(const Rational& ceiling) const;
  // sum_k binom(n+k-1, n-1) n_{f, alpha-k}
  std::size_t gr_dim_formula(const Rational& alpha) const;
  // codim V^{>alpha} - codim V^alpha via Groebner bases.
  std::size_t gr_dim_direct(const Rational& alpha) const;

  // floor(mlct), checked against the unit-ideal transitions of V^{p+1}.
  unsigned hodge_floor() const;
  // J(alpha D) = V^{>alpha} for 0 < alpha < 1.
  IdealHandle multiplier_ideal(const Rational& alpha) const;

 private:
  std::shared_ptr<const VLevel> build_level(const Rational& threshold) const;
  const Polynomial& jacobian_power(const Monomial& nu) const;

  MilnorData m_;
  Spectrum spectrum_;
  Rational mlct_;
  std::vector<Rational> spectral_values_;

  mutable std::mutex mutex_;
  mutable std::map<Rational, std::shared_ptr<const VLevel>> levels_;
  mutable std::mutex power_mutex_;
  mutable std::map<std::vector<unsigned>, Polynomial> powers_;
};

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample, empty on success
};

// Structural identities of the filtration on the grid up to ceiling:
// monotonicity, f_i V^alpha in V^{alpha+1}, sum of multiplicities = mu,
// spectrum symmetry about n/2, reduced Bernstein-Sato roots in
// [mlct, n - mlct], and the two routes to mlct.
std::vector<PropertyCheck> check_properties(const VFiltration& v, const Rational& ceiling);

// Free-function forms; each builds a fresh VFiltration.
VLevel v_level(const MilnorData& m, const Rational& alpha);
bool v_member(const MilnorData& m, const Polynomial& g, const Rational& alpha);
VOrder v_order(const MilnorData& m, const Polynomial& g, const Rational& ceiling);
JumpList jumping_numbers(const MilnorData& m, const Rational& ceiling);
std::size_t gr_dim_formula(const MilnorData& m, const Rational& alpha);
std::size_t gr_dim_direct(const MilnorData& m, const Rational& alpha);
unsigned hodge_floor(const MilnorData& m);
IdealHandle multiplier_ideal(const MilnorData& m, const Rational& alpha);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace hodgevf
