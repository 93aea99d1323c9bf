#pragma once

// Closed-form invariants of Brieskorn-Pham polynomials f = sum_i x_i^{a_i}.
// Nothing here touches Groebner bases: the Milnor algebra basis is the box
// prod_i [0, a_i - 2] and every V-filtration level is a monomial ideal.

#include <optional>
#include <string>
#include <vector>

#include "hodgevf/milnor.hpp"
#include "hodgevf/monomial.hpp"
#include "hodgevf/rational.hpp"
#include "hodgevf/vfilt.hpp"

namespace hodgevf {

struct DiagonalSpec {
  std::vector<unsigned> exponents;  // a_i >= 2

  explicit DiagonalSpec(std::vector<unsigned> a);
  std::size_t size() const { return exponents.size(); }
  Rational weight_sum() const;
};

Spectrum bp_spectrum(const DiagonalSpec& spec);

// v in V^alpha, decided by divisibility against the monomials
// prod_i x_i^{nu_i (a_i - 1) + m_i} with sum_i (m_i+1)/a_i + |nu| >= alpha.
bool bp_v_member(const DiagonalSpec& spec, const Monomial& v, const Rational& alpha);

// The exponents a_i if f = sum_i c_i x_i^{a_i} with c_i != 0 and a_i >= 2.
std::optional<DiagonalSpec> diagonal_spec_of(const Polynomial& f);

struct OracleComparison {
  bool spectrum_agrees = false;
  std::size_t membership_checks = 0;
  std::optional<std::string> first_mismatch;
  bool passed() const { return spectrum_agrees && !first_mismatch; }
};

// Groebner pipeline against the oracle: spectra, and membership of every
// monomial of degree <= max_monomial_degree in V^alpha for every grid point
// alpha <= ceiling.
OracleComparison compare_with_oracle(const VFiltration& v, const DiagonalSpec& spec, unsigned max_monomial_degree,
                                     const Rational& ceiling);

}  // namespace hodgevf
