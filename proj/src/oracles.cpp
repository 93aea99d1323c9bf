#include "hodgevf/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hodgevf {

DiagonalSpec::DiagonalSpec(std::vector<unsigned> a) : exponents(std::move(a)) {
  if (exponents.empty() || exponents.size() > kMaxVars) throw std::invalid_argument("bad number of exponents");
  for (unsigned e : exponents)
    if (e < 2) throw std::invalid_argument("diagonal exponents must be >= 2");
}

Rational DiagonalSpec::weight_sum() const {
  Rational s = 0;
  for (unsigned a : exponents) s += make_rational(1, a);
  return s;
}

namespace {

// Calls visit(m) for every m in prod_i [0, a_i - 2].
template <typename Visit>
void for_each_box_point(const DiagonalSpec& spec, Visit&& visit) {
  const std::size_t n = spec.size();
  std::vector<unsigned> m(n, 0);
  for (;;) {
    visit(m);
    std::size_t i = 0;
    while (i < n && m[i] + 2 == spec.exponents[i]) m[i++] = 0;
    if (i == n) return;
    ++m[i];
  }
}

Rational box_alpha(const DiagonalSpec& spec, const std::vector<unsigned>& m) {
  Rational a = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) a += make_rational(m[i] + 1, spec.exponents[i]);
  return a;
}

// All nu in N^n with |nu| = k.
void for_each_nu(std::size_t n, unsigned k, std::vector<unsigned>& nu, std::size_t i,
                 const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (i + 1 == n) {
    nu[i] = k;
    visit(nu);
    return;
  }
  for (unsigned e = 0; e <= k; ++e) {
    nu[i] = e;
    for_each_nu(n, k - e, nu, i + 1, visit);
  }
}

}  // namespace

Spectrum bp_spectrum(const DiagonalSpec& spec) {
  Spectrum s;
  for_each_box_point(spec, [&](const std::vector<unsigned>& m) { ++s.multiplicity[box_alpha(spec, m)]; });
  return s;
}

bool bp_v_member(const DiagonalSpec& spec, const Monomial& v, const Rational& alpha) {
  const std::size_t n = spec.size();
  if (v.size() != n) throw std::invalid_argument("monomial does not match the diagonal spec");
  Integer k_max = ceil(alpha - spec.weight_sum());
  if (k_max <= 0) return true;
  const unsigned K = static_cast<unsigned>(k_max.get_ui());
  // For fixed nu, v is divisible by a generator iff the largest admissible
  // box point m_i = min(a_i - 2, v_i - nu_i (a_i - 1)) reaches alpha - |nu|.
  bool found = false;
  std::vector<unsigned> nu(n);
  for (unsigned k = 0; k <= K && !found; ++k) {
    for_each_nu(n, k, nu, 0, [&](const std::vector<unsigned>& nu_k) {
      if (found) return;
      Rational best = static_cast<long>(k);
      for (std::size_t i = 0; i < n; ++i) {
        const long a = spec.exponents[i];
        const long room = static_cast<long>(v[i]) - static_cast<long>(nu_k[i]) * (a - 1);
        if (room < 0) return;
        best += make_rational(std::min(a - 2, room) + 1, a);
      }
      found = best >= alpha;
    });
  }
  return found;
}

std::optional<DiagonalSpec> diagonal_spec_of(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (n == 0 || f.size() != n) return std::nullopt;
  std::vector<unsigned> a(n, 0);
  for (const Term& t : f.terms()) {
    std::size_t var = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 0) continue;
      if (var != n) return std::nullopt;
      var = i;
    }
    if (var == n || a[var] != 0 || t.mono[var] < 2) return std::nullopt;
    a[var] = t.mono[var];
  }
  return DiagonalSpec(std::move(a));
}

OracleComparison compare_with_oracle(const VFiltration& v, const DiagonalSpec& spec, unsigned max_monomial_degree,
                                     const Rational& ceiling) {
  const std::size_t n = spec.size();
  if (v.milnor().nvars() != n) throw std::invalid_argument("diagonal spec does not match the ring");
  OracleComparison out;
  out.spectrum_agrees = bp_spectrum(spec) == v.spectrum();
  for (const Rational& alpha : v.candidates(ceiling)) {
    for (unsigned d = 0; d <= max_monomial_degree; ++d) {
      for (const Monomial& mono : monomials_of_degree(n, d)) {
        ++out.membership_checks;
        const bool expected = bp_v_member(spec, mono, alpha);
        if (v.member(Polynomial::monomial(mono), alpha) != expected) {
          std::string e;
          for (std::size_t i = 0; i < n; ++i) e += (i ? "," : "") + std::to_string(mono[i]);
          out.first_mismatch = "exponents (" + e + ") at alpha " + to_string(alpha) + ": oracle says " +
                               (expected ? "member" : "not a member");
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace hodgevf
