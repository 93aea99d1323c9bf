#include "hodgevf/milnor.hpp"

namespace hodgevf {

unsigned Spectrum::total() const {
  unsigned s = 0;
  for (const auto& [a, k] : multiplicity) s += k;
  return s;
}

unsigned Spectrum::operator[](const Rational& alpha) const {
  auto it = multiplicity.find(alpha);
  return it == multiplicity.end() ? 0 : it->second;
}

Rational Spectrum::min() const {
  if (multiplicity.empty()) throw std::logic_error("empty spectrum");
  return multiplicity.begin()->first;
}

Rational Spectrum::max() const {
  if (multiplicity.empty()) throw std::logic_error("empty spectrum");
  return multiplicity.rbegin()->first;
}

std::vector<Rational> Spectrum::values() const {
  std::vector<Rational> v;
  for (const auto& [a, k] : multiplicity) v.push_back(a);
  return v;
}

MilnorData build_milnor(const Polynomial& f, std::optional<WeightSystem> w) {
  const std::size_t n = f.nvars();
  if (n == 0) throw std::invalid_argument("polynomial ring has no variables");
  WeightSystem weights = w ? *w : infer_weights(f);
  if (weights.size() != n) throw std::invalid_argument("weight system does not match the number of variables");
  if (!check_weighted_homogeneous(f, weights))
    throw MilnorError(MilnorError::Kind::NotWeightedHomogeneous,
                      "polynomial is not weighted homogeneous of degree 1 for the given weights");

  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(f.derivative(i));
  IdealHandle jac(n, partials, MonomialOrder::grevlex(n));
  if (jac.is_unit())
    throw MilnorError(MilnorError::Kind::SmoothDivisor,
                      "divisor is smooth at the origin (Jacobian ideal is the unit ideal); no singular locus");
  if (!has_finite_quotient(jac))
    throw MilnorError(MilnorError::Kind::NonIsolated,
                      "singularity is not isolated (Milnor algebra is infinite dimensional)");

  MilnorData m(f, weights, std::move(partials), jac);
  m.basis_ = standard_monomials(jac);
  const Rational n_rat = static_cast<long>(n);
  for (const Monomial& v : m.basis_) {
    Rational a = alpha_value(v, weights);
    if (a <= 0 || a >= n_rat) throw std::logic_error("spectral number " + to_string(a) + " outside (0, n)");
    m.alphas_.push_back(std::move(a));
  }
  PowerCheck powers = check_coordinate_powers(f, weights);
  m.coordinate_powers_ = powers.ok;
  if (!powers.ok)
    m.warnings_.push_back("f lacks the monomials x_i^{1/w_i} assumed by the V-filtration generator formula: " +
                          powers.message);
  return m;
}

Spectrum spectrum(const MilnorData& m) {
  Spectrum s;
  for (const Rational& a : m.alphas()) ++s.multiplicity[a];
  return s;
}

Rational mlct(const MilnorData& m) {
  Rational from_weights = m.weights().sum();
  Rational from_spectrum = spectrum(m).min();
  if (from_weights != from_spectrum)
    throw std::logic_error("mlct routes disagree: sum of weights " + to_string(from_weights) +
                           " vs minimal spectral number " + to_string(from_spectrum));
  return from_weights;
}

Rational lct(const MilnorData& m) {
  Rational t = mlct(m);
  return t < 1 ? t : Rational(1);
}

std::vector<Rational> reduced_bs_roots(const MilnorData& m) {
  std::vector<Rational> roots = spectrum(m).values();
  Rational lo = mlct(m);
  Rational hi = static_cast<long>(m.nvars()) - lo;
  for (const Rational& r : roots)
    if (r < lo || r > hi)
      throw std::logic_error("root " + to_string(r) + " outside [" + to_string(lo) + ", " + to_string(hi) + "]");
  return roots;
}

}  // namespace hodgevf
