#include "hodgevf/monomial.hpp"

#include <string>

namespace hodgevf {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  Monomial m(nvars);
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFFu) throw std::overflow_error("exponent too large");
  exp_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += exp_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(exp_[i]) + other.exp_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (divisor.exp_[i] > exp_[i]) throw std::domain_error("monomial does not divide");
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  }
  return r;
}

std::vector<unsigned> Monomial::exponents() const { return {exp_.begin(), exp_.begin() + n_}; }

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void fill_weighted(std::span<const long> weights, std::size_t i, long remaining, Monomial& current,
                   std::vector<Monomial>& out) {
  if (i + 1 == weights.size()) {
    if (remaining % weights[i] == 0) {
      current.set(i, static_cast<unsigned>(remaining / weights[i]));
      out.push_back(current);
    }
    return;
  }
  for (long e = 0; e * weights[i] <= remaining; ++e) {
    current.set(i, static_cast<unsigned>(e));
    fill_weighted(weights, i + 1, remaining - e * weights[i], current, out);
  }
  current.set(i, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(std::span<const long> weights, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (weights.empty()) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(weights.size());
  fill_weighted(weights, 0, degree, current, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<long> ones(nvars, 1);
  return monomials_of_weighted_degree(ones, d);
}

}  // namespace hodgevf
