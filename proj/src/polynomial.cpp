#include "hodgevf/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hodgevf {

namespace {

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  return monomial(Monomial::variable(nvars, i));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.mono.size() != nvars) throw std::invalid_argument("monomial arity does not match ring");
  sort_and_combine(terms);
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grevlex_compare(t.mono, key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

unsigned Polynomial::total_degree() const {
  // grevlex is degree-compatible, so the leading monomial has maximal degree
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
  if (b.terms_.size() == 1) return a.times(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times(a.terms_[0].mono, a.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex_compare(x.mono, y.mono) > 0; });
  Polynomial r(a.nvars_);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves grevlex order
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return from_terms(nvars_, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading().coeff;
  return *this * inv;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) { return p.derivative(i); }

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.nvars() != den.nvars()) throw std::invalid_argument("polynomials live in different rings");
  // A single polynomial is a Groebner basis of the principal ideal it
  // generates, so the division remainder is zero iff den divides num.
  std::vector<Term> quotient;
  Polynomial rest = num;
  const Term& lead = den.leading();
  while (!rest.is_zero()) {
    const Term& t = rest.leading();
    if (!lead.mono.divides(t.mono)) return std::nullopt;
    Term q{t.mono / lead.mono, t.coeff / lead.coeff};
    rest -= den.times(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(num.nvars(), std::move(quotient));
}

std::string to_string(const Monomial& m, std::span<const std::string> variables) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << (i < variables.size() ? variables[i] : "x" + std::to_string(i + 1));
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& p, std::span<const std::string> variables) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (t.mono.is_one()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << '*';
      os << to_string(t.mono, variables);
    }
  }
  return os.str();
}

}  // namespace hodgevf
