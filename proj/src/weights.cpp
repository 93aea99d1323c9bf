#include "hodgevf/weights.hpp"

#include <numeric>
#include <sstream>

namespace hodgevf {

long IntegerGrading::degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * static_cast<long>(m[i]);
  return d;
}

long IntegerGrading::from_weighted(const Rational& e) const {
  Rational scaled = e * scale;
  if (!is_integer(scaled)) return -1;
  return scaled.get_num().get_si();
}

WeightSystem::WeightSystem(std::vector<Rational> weights) : w_(std::move(weights)) {
  if (w_.size() > kMaxVars) throw std::invalid_argument("too many weights");
  long scale = 1;
  for (const Rational& r : w_) {
    if (r <= 0) throw WeightError(WeightError::Kind::NonPositive, "weights must be positive, got " + to_string(r));
    if (!r.get_den().fits_slong_p()) throw std::invalid_argument("weight denominator too large");
    scale = std::lcm(scale, r.get_den().get_si());
  }
  grading_.scale = scale;
  for (const Rational& r : w_) {
    Rational s = r * scale;
    grading_.weights.push_back(s.get_num().get_si());
  }
}

WeightSystem WeightSystem::homogeneous(std::size_t nvars, long d) {
  return WeightSystem(std::vector<Rational>(nvars, make_rational(1, d)));
}

Rational WeightSystem::sum() const {
  Rational s = 0;
  for (const Rational& r : w_) s += r;
  return s;
}

bool WeightSystem::is_homogeneous() const {
  for (const Rational& r : w_)
    if (r != w_.front()) return false;
  return true;
}

Rational WeightSystem::weighted_degree(const Monomial& m) const {
  if (m.size() != w_.size()) throw std::invalid_argument("monomial and weight system differ in dimension");
  return grading_.to_weighted(grading_.degree(m));
}

Rational alpha_value(const Monomial& v, const WeightSystem& w) {
  if (v.size() != w.size()) throw std::invalid_argument("monomial and weight system differ in dimension");
  Rational a = 0;
  for (std::size_t i = 0; i < w.size(); ++i) a += (v[i] + 1) * w[i];
  return a;
}

WeightSystem infer_weights(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (f.is_constant()) throw WeightError(WeightError::Kind::Degenerate, "polynomial is constant");
  // rows [m_1 .. m_n | 1], Gauss-Jordan over Q
  std::vector<std::vector<Rational>> rows;
  for (const Term& t : f.terms()) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = t.mono[i];
    row[n] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      Rational factor = rows[k][c];
      for (std::size_t j = c; j <= n; ++j) rows[k][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k)
    if (rows[k][n] != 0)
      throw WeightError(WeightError::Kind::Inconsistent, "polynomial is not weighted homogeneous for any weights");
  if (r < n)
    throw WeightError(WeightError::Kind::Underdetermined,
                      "weights are not determined by the monomials of f; supply them explicitly");
  std::vector<Rational> w(n);
  for (std::size_t k = 0; k < r; ++k) w[pivot_col[k]] = rows[k][n];
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] <= 0)
      throw WeightError(WeightError::Kind::NonPositive, "inferred weight w_" + std::to_string(i + 1) + " = " +
                                                            to_string(w[i]) + " is not positive");
  return WeightSystem(std::move(w));
}

bool check_weighted_homogeneous(const Polynomial& f, const WeightSystem& w) {
  if (f.nvars() != w.size()) throw std::invalid_argument("polynomial and weight system differ in dimension");
  if (f.is_zero()) return false;
  for (const Term& t : f.terms())
    if (w.weighted_degree(t.mono) != 1) return false;
  Polynomial euler(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i)
    euler += f.derivative(i).times(Monomial::variable(f.nvars(), i), w[i]);
  if (euler != f) throw std::logic_error("Euler identity failed for a weighted homogeneous polynomial");
  return true;
}

PowerCheck check_coordinate_powers(const Polynomial& f, const WeightSystem& w) {
  if (f.nvars() != w.size()) throw std::invalid_argument("polynomial and weight system differ in dimension");
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational a = 1 / w[i];
    if (!is_integer(a)) {
      return {false, "1/w_" + std::to_string(i + 1) + " = " + to_string(a) + " is not an integer"};
    }
    Monomial pure = Monomial::variable(w.size(), i, static_cast<unsigned>(a.get_num().get_ui()));
    if (f.coefficient(pure) == 0) {
      std::ostringstream os;
      os << "f has no monomial x_" << i + 1 << "^" << a.get_num().get_ui();
      return {false, os.str()};
    }
  }
  return {true, {}};
}

}  // namespace hodgevf
