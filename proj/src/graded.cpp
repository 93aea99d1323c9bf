#include "hodgevf/graded.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace hodgevf {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental Gaussian elimination over Q with a dense scratch row.
class Echelon {
 public:
  explicit Echelon(const std::vector<Monomial>& support) : support_(support), pivots_(support.size()), work_(support.size()) {
    col_.reserve(support.size());
    for (std::size_t c = 0; c < support.size(); ++c) col_.emplace(support[c], c);
  }

  bool full() const { return rank_ == support_.size(); }

  void add(const Polynomial& p) {
    if (p.is_zero() || full()) return;
    std::size_t lo = support_.size();
    for (const Term& t : p.terms()) {
      auto it = col_.find(t.mono);
      if (it == col_.end()) throw std::invalid_argument("row has a monomial outside the slice degree");
      work_[it->second] = t.coeff;
      lo = std::min(lo, it->second);
    }
    for (std::size_t c = lo; c < work_.size(); ++c) {
      if (work_[c] == 0) continue;
      if (pivots_[c]) {
        Rational factor = work_[c];
        for (const auto& [j, v] : *pivots_[c]) work_[j] -= factor * v;
        continue;
      }
      Rational inv = 1 / work_[c];
      SparseRow row;
      for (std::size_t j = c; j < work_.size(); ++j) {
        if (work_[j] == 0) continue;
        row.emplace_back(j, work_[j] * inv);
        work_[j] = 0;
      }
      pivots_[c] = std::move(row);
      ++rank_;
      return;
    }
  }

  std::vector<Polynomial> reduced_rows() {
    const std::size_t n = support_.size();
    for (std::size_t c = n; c-- > 0;) {
      if (!pivots_[c]) continue;
      SparseRow& row = *pivots_[c];
      bool needs = false;
      for (std::size_t k = 1; k < row.size(); ++k)
        if (pivots_[row[k].first]) needs = true;
      if (!needs) continue;
      for (const auto& [j, v] : row) work_[j] = v;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (work_[j] == 0 || !pivots_[j]) continue;
        Rational factor = work_[j];
        for (const auto& [k, v] : *pivots_[j]) work_[k] -= factor * v;
      }
      row.clear();
      for (std::size_t j = c; j < n; ++j) {
        if (work_[j] == 0) continue;
        row.emplace_back(j, work_[j]);
        work_[j] = 0;
      }
    }
    std::vector<Polynomial> out;
    out.reserve(rank_);
    const std::size_t nvars = support_.empty() ? 0 : support_.front().size();
    for (std::size_t c = 0; c < n; ++c) {
      if (!pivots_[c]) continue;
      std::vector<Term> terms;
      terms.reserve(pivots_[c]->size());
      for (const auto& [j, v] : *pivots_[c]) terms.push_back({support_[j], v});
      // columns are already in descending grevlex order
      out.push_back(Polynomial::from_terms(nvars, std::move(terms)));
    }
    return out;
  }

 private:
  const std::vector<Monomial>& support_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> col_;
  std::vector<std::optional<SparseRow>> pivots_;
  std::vector<Rational> work_;
  std::size_t rank_ = 0;
};

}  // namespace

GradedSlice::GradedSlice(Rational degree, std::vector<Monomial> support, const std::vector<Polynomial>& spanning,
                         bool attainable)
    : degree_(std::move(degree)), support_(std::move(support)), attainable_(attainable) {
  Echelon ech(support_);
  for (const Polynomial& p : spanning) ech.add(p);
  rows_ = ech.reduced_rows();
}

GradedSlice GradedSlice::full(Rational degree, std::vector<Monomial> support) {
  GradedSlice s;
  s.degree_ = std::move(degree);
  s.support_ = std::move(support);
  s.attainable_ = !s.support_.empty();
  for (const Monomial& m : s.support_) s.rows_.push_back(Polynomial::monomial(m));
  return s;
}

bool GradedSlice::contains(const Polynomial& g) const {
  Polynomial rest = g;
  for (const Polynomial& row : rows_) {
    Rational c = rest.coefficient(row.leading().mono);
    if (c != 0) rest -= row * c;
  }
  return rest.is_zero();
}

bool GradedSlice::contains(const GradedSlice& other) const {
  if (degree_ != other.degree_) return false;
  if (other.dim() > dim()) return false;
  for (const Polynomial& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool slice_equal(const GradedSlice& a, const GradedSlice& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("slices have different degrees: " + to_string(a.degree()) + " vs " +
                                to_string(b.degree()));
  return a.rows() == b.rows();
}

GradedSlice slice_sum(const GradedSlice& a, const GradedSlice& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("cannot add slices of different degrees");
  if (a.is_full()) return a;
  if (b.is_full()) return b;
  std::vector<Polynomial> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return GradedSlice(a.degree(), a.support(), rows, a.attainable());
}

GradedSpan::GradedSpan(std::size_t nvars, IntegerGrading grading, GeneratorSource source)
    : nvars_(nvars), grading_(std::move(grading)), source_(std::move(source)) {
  if (grading_.weights.size() != nvars_) throw std::invalid_argument("grading does not match the ring");
}

GradedSlice GradedSpan::slice(long int_degree) const {
  std::lock_guard lock(mutex_);
  return compute(int_degree);
}

GradedSlice GradedSpan::slice(const Rational& e) const {
  long d = grading_.from_weighted(e);
  if (d < 0) return GradedSlice(e, {}, {}, false);
  return slice(d);
}

const GradedSlice& GradedSpan::compute(long int_degree) const {
  if (auto it = cache_.find(int_degree); it != cache_.end()) return it->second;
  const Rational degree = grading_.to_weighted(int_degree);
  std::vector<Monomial> support = monomials_of_weighted_degree(grading_.weights, int_degree);
  if (support.empty()) return cache_.emplace(int_degree, GradedSlice(degree, {}, {}, false)).first->second;

  std::vector<std::pair<std::size_t, const GradedSlice*>> lower;
  bool lower_full = int_degree > 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    long d = int_degree - grading_.weights[i];
    if (d < 0) continue;
    const GradedSlice& s = compute(d);
    lower.emplace_back(i, &s);
    lower_full = lower_full && s.is_full();
  }
  // every monomial of positive degree is x_i times one of degree E - W_i
  if (lower_full) return cache_.emplace(int_degree, GradedSlice::full(degree, std::move(support))).first->second;

  Echelon ech(support);
  for (const auto& [i, s] : lower) {
    Monomial xi = Monomial::variable(nvars_, i);
    for (const Polynomial& row : s->rows()) {
      if (ech.full()) break;
      ech.add(row.times(xi));
    }
  }
  if (!ech.full())
    for (const Polynomial& g : source_(int_degree)) {
      if (ech.full()) break;
      ech.add(g);
    }
  GradedSlice out;
  out.degree_ = degree;
  out.attainable_ = true;
  out.rows_ = ech.reduced_rows();
  out.support_ = std::move(support);
  return cache_.emplace(int_degree, std::move(out)).first->second;
}

GradedSpan::GeneratorSource fixed_generators(std::vector<Polynomial> generators, const IntegerGrading& grading) {
  auto by_degree = std::make_shared<std::map<long, std::vector<Polynomial>>>();
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    long d = grading.degree(g.leading().mono);
    for (const Term& t : g.terms())
      if (grading.degree(t.mono) != d) throw std::invalid_argument("generator is not homogeneous for the grading");
    (*by_degree)[d].push_back(std::move(g));
  }
  return [by_degree](long int_degree) {
    auto it = by_degree->find(int_degree);
    return it == by_degree->end() ? std::vector<Polynomial>{} : it->second;
  };
}

}  // namespace hodgevf
