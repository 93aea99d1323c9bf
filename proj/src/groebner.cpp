#include "hodgevf/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace hodgevf {

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return {Kind::Grevlex, std::vector<long>(nvars, 1)}; }

MonomialOrder MonomialOrder::weighted_grevlex(const WeightSystem& w) {
  return {Kind::WeightedGrevlex, w.grading().weights};
}

long MonomialOrder::degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * static_cast<long>(m[i]);
  return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  long da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = weights_.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomials sorted by an arbitrary order, used inside the engine only.

namespace {

struct OPoly {
  std::vector<Term> terms;  // descending in the active order
  long sugar = 0;

  bool zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
  OPoly o;
  o.terms = p.terms();
  std::sort(o.terms.begin(), o.terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (const Term& t : o.terms) o.sugar = std::max(o.sugar, ord.degree(t.mono));
  return o;
}

Polynomial to_poly(const OPoly& o, std::size_t nvars) { return Polynomial::from_terms(nvars, o.terms); }

void make_monic(OPoly& p) {
  if (p.zero() || p.terms.front().coeff == 1) return;
  Rational inv = 1 / p.terms.front().coeff;
  for (Term& t : p.terms) t.coeff *= inv;
}

// a[from..] - c * m * b, merged in order.
std::vector<Term> sub_mul(const std::vector<Term>& a, std::size_t from, const Rational& c, const Monomial& m,
                          const std::vector<Term>& b, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    Monomial bm;
    if (j < b.size()) bm = b[j].mono * m;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = ord.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, -c * b[j].coeff});
      ++j;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({bm, std::move(v)});
      ++i, ++j;
    }
  }
  return out;
}

const OPoly* find_reducer(const Monomial& m, const std::vector<const OPoly*>& basis) {
  for (const OPoly* g : basis)
    if (g->lm().divides(m)) return g;
  return nullptr;
}

// Full reduction of p modulo basis.
OPoly reduce(OPoly p, const std::vector<const OPoly*>& basis, const MonomialOrder& ord, bool top_only = false) {
  std::vector<Term> rem;
  std::size_t start = 0;
  while (start < p.terms.size()) {
    const Term& t = p.terms[start];
    const OPoly* g = find_reducer(t.mono, basis);
    if (!g) {
      if (top_only) {
        rem.insert(rem.end(), p.terms.begin() + static_cast<long>(start), p.terms.end());
        break;
      }
      rem.push_back(t);
      ++start;
      continue;
    }
    Monomial q = t.mono / g->lm();
    p.sugar = std::max(p.sugar, g->sugar + ord.degree(q));
    Rational c = t.coeff;  // g is monic
    p.terms = sub_mul(p.terms, start, c, q, g->terms, ord);
    start = 0;
  }
  p.terms = std::move(rem);
  return p;
}

OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& ord) {
  Monomial l = f.lm().lcm(g.lm());
  Monomial uf = l / f.lm(), ug = l / g.lm();
  OPoly s;
  std::vector<Term> left;
  left.reserve(f.terms.size());
  for (const Term& t : f.terms) left.push_back({t.mono * uf, t.coeff});
  s.terms = sub_mul(left, 1, 1, ug, std::vector<Term>(g.terms.begin() + 1, g.terms.end()), ord);
  s.sugar = std::max(f.sugar + ord.degree(uf), g.sugar + ord.degree(ug));
  return s;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long sugar;
};

// Gebauer-Moeller installation of h (index h) into the basis G and pair set B.
void update(std::vector<std::size_t>& G, std::vector<Pair>& B, std::size_t h, const std::vector<OPoly>& polys,
            const MonomialOrder& ord) {
  const Monomial& lh = polys[h].lm();
  auto pair_with = [&](std::size_t g) {
    Monomial l = lh.lcm(polys[g].lm());
    long sugar = std::max(polys[h].sugar + ord.degree(l / lh), polys[g].sugar + ord.degree(l / polys[g].lm()));
    return Pair{g, h, l, sugar};
  };
  std::vector<Pair> C;
  C.reserve(G.size());
  for (std::size_t g : G) C.push_back(pair_with(g));

  std::vector<Pair> D;
  for (std::size_t k = 0; k < C.size(); ++k) {
    const Pair& p = C[k];
    bool keep = lh.coprime(polys[p.i].lm());
    if (!keep) {
      keep = true;
      for (std::size_t r = k + 1; r < C.size() && keep; ++r)
        if (C[r].lcm.divides(p.lcm)) keep = false;
      for (std::size_t r = 0; r < D.size() && keep; ++r)
        if (D[r].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) D.push_back(p);
  }
  std::vector<Pair> E;
  for (Pair& p : D)
    if (!lh.coprime(polys[p.i].lm())) E.push_back(std::move(p));

  std::vector<Pair> Bn;
  Bn.reserve(B.size() + E.size());
  for (Pair& p : B) {
    bool drop = lh.divides(p.lcm) && lh.lcm(polys[p.i].lm()) != p.lcm && lh.lcm(polys[p.j].lm()) != p.lcm;
    if (!drop) Bn.push_back(std::move(p));
  }
  for (Pair& p : E) Bn.push_back(std::move(p));
  B = std::move(Bn);

  std::vector<std::size_t> Gn;
  for (std::size_t g : G)
    if (!lh.divides(polys[g].lm())) Gn.push_back(g);
  Gn.push_back(h);
  G = std::move(Gn);
}

std::vector<OPoly> compute_basis(const std::vector<Polynomial>& generators, const MonomialOrder& ord) {
  const std::size_t n = ord.nvars();
  std::vector<OPoly> input;
  bool all_monomial = true;
  for (const Polynomial& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      OPoly one;
      one.terms.push_back({Monomial(n), 1});
      return {one};
    }
    OPoly o = to_opoly(g, ord);
    make_monic(o);
    all_monomial = all_monomial && o.terms.size() == 1;
    input.push_back(std::move(o));
  }
  auto by_lm = [&](const OPoly& a, const OPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; };
  std::sort(input.begin(), input.end(), by_lm);

  if (all_monomial) {
    // minimal generators of a monomial ideal form its reduced basis
    std::vector<OPoly> out;
    for (OPoly& o : input) {
      bool redundant = false;
      for (const OPoly& k : out)
        if (k.lm().divides(o.lm())) redundant = true;
      if (!redundant) out.push_back(std::move(o));
    }
    return out;
  }

  std::vector<OPoly> polys;
  std::vector<std::size_t> G;
  std::vector<Pair> B;
  auto active = [&] {
    std::vector<const OPoly*> v;
    v.reserve(G.size());
    for (std::size_t g : G) v.push_back(&polys[g]);
    return v;
  };
  for (OPoly& o : input) {
    OPoly r = reduce(std::move(o), active(), ord, true);
    if (r.zero()) continue;
    make_monic(r);
    if (r.lm().is_one()) {
      OPoly one;
      one.terms.push_back({Monomial(n), 1});
      return {one};
    }
    polys.push_back(std::move(r));
    update(G, B, polys.size() - 1, polys, ord);
  }
  while (!B.empty()) {
    auto best = std::min_element(B.begin(), B.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    Pair p = *best;
    *best = std::move(B.back());
    B.pop_back();
    OPoly h = reduce(spoly(polys[p.i], polys[p.j], ord), active(), ord, true);
    if (h.zero()) continue;
    make_monic(h);
    if (h.lm().is_one()) {
      OPoly one;
      one.terms.push_back({Monomial(n), 1});
      return {one};
    }
    polys.push_back(std::move(h));
    update(G, B, polys.size() - 1, polys, ord);
  }

  // G is a Groebner basis with pairwise non-dividing leading monomials;
  // tail-reduce each element against the others.
  std::vector<OPoly> minimal;
  for (std::size_t g : G) minimal.push_back(polys[g]);
  std::sort(minimal.begin(), minimal.end(), by_lm);
  std::vector<OPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const OPoly*> others;
    for (std::size_t r = 0; r < minimal.size(); ++r)
      if (r != k) others.push_back(&minimal[r]);
    OPoly head;
    head.terms.push_back(minimal[k].terms.front());
    OPoly tail;
    tail.terms.assign(minimal[k].terms.begin() + 1, minimal[k].terms.end());
    tail = reduce(std::move(tail), others, ord);
    head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
    head.sugar = minimal[k].sugar;
    reduced.push_back(std::move(head));
  }
  return reduced;
}

}  // namespace

// ---------------------------------------------------------------------------
// IdealHandle

struct IdealHandle::State {
  std::size_t nvars;
  std::vector<Polynomial> generators;
  MonomialOrder order;

  std::once_flag once;
  std::vector<OPoly> internal;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leading;

  std::mutex span_mutex;
  std::map<std::vector<long>, std::shared_ptr<GradedSpan>> spans;

  State(std::size_t n, std::vector<Polynomial> gens, MonomialOrder ord)
      : nvars(n), generators(std::move(gens)), order(std::move(ord)) {}

  void ensure() {
    std::call_once(once, [this] {
      internal = compute_basis(generators, order);
      for (const OPoly& o : internal) {
        basis.push_back(to_poly(o, nvars));
        leading.push_back(o.lm());
      }
    });
  }
};

IdealHandle::IdealHandle(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order) {
  if (order.nvars() != nvars) throw std::invalid_argument("monomial order does not match the ring");
  for (const Polynomial& g : generators)
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
  state_ = std::make_shared<State>(nvars, std::move(generators), std::move(order));
}

IdealHandle::IdealHandle(std::size_t nvars, std::vector<Polynomial> generators)
    : IdealHandle(nvars, std::move(generators), MonomialOrder::grevlex(nvars)) {}

std::size_t IdealHandle::nvars() const { return state_->nvars; }
const MonomialOrder& IdealHandle::order() const { return state_->order; }
const std::vector<Polynomial>& IdealHandle::generators() const { return state_->generators; }

const std::vector<Polynomial>& IdealHandle::basis() const {
  state_->ensure();
  return state_->basis;
}

const std::vector<Monomial>& IdealHandle::leading_monomials() const {
  state_->ensure();
  return state_->leading;
}

bool IdealHandle::is_unit() const {
  const auto& lm = leading_monomials();
  return lm.size() == 1 && lm.front().is_one();
}

Polynomial IdealHandle::normal_form(const Polynomial& g) const {
  if (g.nvars() != nvars()) throw std::invalid_argument("polynomial lives in a different ring");
  state_->ensure();
  std::vector<const OPoly*> basis;
  for (const OPoly& o : state_->internal) basis.push_back(&o);
  return to_poly(reduce(to_opoly(g, state_->order), basis, state_->order), nvars());
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const Polynomial& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

GradedSlice IdealHandle::graded_slice(const Rational& e, const WeightSystem& w) const {
  if (w.size() != nvars()) throw std::invalid_argument("weight system does not match the ring");
  std::shared_ptr<GradedSpan> span;
  {
    std::lock_guard lock(state_->span_mutex);
    auto& slot = state_->spans[w.grading().weights];
    if (!slot)
      slot = std::make_shared<GradedSpan>(nvars(), w.grading(), fixed_generators(generators(), w.grading()));
    span = slot;
  }
  return span->slice(e);
}

// ---------------------------------------------------------------------------
// Free functions

IdealHandle buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
  IdealHandle ideal(order.nvars(), generators, order);
  ideal.basis();
  return ideal;
}

Polynomial normal_form(const Polynomial& g, const IdealHandle& ideal) { return ideal.normal_form(g); }

bool has_finite_quotient(const IdealHandle& ideal) {
  const auto& lm = ideal.leading_monomials();
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    bool pure = false;
    for (const Monomial& m : lm) {
      bool only_i = true;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != i && m[k] != 0) only_i = false;
      if (only_i) pure = true;
    }
    if (!pure) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const IdealHandle& ideal, std::optional<unsigned> degree_bound) {
  if (!degree_bound && !has_finite_quotient(ideal))
    throw InfiniteQuotientError("quotient ring is infinite dimensional");
  const auto& lm = ideal.leading_monomials();
  auto standard = [&](const Monomial& m) {
    for (const Monomial& l : lm)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  const std::size_t n = ideal.nvars();
  Monomial one(n);
  if (!standard(one)) return out;
  std::set<Monomial, GrevlexGreater> seen{one};
  std::vector<Monomial> frontier{one};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(n, i);
        if (degree_bound && c.degree() > *degree_bound) continue;
        if (!standard(c) || !seen.insert(c).second) continue;
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  out.assign(seen.rbegin(), seen.rend());
  return out;
}

std::size_t quotient_dim(const IdealHandle& ideal) { return standard_monomials(ideal).size(); }

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ideals live in different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealHandle(a.nvars(), std::move(gens), a.order());
}

IdealHandle ideal_power_times(const IdealHandle& ideal, int k) {
  if (k < 0) throw std::invalid_argument("ideal power must be non-negative");
  const std::size_t n = ideal.nvars();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators())
    if (!g.is_zero()) gens.push_back(g);
  // products over multisets of generator indices, built one factor at a time
  std::vector<std::pair<std::size_t, Polynomial>> level{{0, Polynomial::constant(n, 1)}};
  for (int step = 0; step < k; ++step) {
    std::vector<std::pair<std::size_t, Polynomial>> next;
    for (const auto& [lo, p] : level)
      for (std::size_t i = lo; i < gens.size(); ++i) next.emplace_back(i, p * gens[i]);
    level = std::move(next);
  }
  std::vector<Polynomial> out;
  for (auto& [lo, p] : level) out.push_back(std::move(p));
  return IdealHandle(n, std::move(out), ideal.order());
}

GradedSlice graded_slice(const IdealHandle& ideal, const Rational& e, const WeightSystem& w) {
  return ideal.graded_slice(e, w);
}

}  // namespace hodgevf
