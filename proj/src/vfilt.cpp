#include "hodgevf/vfilt.hpp"

#include <algorithm>
#include <set>

namespace hodgevf {

namespace {

// Exponent vectors in n variables with |nu| = k.
std::vector<Monomial> exponent_vectors(std::size_t n, unsigned k) { return monomials_of_degree(n, k); }

}  // namespace

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

VFiltration::VFiltration(MilnorData milnor)
    : m_(std::move(milnor)), spectrum_(hodgevf::spectrum(m_)), mlct_(hodgevf::mlct(m_)) {
  spectral_values_ = spectrum_.values();
}

std::vector<Rational> VFiltration::candidates(const Rational& ceiling) const {
  std::set<Rational> grid;
  for (const Rational& s : spectral_values_)
    for (Rational c = s; c <= ceiling; c += 1) grid.insert(c);
  return {grid.begin(), grid.end()};
}

bool VFiltration::is_candidate(const Rational& alpha) const {
  for (const Rational& s : spectral_values_)
    if (alpha >= s && is_integer(alpha - s)) return true;
  return false;
}

Rational VFiltration::threshold(const Rational& alpha) const {
  std::optional<Rational> best;
  for (const Rational& s : spectral_values_) {
    Integer k = ceil(alpha - s);
    if (k < 0) k = 0;
    Rational c = s + Rational(k);
    if (!best || c < *best) best = c;
  }
  return *best;
}

Rational VFiltration::successor(const Rational& alpha) const {
  std::optional<Rational> best;
  for (const Rational& s : spectral_values_) {
    Integer k = floor(alpha - s) + 1;
    if (k < 0) k = 0;
    Rational c = s + Rational(k);
    if (!best || c < *best) best = c;
  }
  return *best;
}

const Polynomial& VFiltration::jacobian_power(const Monomial& nu) const {
  std::lock_guard lock(power_mutex_);
  auto key = nu.exponents();
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  Polynomial p = Polynomial::constant(m_.nvars(), 1);
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] > 0) p = p * m_.partials()[i].pow(nu[i]);
  return powers_.emplace(std::move(key), std::move(p)).first->second;
}

std::shared_ptr<const VLevel> VFiltration::build_level(const Rational& threshold) const {
  const std::size_t n = m_.nvars();
  auto level = std::make_shared<VLevel>();
  level->threshold = threshold;
  Integer K = ceil(threshold - mlct_);
  level->truncation = K > 0 ? static_cast<unsigned>(K.get_ui()) : 0u;
  const unsigned trunc = level->truncation;

  const auto& basis = m_.basis();
  const auto& alphas = m_.alphas();
  for (unsigned k = 0; k < trunc; ++k) {
    Rational t = threshold - static_cast<long>(k);
    // basis monomials meeting the bound; keep only divisibility-minimal ones,
    // the rest are monomial multiples of those
    std::vector<Monomial> qualifying;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (alphas[j] >= t) qualifying.push_back(basis[j]);
    std::vector<Monomial> minimal;
    for (const Monomial& v : qualifying) {
      bool redundant = false;
      for (const Monomial& u : qualifying)
        if (!(u == v) && u.divides(v)) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(v);
    }
    if (minimal.empty()) continue;
    for (const Monomial& nu : exponent_vectors(n, k)) {
      const Polynomial& y = jacobian_power(nu);
      for (const Monomial& v : minimal) level->generators.push_back({v, nu, y.times(v)});
    }
  }
  for (const Monomial& nu : exponent_vectors(n, trunc))
    level->generators.push_back({Monomial(n), nu, jacobian_power(nu)});

  std::vector<Polynomial> gens;
  gens.reserve(level->generators.size());
  for (const VGenerator& g : level->generators) gens.push_back(g.value);
  level->ideal = IdealHandle(n, std::move(gens), MonomialOrder::weighted_grevlex(m_.weights()));
  return level;
}

std::shared_ptr<const VLevel> VFiltration::level(const Rational& alpha) const {
  Rational t = threshold(alpha);
  std::shared_ptr<const VLevel> base;
  {
    std::lock_guard lock(mutex_);
    auto it = levels_.find(t);
    if (it != levels_.end()) base = it->second;
  }
  if (!base) {
    auto built = build_level(t);
    std::lock_guard lock(mutex_);
    base = levels_.emplace(t, std::move(built)).first->second;
  }
  if (base->alpha == alpha) return base;
  auto copy = std::make_shared<VLevel>(*base);
  copy->alpha = alpha;
  return copy;
}

bool VFiltration::member(const Polynomial& g, const Rational& alpha) const {
  if (alpha <= mlct_) return true;
  return level(alpha)->ideal.contains(g);
}

VOrder VFiltration::order(const Polynomial& g, const Rational& ceiling) const {
  if (g.is_zero()) throw std::invalid_argument("the order of 0 is infinite");
  std::vector<Rational> grid = candidates(ceiling);
  if (grid.empty()) return {ceiling, true};
  // membership is monotone along the grid: find the last member
  std::size_t lo = 0, hi = grid.size();  // grid[0] = mlct always contains g
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (member(g, grid[mid]))
      lo = mid;
    else
      hi = mid;
  }
  if (lo + 1 == grid.size() && member(g, successor(grid[lo]))) return {grid[lo], true};
  return {grid[lo], false};
}

std::size_t VFiltration::codim(const Rational& alpha) const {
  const auto lvl = level(alpha);
  const IdealHandle& ideal = lvl->ideal;
  if (!has_finite_quotient(ideal))
    throw std::logic_error("V-filtration level " + to_string(alpha) + " has infinite codimension");
  return quotient_dim(ideal);
}

std::size_t VFiltration::gr_dim_formula(const Rational& alpha) const {
  const unsigned long n = m_.nvars();
  Integer total = 0;
  for (unsigned long k = 0; alpha - static_cast<long>(k) >= mlct_; ++k)
    total += binomial(n + k - 1, n - 1) * spectrum_[alpha - static_cast<long>(k)];
  return total.get_ui();
}

std::size_t VFiltration::gr_dim_direct(const Rational& alpha) const {
  std::size_t here = codim(alpha);
  std::size_t next = codim(successor(alpha));
  if (next < here) throw std::logic_error("V-filtration is not decreasing at " + to_string(alpha));
  return next - here;
}

JumpList VFiltration::jumping_numbers(const Rational& ceiling) const {
  if (ceiling <= 0) throw std::invalid_argument("ceiling must be positive");
  JumpList out;
  out.ceiling = ceiling;
  for (const Rational& c : candidates(ceiling)) {
    std::size_t d = gr_dim_direct(c);
    if (d > 0) out.jumps.push_back({c, d});
  }
  if (!out.jumps.empty() && out.jumps.front().alpha != mlct_)
    throw std::logic_error("first jumping number differs from mlct");
  return out;
}

unsigned VFiltration::hodge_floor() const {
  const Integer fl = floor(mlct_);
  const unsigned p0 = static_cast<unsigned>(fl.get_ui());
  const Polynomial one = Polynomial::constant(m_.nvars(), 1);
  for (unsigned p = 0; p <= p0; ++p) {
    bool unit = level(Rational(static_cast<long>(p) + 1))->ideal.is_unit();
    if (unit != (p < p0))
      throw std::logic_error("unit-ideal transition of V^" + std::to_string(p + 1) + " contradicts floor(mlct) = " +
                             std::to_string(p0));
    if (unit != member(one, Rational(static_cast<long>(p) + 1)))
      throw std::logic_error("membership of 1 disagrees with the Groebner basis");
  }
  return p0;
}

IdealHandle VFiltration::multiplier_ideal(const Rational& alpha) const {
  if (alpha <= 0 || alpha >= 1)
    throw std::domain_error("multiplier ideals are only identified with the microlocal V-filtration for 0 < alpha < 1");
  return level(successor(alpha))->ideal;
}

std::vector<PropertyCheck> check_properties(const VFiltration& v, const Rational& ceiling) {
  const MilnorData& m = v.milnor();
  const std::size_t n = m.nvars();
  const std::vector<Rational> grid = v.candidates(ceiling);
  std::vector<PropertyCheck> out;

  PropertyCheck mono{"monotonicity", true, {}};
  for (const Rational& c : grid) {
    const auto here = v.level(c);
    const auto next = v.level(v.successor(c));
    if (!here->ideal.contains(next->ideal)) {
      mono = {"monotonicity", false, "V^" + to_string(v.successor(c)) + " not inside V^" + to_string(c)};
      break;
    }
  }
  out.push_back(mono);

  PropertyCheck shift{"partial_shift", true, {}};
  for (const Rational& c : grid) {
    if (c + 1 > ceiling) break;
    const auto here = v.level(c);
    const auto up = v.level(c + 1);
    for (const VGenerator& g : here->generators) {
      for (std::size_t i = 0; i < n && shift.passed; ++i) {
        if (!up->ideal.contains(m.partials()[i] * g.value))
          shift = {"partial_shift", false,
                   "f_" + std::to_string(i) + " * generator of V^" + to_string(c) + " not in V^" + to_string(c + 1)};
      }
      if (!shift.passed) break;
    }
    if (!shift.passed) break;
  }
  out.push_back(shift);

  const Spectrum& sp = v.spectrum();
  out.push_back({"multiplicity_sum", sp.total() == m.mu(),
                 sp.total() == m.mu() ? "" : std::to_string(sp.total()) + " != " + std::to_string(m.mu())});

  PropertyCheck sym{"spectrum_symmetry", true, {}};
  for (const auto& [alpha, mult] : sp.multiplicity) {
    Rational mirror = Rational(static_cast<long>(n)) - alpha;
    if (sp[mirror] != mult) {
      sym = {"spectrum_symmetry", false, "n(" + to_string(alpha) + ") != n(" + to_string(mirror) + ")"};
      break;
    }
  }
  out.push_back(sym);

  PropertyCheck bs{"bs_roots_range", true, {}};
  const Rational hi = Rational(static_cast<long>(n)) - v.mlct();
  for (const Rational& r : reduced_bs_roots(m))
    if (r < v.mlct() || r > hi) {
      bs = {"bs_roots_range", false, to_string(r) + " outside [" + to_string(v.mlct()) + ", " + to_string(hi) + "]"};
      break;
    }
  out.push_back(bs);

  const Rational wsum = m.weights().sum();
  const Rational smin = sp.min();
  out.push_back({"mlct_routes", wsum == smin && wsum == v.mlct(),
                 wsum == smin ? "" : "sum of weights " + to_string(wsum) + " != min spectrum " + to_string(smin)});
  return out;
}

VLevel v_level(const MilnorData& m, const Rational& alpha) { return *VFiltration(m).level(alpha); }
bool v_member(const MilnorData& m, const Polynomial& g, const Rational& alpha) {
  return VFiltration(m).member(g, alpha);
}
VOrder v_order(const MilnorData& m, const Polynomial& g, const Rational& ceiling) {
  return VFiltration(m).order(g, ceiling);
}
JumpList jumping_numbers(const MilnorData& m, const Rational& ceiling) {
  return VFiltration(m).jumping_numbers(ceiling);
}
std::size_t gr_dim_formula(const MilnorData& m, const Rational& alpha) { return VFiltration(m).gr_dim_formula(alpha); }
std::size_t gr_dim_direct(const MilnorData& m, const Rational& alpha) { return VFiltration(m).gr_dim_direct(alpha); }
unsigned hodge_floor(const MilnorData& m) { return VFiltration(m).hodge_floor(); }
IdealHandle multiplier_ideal(const MilnorData& m, const Rational& alpha) {
  return VFiltration(m).multiplier_ideal(alpha);
}

}  // namespace hodgevf
