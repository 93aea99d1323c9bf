#include "hodgevf/hodge.hpp"

#include "hodgevf/parser.hpp"

namespace hodgevf {

// ---------------------------------------------------------------------------
// PoleFraction

PoleFraction::PoleFraction(Polynomial numerator, unsigned pole_order, Polynomial f)
    : PoleFraction(std::move(numerator), pole_order, std::make_shared<const Polynomial>(std::move(f))) {}

PoleFraction::PoleFraction(Polynomial numerator, unsigned pole_order, std::shared_ptr<const Polynomial> f)
    : numerator_(std::move(numerator)), pole_order_(pole_order), f_(std::move(f)) {
  if (f_->is_zero()) throw std::invalid_argument("pole fraction over the zero polynomial");
  if (numerator_.nvars() != f_->nvars()) throw std::invalid_argument("numerator and f live in different rings");
  canonicalize();
}

void PoleFraction::canonicalize() {
  if (numerator_.is_zero()) {
    pole_order_ = 0;
    return;
  }
  while (pole_order_ > 0) {
    auto q = divide_exact(numerator_, *f_);
    if (!q) break;
    numerator_ = std::move(*q);
    --pole_order_;
  }
}

Polynomial PoleFraction::numerator_over(unsigned m) const {
  if (m < pole_order_) throw std::invalid_argument("pole order too small");
  return numerator_ * f_->pow(m - pole_order_);
}

PoleFraction quotient_derivative(const PoleFraction& q, std::size_t i) {
  const Polynomial& f = q.f();
  const Polynomial& g = q.numerator();
  const unsigned m = q.pole_order();
  Polynomial num = f * g.derivative(i) - g * f.derivative(i) * Rational(static_cast<long>(m));
  return PoleFraction(std::move(num), m + 1, q.f_);
}

// ---------------------------------------------------------------------------
// HodgeIdeal

namespace {

std::vector<Polynomial> hodge_generators(const HodgeIdeal::Data& d, long int_degree) {
  const auto& partials = d.partials;
  const std::size_t n = d.f.nvars();
  const long scale = d.grading.scale;
  long weight_sum = 0;
  for (long w : d.grading.weights) weight_sum += w;

  std::vector<Polynomial> out;
  for (unsigned k = 0; k <= d.p; ++k) {
    const unsigned m = d.p + 1 - k;
    for (const Monomial& nu : monomials_of_degree(n, k)) {
      // integer degree of v so that the numerator lands in int_degree
      long t = int_degree - static_cast<long>(k) * scale + d.grading.degree(nu);
      if (t < 0) continue;
      // alpha(v) >= m  <=>  t + sum W_i >= m * scale
      if (t + weight_sum < static_cast<long>(m) * scale) continue;
      for (const Monomial& v : monomials_of_weighted_degree(d.grading.weights, t)) {
        Polynomial g = Polynomial::monomial(v);
        unsigned pole = m;
        for (std::size_t i = 0; i < n; ++i)
          for (unsigned r = 0; r < nu[i]; ++r) {
            g = d.f * g.derivative(i) - g * partials[i] * Rational(static_cast<long>(pole));
            ++pole;
          }
        if (!g.is_zero()) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace

HodgeIdeal::HodgeIdeal(const MilnorData& m, unsigned p)
    : p_(p), data_(std::make_shared<const Data>(Data{m.f(), m.partials(), m.weights().grading(), p})) {
  auto data = data_;
  span_ = std::make_shared<GradedSpan>(m.nvars(), data_->grading,
                                       [data](long e) { return hodge_generators(*data, e); });
}

std::vector<Polynomial> HodgeIdeal::generators(long int_degree) const { return hodge_generators(*data_, int_degree); }

HodgeSlice hodge_slice(const MilnorData& m, unsigned p, const Rational& e) {
  if (m.weights().grading().from_weighted(e) < 0)
    throw std::invalid_argument("degree " + to_string(e) + " is off the weighted degree grid");
  return {p, e, HodgeIdeal(m, p).slice(e)};
}

// ---------------------------------------------------------------------------
// Verifiers

bool DegreeReport::passed() const { return !first_failure(); }

std::optional<Rational> DegreeReport::first_failure() const {
  for (const DegreeCheck& d : degrees)
    if (!d.equal) return d.degree;
  return std::nullopt;
}

Rational default_max_degree(unsigned p) { return Rational(static_cast<long>(p) + 2); }

DegreeReport compare_hodge_with_v(const VFiltration& v, unsigned p, const Rational& max_degree, bool modulo_f) {
  const MilnorData& m = v.milnor();
  const WeightSystem& w = m.weights();
  const IntegerGrading& grading = w.grading();
  DegreeReport report;
  report.p = p;
  report.modulo_f = modulo_f;
  report.max_degree = max_degree;

  HodgeIdeal hodge(m, p);
  const IdealHandle v_ideal = v.level(Rational(static_cast<long>(p) + 1))->ideal;
  const IdealHandle f_ideal(m.nvars(), {m.f()}, MonomialOrder::weighted_grevlex(w));
  const long top = floor(max_degree * grading.scale).get_si();
  for (long d = 0; d <= top; ++d) {
    const Rational e = grading.to_weighted(d);
    GradedSlice lhs = hodge.slice(d);
    if (!lhs.attainable()) continue;
    GradedSlice rhs = v_ideal.graded_slice(e, w);
    if (modulo_f) {
      GradedSlice fs = f_ideal.graded_slice(e, w);
      lhs = slice_sum(lhs, fs);
      rhs = slice_sum(rhs, fs);
    }
    report.degrees.push_back({e, lhs.dim(), rhs.dim(), slice_equal(lhs, rhs)});
  }
  return report;
}

DegreeReport verify_theorem1(const MilnorData& m, unsigned p, std::optional<Rational> max_degree) {
  DegreeReport r = compare_hodge_with_v(VFiltration(m), p, max_degree.value_or(default_max_degree(p)), true);
  r.name = "theorem1";
  return r;
}

namespace {

// 1/w for a homogeneous weight system with integer 1/w, else 0.
long homogeneous_degree(const WeightSystem& w) {
  if (!w.is_homogeneous()) return 0;
  Rational d = 1 / w[0];
  return is_integer(d) ? d.get_num().get_si() : 0;
}

}  // namespace

DegreeReport verify_242(const MilnorData& m, unsigned p, std::optional<Rational> max_degree) {
  if (p > 1) throw PreconditionError("the strict equality is only asserted for p = 0, 1");
  if (homogeneous_degree(m.weights()) == 0) throw PreconditionError("f must be homogeneous (all weights 1/d)");
  if (!m.has_coordinate_powers()) throw PreconditionError("f must contain x_i^d for every i");
  DegreeReport r = compare_hodge_with_v(VFiltration(m), p, max_degree.value_or(default_max_degree(p)), false);
  r.name = "eq242";
  return r;
}

DegreeReport verify_remark_i(const MilnorData& m, unsigned p, std::optional<Rational> max_degree) {
  if (homogeneous_degree(m.weights()) != 2) throw PreconditionError("f must be a homogeneous quadric");
  DegreeReport r = compare_hodge_with_v(VFiltration(m), p, max_degree.value_or(default_max_degree(p)), false);
  r.name = "remark_i";
  return r;
}

bool FloorReport::passed() const {
  if (Integer(hodge_floor) != weight_sum_floor) return false;
  for (std::size_t p = 0; p < v_unit.size(); ++p)
    if (v_unit[p] != (p < hodge_floor) || hodge_unit[p] != (p < hodge_floor)) return false;
  return true;
}

FloorReport verify_corollary1(const MilnorData& m) {
  FloorReport r;
  VFiltration v(m);
  r.hodge_floor = v.hodge_floor();
  r.weight_sum_floor = floor(m.weights().sum());
  const Polynomial one = Polynomial::constant(m.nvars(), 1);
  for (unsigned p = 0; p <= r.hodge_floor; ++p) {
    r.v_unit.push_back(v.level(Rational(static_cast<long>(p) + 1))->ideal.is_unit());
    r.hodge_unit.push_back(HodgeIdeal(m, p).slice(0L).contains(one));
  }
  return r;
}

RemarkIIReport counterexample_remark_ii() {
  const std::vector<std::string> vars{"x", "y", "z"};
  auto parse = [&](const char* s) { return parse_expression(s, vars); };
  const Polynomial f = parse("x^3+y^3+z^3");
  const MilnorData m = build_milnor(f);
  const VFiltration v(m);
  const Rational three = 3;

  RemarkIIReport r;
  const Polynomial fx = m.partials()[0];
  const Polynomial witness = parse("x*(y^3+z^3)");
  r.x4_in_v3 = parse("x^4") == fx * fx * make_rational(1, 9) && v.member(parse("x^4"), three);
  r.witness_not_in_v3 = !v.member(witness, three);

  PoleFraction inv_f(Polynomial::constant(3, 1), 1, f);
  PoleFraction d1 = quotient_derivative(inv_f, 0);
  PoleFraction d2 = quotient_derivative(d1, 0);
  const Polynomial target = parse("12*x^4 - 6*x*(y^3+z^3)");
  r.derivatives_match = d1 == PoleFraction(parse("-3*x^2"), 2, f) && d2 == PoleFraction(target, 3, f);
  r.first_derivative = "(" + to_string(d1.numerator(), vars) + ")/f^" + std::to_string(d1.pole_order());
  r.second_derivative = "(" + to_string(d2.numerator(), vars) + ")/f^" + std::to_string(d2.pole_order());

  const Rational deg4 = make_rational(4, 3);
  const GradedSlice hodge = HodgeIdeal(m, 2).slice(deg4);
  const GradedSlice v3 = v.level(three)->ideal.graded_slice(deg4, m.weights());
  r.hodge_contains_derivative = hodge.contains(target);
  r.hodge_differs_from_v3 = !slice_equal(hodge, v3) && !v3.contains(target);

  const IdealHandle v3_plus_f = ideal_sum(v.level(three)->ideal, IdealHandle(3, {f}, v.level(three)->ideal.order()));
  r.witness_in_v3_plus_f = v3_plus_f.contains(witness) && witness == f * parse("x") - parse("x^4");
  return r;
}

}  // namespace hodgevf
