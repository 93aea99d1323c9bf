// Randomized identities. Seeds are fixed so failures reproduce.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hodgevf/groebner.hpp"
#include "hodgevf/hodge.hpp"
#include "hodgevf/vfilt.hpp"
#include "support.hpp"

using namespace hodgevf;
using hodgevf::testing::numbered_names;
using hodgevf::testing::q;

namespace {

constexpr int kIterations = 200;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient() {
    int num = integer(-5, 5);
    if (num == 0) num = 1;
    return make_rational(num, integer(1, 3));
  }

  Monomial monomial(std::size_t n, unsigned max_degree) {
    Monomial m(n);
    unsigned budget = integer(0, static_cast<int>(max_degree));
    while (budget-- > 0) {
      std::size_t i = integer(0, static_cast<int>(n) - 1);
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Polynomial polynomial(std::size_t n, unsigned max_terms, unsigned max_degree) {
    std::vector<Term> terms;
    unsigned count = integer(0, static_cast<int>(max_terms));
    for (unsigned t = 0; t < count; ++t) terms.push_back({monomial(n, max_degree), coefficient()});
    return Polynomial::from_terms(n, std::move(terms));
  }

  // Random homogeneous polynomial of plain degree d.
  Polynomial homogeneous(std::size_t n, unsigned d, unsigned max_terms) {
    auto monos = monomials_of_degree(n, d);
    std::vector<Term> terms;
    unsigned count = integer(1, static_cast<int>(max_terms));
    for (unsigned t = 0; t < count; ++t) terms.push_back({monos[integer(0, static_cast<int>(monos.size()) - 1)], coefficient()});
    return Polynomial::from_terms(n, std::move(terms));
  }

  // Isolated weighted homogeneous f: a diagonal part plus random terms of
  // the same weighted degree, with the weights forced to the diagonal ones.
  std::optional<MilnorData> singularity(std::size_t n) {
    std::vector<long> a(n);
    Integer l = 1;
    for (auto& e : a) {
      e = integer(2, 4);
      mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), e);
    }
    const long scale = l.get_si();
    std::vector<long> W(n);
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      W[i] = scale / a[i];
      w[i] = make_rational(1, a[i]);
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({Monomial::variable(n, i, a[i]), coefficient()});
    auto same_degree = monomials_of_weighted_degree(W, scale);
    unsigned extra = integer(0, 2);
    for (unsigned t = 0; t < extra && !same_degree.empty(); ++t)
      terms.push_back({same_degree[integer(0, static_cast<int>(same_degree.size()) - 1)], coefficient()});
    Polynomial f = Polynomial::from_terms(n, std::move(terms));
    try {
      MilnorData m = build_milnor(f, WeightSystem(w));
      if (!m.has_coordinate_powers()) return std::nullopt;
      return m;
    } catch (const MilnorError&) {
      return std::nullopt;
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

TEST(RingProperties, CommutativeRingAxioms) {
  Gen g(1);
  for (int i = 0; i < kIterations; ++i) {
    Polynomial a = g.polynomial(3, 5, 4), b = g.polynomial(3, 5, 4), c = g.polynomial(3, 5, 4);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Polynomial(3));
    EXPECT_EQ(a * Polynomial::constant(3, 1), a);
  }
}

TEST(RingProperties, LeibnizAndCommutingPartials) {
  Gen g(2);
  for (int i = 0; i < kIterations; ++i) {
    Polynomial a = g.polynomial(3, 5, 5), b = g.polynomial(3, 5, 5);
    for (std::size_t x = 0; x < 3; ++x) {
      EXPECT_EQ((a * b).derivative(x), a.derivative(x) * b + a * b.derivative(x));
      for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(a.derivative(x).derivative(y), a.derivative(y).derivative(x));
    }
  }
}

TEST(RingProperties, PrintParseRoundTrip) {
  Gen g(3);
  auto names = numbered_names(4);
  for (int i = 0; i < kIterations; ++i) {
    Polynomial a = g.polynomial(4, 6, 5);
    EXPECT_EQ(parse_expression(to_string(a, names), names), a) << to_string(a, names);
  }
}

TEST(RingProperties, ExactDivisionInvertsMultiplication) {
  Gen g(4);
  for (int i = 0; i < kIterations; ++i) {
    Polynomial a = g.polynomial(3, 4, 3), b = g.polynomial(3, 4, 3);
    if (b.is_zero()) continue;
    auto quotient = divide_exact(a * b, b);
    ASSERT_TRUE(quotient);
    EXPECT_EQ(*quotient, a);
  }
}

TEST(WeightProperties, AlphaIsAffineInExponents) {
  Gen g(5);
  WeightSystem w({q(1, 2), q(1, 3), q(1, 5)});
  for (int i = 0; i < kIterations; ++i) {
    Monomial u = g.monomial(3, 6), v = g.monomial(3, 6);
    EXPECT_EQ(alpha_value(u * v, w), alpha_value(u, w) + alpha_value(v, w) - w.sum());
    EXPECT_EQ(alpha_value(u, w), w.weighted_degree(u) + w.sum());
  }
}

TEST(GroebnerProperties, NormalFormIsIdempotentAndWellDefined) {
  Gen g(6);
  for (int i = 0; i < 60; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(g.homogeneous(3, g.integer(1, 3), 3));
    IdealHandle ideal(3, gens);
    for (int k = 0; k < 5; ++k) {
      Polynomial p = g.polynomial(3, 5, 5);
      Polynomial nf = ideal.normal_form(p);
      EXPECT_EQ(ideal.normal_form(nf), nf);
      EXPECT_TRUE(ideal.contains(p - nf));
      Polynomial shifted = p + gens[k % 3] * g.polynomial(3, 3, 2);
      EXPECT_EQ(ideal.normal_form(shifted), nf);
    }
    for (const Polynomial& gen : gens) EXPECT_TRUE(ideal.contains(gen));
  }
}

TEST(GroebnerProperties, ReducedBasisIsPermutationInvariant) {
  Gen g(7);
  std::mt19937 shuffler(7);
  for (int i = 0; i < 60; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(g.homogeneous(3, g.integer(2, 3), 3));
    IdealHandle a(3, gens);
    std::shuffle(gens.begin(), gens.end(), shuffler);
    IdealHandle b(3, gens);
    EXPECT_EQ(a.basis(), b.basis());
  }
}

TEST(GroebnerProperties, QuotientDimensionMatchesGradedSlices) {
  // For a homogeneous zero-dimensional ideal, codim = sum of slice codims.
  Gen g(8);
  WeightSystem plain = WeightSystem::homogeneous(3, 1);
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens{g.homogeneous(3, 2, 3), g.homogeneous(3, 2, 3), g.homogeneous(3, 2, 3)};
    IdealHandle ideal(3, gens);
    if (!has_finite_quotient(ideal)) continue;
    std::size_t total = 0;
    for (long e = 0; e <= 8; ++e) {
      GradedSlice s = graded_slice(ideal, q(e), plain);
      total += s.ambient_dim() - s.dim();
    }
    EXPECT_EQ(total, quotient_dim(ideal));
  }
}

class SingularityProperties : public ::testing::Test {
 protected:
  std::vector<MilnorData> sample(unsigned seed, int count) {
    Gen g(seed);
    std::vector<MilnorData> out;
    while (static_cast<int>(out.size()) < count) {
      auto m = g.singularity(static_cast<std::size_t>(g.integer(2, 3)));
      if (m) out.push_back(std::move(*m));
    }
    return out;
  }
};

TEST_F(SingularityProperties, MilnorOrlikAndSpectrumSymmetry) {
  for (const MilnorData& m : sample(9, 25)) {
    Rational prod = 1;
    for (const Rational& w : m.weights().values()) prod *= 1 / w - 1;
    EXPECT_EQ(prod, Rational(static_cast<long>(m.mu())));
    Spectrum s = spectrum(m);
    const long n = static_cast<long>(m.nvars());
    for (const auto& [alpha, mult] : s.multiplicity) EXPECT_EQ(s[n - alpha], mult);
    EXPECT_EQ(s.min(), m.weights().sum());
  }
}

TEST_F(SingularityProperties, FiltrationIdentities) {
  for (const MilnorData& m : sample(10, 12)) {
    VFiltration v(m);
    for (const PropertyCheck& c : check_properties(v, q(5, 2))) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    // telescoping: summing graded pieces recovers the codimension
    std::size_t running = 0;
    for (const Rational& c : v.candidates(q(5, 2))) {
      running += v.gr_dim_direct(c);
      EXPECT_EQ(running, v.codim(v.successor(c)));
      EXPECT_EQ(v.gr_dim_direct(c), v.gr_dim_formula(c));
    }
  }
}

TEST_F(SingularityProperties, PermutingVariablesPreservesInvariants) {
  for (const MilnorData& m : sample(11, 10)) {
    const std::size_t n = m.nvars();
    std::vector<Term> swapped;
    for (const Term& t : m.f().terms()) {
      Monomial r(n);
      for (std::size_t i = 0; i < n; ++i) r.set(i, t.mono[n - 1 - i]);
      swapped.push_back({r, t.coeff});
    }
    std::vector<Rational> w(m.weights().values().rbegin(), m.weights().values().rend());
    MilnorData other = build_milnor(Polynomial::from_terms(n, swapped), WeightSystem(w));
    EXPECT_EQ(other.mu(), m.mu());
    EXPECT_EQ(spectrum(other), spectrum(m));
    VFiltration a(m), b(other);
    for (const Rational& c : a.candidates(q(2))) EXPECT_EQ(a.codim(c), b.codim(c));
  }
}

TEST_F(SingularityProperties, HodgeIdealInclusions) {
  for (const MilnorData& m : sample(12, 6)) {
    const long scale = m.weights().grading().scale;
    for (unsigned p = 1; p <= 2; ++p) {
      HodgeIdeal lower(m, p - 1), upper(m, p);
      for (long e = 0; e <= 2 * scale; ++e) {
        GradedSlice hi = upper.slice(e + scale);
        GradedSlice lo = lower.slice(e);
        for (const Polynomial& g : lo.rows()) EXPECT_TRUE(hi.contains(m.f() * g));
      }
      EXPECT_TRUE(upper.slice(scale * static_cast<long>(p + 1)).contains(m.f().pow(p + 1)));
    }
  }
}

TEST_F(SingularityProperties, TheoremOneOnRandomInputs) {
  for (const MilnorData& m : sample(13, 6))
    for (unsigned p = 0; p <= 2; ++p) EXPECT_TRUE(verify_theorem1(m, p).passed()) << to_string(m.f(), numbered_names(m.nvars()));
}
