// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hodgevf/cli.hpp"
#include "hodgevf/hodge.hpp"
#include "hodgevf/oracles.hpp"
#include "hodgevf/parser.hpp"
#include "hodgevf/vfilt.hpp"

using namespace hodgevf;

namespace {

// Failure messages collected by a criterion; empty means pass.
using Problems = std::vector<std::string>;

Polynomial parse(const std::string& text) { return parse_expression(text, scan_variables(text)); }
MilnorData milnor(const std::string& text) { return build_milnor(parse(text)); }
Rational q(long num, long den = 1) { return make_rational(num, den); }

std::string quadric(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "u", "v"};
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += std::string(i ? "+" : "") + names[i] + "^2";
  return out;
}

// Plain degree d of a homogeneous f of degree deg as a weighted degree.
Rational plain(long d, long deg) { return q(d, deg); }

void expect(Problems& p, bool ok, const std::string& what) {
  if (!ok) p.push_back(what);
}

void expect_report(Problems& p, const DegreeReport& r, const std::string& label) {
  if (r.passed()) return;
  auto bad = r.first_failure();
  p.push_back(label + " differs at weighted degree " + (bad ? to_string(*bad) : std::string("?")));
}

Problems remark_ii() {
  Problems p;
  const std::vector<std::string> xyz{"x", "y", "z"};
  MilnorData m = milnor("x^3+y^3+z^3");
  VFiltration v(m);
  expect(p, v.member(parse_expression("x^4", xyz), 3), "x^4 not in V^3");
  expect(p, !v.member(parse_expression("x*(y^3+z^3)", xyz), 3), "x(y^3+z^3) in V^3");
  const Polynomial witness = parse_expression("12*x^4 - 6*x*(y^3+z^3)", xyz);
  GradedSlice h = hodge_slice(m, 2, q(4, 3)).slice;
  expect(p, h.contains(witness), "12x^4 - 6x(y^3+z^3) not in I(D,2) in degree 4");
  GradedSlice v3 = v.level(3)->ideal.graded_slice(q(4, 3), m.weights());
  expect(p, !slice_equal(h, v3), "I(D,2) = V^3 in degree 4");
  expect(p, counterexample_remark_ii().passed(), "counterexample report failed");
  expect_report(p, verify_theorem1(m, 2, plain(12, 3)), "I(D,2) + (f) vs V^3 + (f)");
  return p;
}

Problems eq242() {
  Problems p;
  for (auto [text, d] : std::vector<std::pair<std::string, long>>{{"x^3+y^3+z^3", 3}, {"x^2+y^2+z^2", 2}, {"x^4+y^4+z^4", 4}}) {
    MilnorData m = milnor(text);
    for (unsigned k = 0; k <= 1; ++k) expect_report(p, verify_242(m, k, plain(12, d)), text + " p=" + std::to_string(k));
  }
  return p;
}

Problems remark_i() {
  Problems p;
  for (std::size_t n = 2; n <= 5; ++n) {
    MilnorData m = milnor(quadric(n));
    for (unsigned k = 0; k <= 3; ++k) {
      DegreeReport r = verify_remark_i(m, k, plain(10, 2));
      expect(p, !r.modulo_f, "remark (i) check ran modulo f");
      expect_report(p, r, quadric(n) + " p=" + std::to_string(k));
    }
  }
  return p;
}

Problems corollary1() {
  Problems p;
  struct Case {
    std::string text;
    unsigned floor;
  };
  std::vector<Case> cases{{quadric(2), 1}, {quadric(3), 1}, {quadric(4), 2}, {quadric(5), 2},
                          {"x^3+y^3+z^3", 1}, {"x^2+y^3", 0}};
  for (const Case& c : cases) {
    MilnorData m = milnor(c.text);
    VFiltration v(m);
    FloorReport r = verify_corollary1(m);
    expect(p, r.passed(), c.text + ": floor report failed");
    expect(p, r.hodge_floor == c.floor, c.text + ": hodge_floor " + std::to_string(r.hodge_floor));
    expect(p, floor(m.weights().sum()) == c.floor, c.text + ": floor of weight sum");
    const Polynomial one = Polynomial::constant(m.nvars(), 1);
    // V^{p+1} = O exactly for p <= floor - 1, and I(D,p) follows
    for (unsigned k = 0; k <= c.floor + 1; ++k) {
      const bool unit = k < c.floor;
      expect(p, v.level(Rational(static_cast<long>(k) + 1))->ideal.is_unit() == unit,
             c.text + ": V^" + std::to_string(k + 1) + " unit transition");
      expect(p, HodgeIdeal(m, k).slice(0L).contains(one) == unit, c.text + ": 1 in I(D," + std::to_string(k) + ")");
    }
  }
  return p;
}

Problems mlct_table() {
  Problems p;
  struct Row {
    std::string text;
    Rational mlct, lct;
  };
  for (const Row& r : std::vector<Row>{{"x^2+y^3", q(5, 6), q(5, 6)},
                                        {"x^2+y^2+z^2", q(3, 2), q(1)},
                                        {"x^3+y^3+z^3", q(1), q(1)},
                                        {"x^3+y^5", q(8, 15), q(8, 15)}}) {
    MilnorData m = milnor(r.text);
    VFiltration v(m);
    const Rational by_weights = m.weights().sum();
    const Rational by_spectrum = spectrum(m).min();
    expect(p, by_weights == r.mlct, r.text + ": sum of weights " + to_string(by_weights));
    expect(p, by_spectrum == r.mlct, r.text + ": minimal spectral number " + to_string(by_spectrum));
    // largest alpha with 1 in V^alpha
    const Polynomial one = Polynomial::constant(m.nvars(), 1);
    expect(p, v.member(one, r.mlct) && !v.member(one, v.successor(r.mlct)), r.text + ": 1 in V^alpha threshold");
    expect(p, mlct(m) == r.mlct, r.text + ": mlct()");
    expect(p, lct(m) == r.lct, r.text + ": lct " + to_string(lct(m)));
  }
  return p;
}

const std::vector<std::string>& example_set() {
  static const std::vector<std::string> set{"x^2+y^3",     "x^2+y^2+z^2",   "x^3+y^3+z^3",       "x^3+y^5",
                                            "x^4+y^4+z^4", "x^2+y^2",       "x^2+y^2+z^2+u^2",   "x^2+y^2+z^2+u^2+v^2",
                                            "x^2+x*y^2+y^4", "x^3+y^3+z^3+x*y*z", "x^2*y+y^4+z^2"};
  return set;
}

Problems dims() {
  Problems p;
  for (const std::string& text : {"x^2+y^3", "x^2+y^2+z^2", "x^3+y^3+z^3", "x^3+y^5", "x^4+y^4+z^4"}) {
    VFiltration v(milnor(text));
    for (const Rational& c : v.candidates(3)) {
      const std::size_t formula = v.gr_dim_formula(c), direct = v.gr_dim_direct(c);
      expect(p, formula == direct,
             text + " at " + to_string(c) + ": " + std::to_string(formula) + " vs " + std::to_string(direct));
    }
  }
  return p;
}

void each_sorted_spec(std::size_t n, unsigned lo, std::vector<unsigned>& a, const std::function<void()>& visit) {
  if (a.size() == n) {
    visit();
    return;
  }
  for (unsigned e = lo; e <= 6; ++e) {
    a.push_back(e);
    each_sorted_spec(n, e, a, visit);
    a.pop_back();
  }
}

Problems oracle(std::size_t& specs, std::size_t& checks) {
  Problems p;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<unsigned> a;
    each_sorted_spec(n, 2, a, [&] {
      std::string text;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        text += (i ? "+" : "") + names.back() + "^" + std::to_string(a[i]);
      }
      DiagonalSpec spec(a);
      VFiltration v(build_milnor(parse_expression(text, names)));
      OracleComparison c = compare_with_oracle(v, spec, 10, q(4));
      ++specs;
      checks += c.membership_checks;
      expect(p, c.spectrum_agrees, text + ": spectrum");
      if (c.first_mismatch) p.push_back(text + ": " + *c.first_mismatch);
    });
  }
  return p;
}

Problems properties() {
  Problems p;
  for (const std::string& text : example_set()) {
    VFiltration v(milnor(text));
    for (const PropertyCheck& c : check_properties(v, 3)) expect(p, c.passed, text + ": " + c.name + " " + c.detail);
  }
  return p;
}

Problems determinism() {
  Problems p;
  for (const std::string& text : {"x^3+y^3+z^3", "x^2+y^3", "x^2+y^2+z^2", "x^2+x*y^2+y^4"}) {
    std::vector<std::string> args{"hodgevf", "verify", "all", "-f", text, "--format", "json"};
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    expect(p, c1 == cli::kOk && c2 == cli::kOk, text + ": verify all exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
    expect(p, !out1.str().empty() && out1.str() == out2.str(), text + ": reports differ");
  }
  return p;
}

}  // namespace

int main() {
  std::size_t specs = 0, checks = 0;
  struct Criterion {
    int id;
    std::string title;
    std::function<Problems()> run;
  };
  std::vector<Criterion> criteria{
      {1, "counterexample for x^3+y^3+z^3 at p=2, equality modulo (f) up to degree 12", remark_ii},
      {2, "I(D,0) = V^1 and I(D,1) = V^2 up to degree 12", eq242},
      {3, "I(D,p) = V^(p+1) for quadrics, n = 2..5, p <= 3, degree <= 10", remark_i},
      {4, "unit-ideal floor law", corollary1},
      {5, "mlct and lct table, both routes", mlct_table},
      {6, "graded dimension formula vs Groebner codimensions, alpha <= 3", dims},
      {7, "Groebner pipeline vs diagonal oracle, a_i <= 6, n <= 4", [&] { return oracle(specs, checks); }},
      {8, "filtration property suites", properties},
      {9, "byte-identical verify all reports", determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Problems problems;
    try {
      problems = c.run();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (problems.empty() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    if (c.id == 7) line << " (" << specs << " specs, " << checks << " membership checks)";
    line.precision(2);
    line << std::fixed << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    for (const std::string& m : problems) std::cout << "    " << m << '\n';
    if (!problems.empty()) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
