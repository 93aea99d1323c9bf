#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "hodgevf/cli.hpp"
#include "hodgevf/hodge.hpp"
#include "hodgevf/oracles.hpp"
#include "hodgevf/parser.hpp"
#include "hodgevf/vfilt.hpp"

namespace py = pybind11;
using namespace hodgevf;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

// Accepts int, str "p/q" or fractions.Fraction.
Rational from_python(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const Rational& v : values) out.append(to_fraction(v));
  return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const Polynomial& p : polys) out.push_back(to_string(p, names));
  return out;
}

class Singularity {
 public:
  Singularity(const std::string& f, std::optional<std::vector<std::string>> variables,
              std::optional<std::vector<py::object>> weights)
      : names_(variables ? *variables : scan_variables(f)) {
    Polynomial poly = parse_expression(f, names_);
    std::optional<WeightSystem> w;
    if (weights) {
      std::vector<Rational> values;
      for (const py::object& o : *weights) values.push_back(from_python(o));
      w = WeightSystem(std::move(values));
    }
    v_ = std::make_shared<VFiltration>(build_milnor(poly, w));
  }

  const std::vector<std::string>& variables() const { return names_; }
  std::string polynomial() const { return to_string(m().f(), names_); }
  py::list weights() const { return fractions(m().weights().values()); }
  std::size_t mu() const { return m().mu(); }
  py::object mlct() const { return to_fraction(v_->mlct()); }
  py::object lct() const { return to_fraction(hodgevf::lct(m())); }
  unsigned hodge_floor() const { return v_->hodge_floor(); }
  py::list reduced_bs_roots() const { return fractions(hodgevf::reduced_bs_roots(m())); }
  std::vector<std::string> milnor_basis() const {
    std::vector<std::string> out;
    for (const Monomial& b : m().basis()) out.push_back(to_string(b, names_));
    return out;
  }

  py::dict spectrum() const {
    py::dict out;
    for (const auto& [alpha, mult] : v_->spectrum().multiplicity) out[to_fraction(alpha)] = mult;
    return out;
  }

  bool v_member(const std::string& g, const py::object& alpha) const {
    return v_->member(parse_expression(g, names_), from_python(alpha));
  }

  py::tuple v_order(const std::string& g, const py::object& ceiling) const {
    VOrder o = v_->order(parse_expression(g, names_), from_python(ceiling));
    return py::make_tuple(to_fraction(o.value), o.above_ceiling);
  }

  std::vector<std::string> v_level(const py::object& alpha) const {
    return strings(v_->level(from_python(alpha))->ideal.basis(), names_);
  }

  py::list jumping_numbers(const py::object& ceiling) const {
    py::list out;
    for (const Jump& j : v_->jumping_numbers(from_python(ceiling)).jumps)
      out.append(py::make_tuple(to_fraction(j.alpha), j.gr_dim));
    return out;
  }

  std::size_t gr_dim_formula(const py::object& alpha) const { return v_->gr_dim_formula(from_python(alpha)); }
  std::size_t gr_dim_direct(const py::object& alpha) const { return v_->gr_dim_direct(from_python(alpha)); }

  std::vector<std::string> multiplier_ideal(const py::object& alpha) const {
    return strings(v_->multiplier_ideal(from_python(alpha)).basis(), names_);
  }

  std::vector<std::string> hodge_slice(unsigned p, const py::object& degree) const {
    return strings(hodgevf::hodge_slice(m(), p, from_python(degree)).slice.rows(), names_);
  }

  bool verify_theorem1(unsigned p, const std::optional<py::object>& max_degree) const {
    return hodgevf::verify_theorem1(m(), p, bound(max_degree)).passed();
  }
  bool verify_242(unsigned p, const std::optional<py::object>& max_degree) const {
    return hodgevf::verify_242(m(), p, bound(max_degree)).passed();
  }
  bool verify_remark_i(unsigned p, const std::optional<py::object>& max_degree) const {
    return hodgevf::verify_remark_i(m(), p, bound(max_degree)).passed();
  }
  bool verify_corollary1() const { return hodgevf::verify_corollary1(m()).passed(); }

 private:
  const MilnorData& m() const { return v_->milnor(); }
  static std::optional<Rational> bound(const std::optional<py::object>& d) {
    if (!d) return std::nullopt;
    return from_python(*d);
  }

  std::vector<std::string> names_;
  std::shared_ptr<VFiltration> v_;
};

}  // namespace

PYBIND11_MODULE(_hodgevf, m) {
  m.doc() = "Exact microlocal V-filtrations and Hodge ideals";
  m.attr("__version__") = HODGEVF_VERSION;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<WeightError>(m, "WeightError", PyExc_ValueError);
  py::register_exception<MilnorError>(m, "MilnorError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Singularity>(m, "Singularity")
      .def(py::init<const std::string&, std::optional<std::vector<std::string>>, std::optional<std::vector<py::object>>>(),
           py::arg("f"), py::arg("variables") = py::none(), py::arg("weights") = py::none())
      .def_property_readonly("variables", &Singularity::variables)
      .def_property_readonly("polynomial", &Singularity::polynomial)
      .def_property_readonly("weights", &Singularity::weights)
      .def_property_readonly("mu", &Singularity::mu)
      .def_property_readonly("mlct", &Singularity::mlct)
      .def_property_readonly("lct", &Singularity::lct)
      .def_property_readonly("hodge_floor", &Singularity::hodge_floor)
      .def_property_readonly("milnor_basis", &Singularity::milnor_basis)
      .def("spectrum", &Singularity::spectrum)
      .def("reduced_bs_roots", &Singularity::reduced_bs_roots)
      .def("v_member", &Singularity::v_member, py::arg("g"), py::arg("alpha"))
      .def("v_order", &Singularity::v_order, py::arg("g"), py::arg("ceiling"))
      .def("v_level", &Singularity::v_level, py::arg("alpha"))
      .def("jumping_numbers", &Singularity::jumping_numbers, py::arg("ceiling"))
      .def("gr_dim_formula", &Singularity::gr_dim_formula, py::arg("alpha"))
      .def("gr_dim_direct", &Singularity::gr_dim_direct, py::arg("alpha"))
      .def("multiplier_ideal", &Singularity::multiplier_ideal, py::arg("alpha"))
      .def("hodge_slice", &Singularity::hodge_slice, py::arg("p"), py::arg("degree"))
      .def("verify_theorem1", &Singularity::verify_theorem1, py::arg("p"), py::arg("max_degree") = py::none())
      .def("verify_242", &Singularity::verify_242, py::arg("p"), py::arg("max_degree") = py::none())
      .def("verify_remark_i", &Singularity::verify_remark_i, py::arg("p"), py::arg("max_degree") = py::none())
      .def("verify_corollary1", &Singularity::verify_corollary1);

  m.def(
      "bp_spectrum",
      [](const std::vector<unsigned>& exponents) {
        py::dict out;
        for (const auto& [alpha, mult] : bp_spectrum(DiagonalSpec(exponents)).multiplicity) out[to_fraction(alpha)] = mult;
        return out;
      },
      py::arg("exponents"));
  m.def(
      "bp_v_member",
      [](const std::vector<unsigned>& exponents, const std::vector<unsigned>& monomial, const py::object& alpha) {
        Monomial v(monomial.size());
        for (std::size_t i = 0; i < monomial.size(); ++i) v.set(i, monomial[i]);
        return bp_v_member(DiagonalSpec(exponents), v, from_python(alpha));
      },
      py::arg("exponents"), py::arg("monomial"), py::arg("alpha"));
  m.def("counterexample_remark_ii", [] {
    RemarkIIReport r = counterexample_remark_ii();
    py::dict out;
    out["x4_in_v3"] = r.x4_in_v3;
    out["witness_not_in_v3"] = r.witness_not_in_v3;
    out["hodge_contains_derivative"] = r.hodge_contains_derivative;
    out["hodge_differs_from_v3"] = r.hodge_differs_from_v3;
    out["witness_in_v3_plus_f"] = r.witness_in_v3_plus_f;
    out["derivatives_match"] = r.derivatives_match;
    out["second_derivative"] = r.second_derivative;
    out["passed"] = r.passed();
    return out;
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv{"hodgevf"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(argv, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
