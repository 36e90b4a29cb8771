#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "supervir/commands.hpp"
#include "supervir/io.hpp"

namespace py = pybind11;
using namespace supervir;

namespace {

Json to_json(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct PyElement {
  AlgebraPtr algebra;
  Element value;

  std::string str() const { return algebra->literal(value); }
};

PyElement wrap(const AlgebraPtr& a, Element x) { return PyElement{a, std::move(x)}; }

Element as_element(const AlgebraPtr& a, const py::handle& obj) {
  if (py::isinstance<PyElement>(obj)) return obj.cast<const PyElement&>().value;
  return parse_element(*a, to_json(obj));
}

BasisVector as_basis(const AlgebraPtr& a, const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_basis(*a, obj.cast<std::string>());
  const Element x = as_element(a, obj);
  if (x.size() != 1 || !x.terms().begin()->second.is_one()) throw InputError("expected a single basis vector");
  return x.terms().begin()->first;
}

py::list literals(const Algebra& a, const std::vector<BasisVector>& basis) {
  py::list out;
  for (const auto& b : basis) out.append(a.literal(b));
  return out;
}

py::dict leibniz_dict(const Algebra& a, const LeibnizReport& r) {
  py::dict d;
  d["passed"] = r.passed();
  d["checked"] = r.checked;
  d["skipped"] = r.skipped;
  py::list v;
  for (const auto& e : r.violations) v.append(py::make_tuple(a.literal(e.x), a.literal(e.y), a.literal(e.residual)));
  d["violations"] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for not-finitely graded Lie superalgebras of Block and super-Virasoro type";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<OutOfWindow>(m, "OutOfWindow", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text, std::int64_t d) { return parse_scalar(text, d); }), py::arg("text"),
           py::arg("d") = 0)
      .def(py::init<long>())
      .def("is_zero", &Scalar::is_zero)
      .def("is_rational", &Scalar::is_rational)
      .def("inverse", &Scalar::inverse)
      .def("conjugate", &Scalar::conjugate)
      .def("pow", &Scalar::pow)
      .def_property_readonly("d", &Scalar::d)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& x) { return "Scalar('" + x.str() + "')"; });

  py::class_<IndexGroup>(m, "IndexGroup")
      .def(py::init([](const std::vector<std::string>& generators, const std::string& s, std::int64_t d) {
             SessionConfig cfg;
             cfg.d = d;
             cfg.gamma_generators = generators;
             cfg.s = s;
             return build_group(cfg);
           }),
           py::arg("generators"), py::arg("s") = "0", py::arg("d") = 0)
      .def_property_readonly("rank", &IndexGroup::rank)
      .def_property_readonly("basis", [](const IndexGroup& g) {
        std::vector<std::string> out;
        for (const auto& b : g.basis()) out.push_back(b.str());
        return out;
      })
      .def_property_readonly("shift", [](const IndexGroup& g) { return g.shift().str(); })
      .def("contains", [](const IndexGroup& g, const std::string& x) { return g.member(parse_scalar(x, g.d())).has_value(); })
      .def("scaling_preserves", [](const IndexGroup& g, const std::string& c) {
        ScalingCheck r = scaling_preserves(g, parse_scalar(c, g.d()));
        return py::make_tuple(r.preserves, r.reason);
      });

  py::class_<Window>(m, "Window")
      .def_static("box", &Window::box, py::arg("group"), py::arg("bound"), py::arg("i_max"))
      .def_static("parse", [](const IndexGroup& g, const py::object& obj) { return parse_window(g, to_json(obj)); })
      .def("pair_closure", &Window::pair_closure)
      .def_readonly("i_max", &Window::i_max)
      .def("degrees", [](const Window& w, const IndexGroup& g) {
        std::vector<std::string> out;
        for (const auto& d : w.degrees) out.push_back(degree_literal(g, d));
        return out;
      });

  py::class_<PyElement>(m, "Element")
      .def("__str__", &PyElement::str)
      .def("__repr__", [](const PyElement& x) { return "Element('" + x.str() + "')"; })
      .def("is_zero", [](const PyElement& x) { return x.value.is_zero(); })
      .def("__len__", [](const PyElement& x) { return x.value.size(); })
      .def("to_dict", [](const PyElement& x) { return from_json(element_to_json(*x.algebra, x.value)); })
      .def("coefficient", [](const PyElement& x, const py::object& b) { return x.value.coefficient(as_basis(x.algebra, b)); })
      .def("__add__", [](const PyElement& x, const PyElement& y) { return wrap(x.algebra, x.value + y.value); })
      .def("__sub__", [](const PyElement& x, const PyElement& y) { return wrap(x.algebra, x.value - y.value); })
      .def("__neg__", [](const PyElement& x) { return wrap(x.algebra, -x.value); })
      .def("__rmul__", [](const PyElement& x, const Scalar& k) { return wrap(x.algebra, k * x.value); })
      .def("__eq__", [](const PyElement& x, const PyElement& y) { return x.value == y.value; });

  py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
      .def(py::init([](const IndexGroup& g, const std::string& variant, const std::string& convention) {
             SVirConvention c;
             if (convention == "as_published") c = SVirConvention::AsPublished;
             else if (convention == "sign_corrected") c = SVirConvention::SignCorrected;
             else throw ConfigError("unknown convention '" + convention + "'");
             return std::make_shared<Algebra>(g, parse_variant(variant), c);
           }),
           py::arg("group"), py::arg("variant") = "SV", py::arg("convention") = "as_published")
      .def_property_readonly("variant", [](const Algebra& a) { return to_string(a.variant()); })
      .def_property_readonly("group", &Algebra::group)
      .def("element", [](const AlgebraPtr& a, const py::object& obj) { return wrap(a, as_element(a, obj)); })
      .def("bracket", [](const AlgebraPtr& a, const py::object& x, const py::object& y) {
        return wrap(a, a->bracket(as_element(a, x), as_element(a, y)));
      })
      .def("skew_residual", [](const AlgebraPtr& a, const py::object& x, const py::object& y) {
        return wrap(a, a->skew_residual(as_basis(a, x), as_basis(a, y)));
      })
      .def("jacobi_residual", [](const AlgebraPtr& a, const py::object& x, const py::object& y, const py::object& z) {
        return wrap(a, a->jacobi_residual(as_basis(a, x), as_basis(a, y), as_basis(a, z)));
      })
      .def("window_basis", [](const Algebra& a, const Window& w) { return literals(a, a.window_basis(w)); })
      .def("is_central", [](const AlgebraPtr& a, const py::object& z, const Window& w) {
        CentralityReport r = a->is_central(as_element(a, z), w);
        py::dict d;
        d["central"] = r.central;
        if (r.witness) d["witness"] = a->literal(*r.witness);
        if (r.witness_bracket) d["bracket"] = a->literal(*r.witness_bracket);
        return d;
      })
      .def("window_center", [](const AlgebraPtr& a, const Window& w) {
        std::vector<PyElement> out;
        for (auto& z : a->window_center(w)) out.push_back(wrap(a, std::move(z)));
        return out;
      })
      .def("generate_span", [](const Algebra& a, const Window& w) {
        SpanReport r = a.generate_span(w);
        py::dict d;
        d["reached"] = literals(a, {r.reached.begin(), r.reached.end()});
        d["missing"] = literals(a, {r.missing.begin(), r.missing.end()});
        d["dimension"] = r.dimension;
        d["rounds"] = r.rounds;
        return d;
      });

  m.def("adjust_inner", [](const AlgebraPtr& a, const py::object& v) { return wrap(a, adjust_inner(*a, as_element(a, v))); });

  m.def(
      "check_d_phi",
      [](const AlgebraPtr& a, const std::vector<std::string>& phi, const Window& w) {
        HomZ h;
        for (const auto& v : phi) h.values.push_back(parse_scalar(v, a->group().d()));
        return leibniz_dict(*a, leibniz_check(*a, d_phi_table(*a, h, w.pair_closure()), w));
      },
      py::arg("algebra"), py::arg("phi"), py::arg("window"));
  m.def(
      "check_inner",
      [](const AlgebraPtr& a, const py::object& z, const Window& w) {
        return leibniz_dict(*a, leibniz_check(*a, inner_derivation_table(*a, as_element(a, z), w.pair_closure()), w));
      },
      py::arg("algebra"), py::arg("z"), py::arg("window"));
  m.def(
      "leibniz_check",
      [](const AlgebraPtr& a, const py::object& table, const Window& w) {
        return leibniz_dict(*a, leibniz_check(*a, parse_derivation_table(*a, to_json(table)), w));
      },
      py::arg("algebra"), py::arg("table"), py::arg("window"));

  m.def("aut_validate", [](const AlgebraPtr& a, const py::object& p) {
    return aut_validate(*a, parse_aut_params(*a, to_json(p))).errors;
  });
  m.def("aut_apply", [](const AlgebraPtr& a, const py::object& p, const py::object& x) {
    return wrap(a, aut_apply(*a, parse_aut_params(*a, to_json(p)), as_element(a, x)));
  });
  m.def("aut_compose", [](const AlgebraPtr& a, const py::object& p1, const py::object& p2) {
    return from_json(aut_params_to_json(
        *a, aut_compose(*a, parse_aut_params(*a, to_json(p1)), parse_aut_params(*a, to_json(p2)))));
  });
  m.def("aut_check_hom", [](const AlgebraPtr& a, const py::object& p, const Window& w) {
    HomReport r = aut_check_hom(*a, parse_aut_params(*a, to_json(p)), w);
    py::dict d;
    d["passed"] = r.passed();
    d["checked"] = r.checked;
    d["violations"] = r.violations.size();
    return d;
  });

  m.def(
      "is_cocycle",
      [](const AlgebraPtr& a, const py::object& psi, const Window& w) {
        CocycleReport r = is_cocycle(*a, parse_cocycle(*a, to_json(psi), w.pair_closure()), w);
        py::dict d;
        d["passed"] = r.passed();
        d["pairs"] = r.checked_pairs;
        d["triples"] = r.checked_triples;
        d["skipped"] = r.skipped;
        py::list v;
        for (const auto& e : r.violations) {
          std::vector<std::string> args;
          for (const auto& b : e.args) args.push_back(a->literal(b));
          v.append(py::make_tuple(args, e.residual.str()));
        }
        d["violations"] = v;
        return d;
      },
      py::arg("algebra"), py::arg("cocycle"), py::arg("window"));
  m.def(
      "central_cocycle_value",
      [](const AlgebraPtr& a, const py::object& x, const py::object& y, const Window& w, const std::string& convention) {
        const SVirConvention c =
            convention == "sign_corrected" ? SVirConvention::SignCorrected : SVirConvention::AsPublished;
        return svir_central_cocycle(*a, w, c).eval(*a, as_basis(a, x), as_basis(a, y));
      },
      py::arg("algebra"), py::arg("x"), py::arg("y"), py::arg("window"), py::arg("convention") = "as_published");
  m.def(
      "trivialize",
      [](const AlgebraPtr& a, const py::object& psi, const Window& w) {
        const Window closure = w.pair_closure();
        const CocycleSpec spec = parse_cocycle(*a, to_json(psi), closure);
        const LinearFunctional f = trivialize(*a, spec, closure);
        ResidualReport r = residual_check(*a, spec, f, w);
        py::dict values;
        for (const auto& b : a->window_basis(w)) values[py::str(a->literal(b))] = f.value(b).str();
        py::dict d;
        d["f"] = values;
        d["residual_zero"] = r.passed();
        d["sectors"] = py::make_tuple(r.ll.checked, r.lg.checked, r.gg.checked);
        return d;
      },
      py::arg("algebra"), py::arg("cocycle"), py::arg("window"));

  m.def("command_names", &command_names);
  m.def(
      "run_command",
      [](const std::string& command, const std::string& config, const std::vector<std::string>& inputs,
         std::optional<std::string> window, std::optional<std::uint64_t> seed, int jobs) {
        CommandOptions o;
        o.command = command;
        o.config_path = config;
        o.inputs = inputs;
        o.window_path = std::move(window);
        o.seed = seed;
        o.jobs = jobs;
        Report r;
        {
          py::gil_scoped_release release;
          r = execute(o);
        }
        return from_json(r.to_json());
      },
      py::arg("command"), py::arg("config"), py::arg("inputs") = std::vector<std::string>{},
      py::arg("window") = std::nullopt, py::arg("seed") = std::nullopt, py::arg("jobs") = 1);
}
