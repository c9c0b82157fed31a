#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncalc/calculus.hpp"
#include "ncalc/complexfield.hpp"
#include "ncalc/demos.hpp"
#include "ncalc/expr.hpp"
#include "ncalc/format.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/integration.hpp"
#include "ncalc/series.hpp"

namespace py = pybind11;
using namespace ncalc;

// Algebras are shared as pointers to const; Python holds them through the
// non-const holder registered below.
namespace pybind11::detail {
template <>
struct type_caster<AlgebraPtr> {
  PYBIND11_TYPE_CASTER(AlgebraPtr, const_name("Algebra"));
  bool load(handle src, bool) {
    if (!isinstance<AlgebraSpec>(src)) return false;
    value = src.cast<std::shared_ptr<AlgebraSpec>>();
    return true;
  }
  static handle cast(const AlgebraPtr& src, return_value_policy policy, handle parent) {
    return type_caster<std::shared_ptr<AlgebraSpec>>::cast(std::const_pointer_cast<AlgebraSpec>(src), policy, parent);
  }
};
}  // namespace pybind11::detail

namespace {

AlgebraPtr algebra_from(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) {
    const auto text = spec.cast<std::string>();
    if (!text.empty() && text.front() == '{') return make_algebra(nlohmann::json::parse(text));
    return builtin_algebra(text);
  }
  return spec.cast<AlgebraPtr>();
}

Element element_from(const AlgebraPtr& alg, const py::object& v) {
  if (py::isinstance<Element>(v)) return v.cast<Element>();
  if (py::isinstance<py::str>(v)) return parse_element(alg, v.cast<std::string>());
  if (py::isinstance<py::float_>(v) || py::isinstance<py::int_>(v)) return Element::scalar(alg, v.cast<double>());
  return Element(alg, v.cast<std::vector<double>>());
}

Map poly_map(const NoncommPoly& p) {
  return [p](const Element& x) { return p.eval(x); };
}

}  // namespace

PYBIND11_MODULE(_ncalc, m) {
  m.doc() = "Calculus over finite-dimensional associative algebras";

  static PyObject* error_type = py::exception<Error>(m, "NcalcError").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<AlgebraSpec, std::shared_ptr<AlgebraSpec>>(m, "Algebra")
      .def_property_readonly("name", &AlgebraSpec::name)
      .def_property_readonly("dim", &AlgebraSpec::dim)
      .def_property_readonly("basis_names", &AlgebraSpec::basis_names)
      .def_property_readonly("is_true_norm", &AlgebraSpec::is_true_norm)
      .def("to_json", [](const AlgebraSpec& a) { return a.to_json().dump(); })
      .def("__repr__", [](const AlgebraSpec& a) { return "<Algebra " + a.name() + ">"; });

  m.def("algebra", &algebra_from, py::arg("spec"),
        "Builtin name (real, complex, hyperbolic, quaternion) or a JSON document.");
  m.def("rescale_norm", &rescale_norm);
  m.def("minkowski", [](const AlgebraPtr& a) { return a->with_norm(NormKind::MinkowskiPseudo); });
  m.def("product_operator_norm", &product_operator_norm, py::arg("algebra"), py::arg("budget") = 20000,
        py::arg("seed") = 42);

  py::class_<Element>(m, "Element")
      .def(py::init([](const AlgebraPtr& a, const py::object& v) { return element_from(a, v); }))
      .def_property_readonly("algebra", &Element::algebra)
      .def_property_readonly("coords", &Element::coord_vector)
      .def("__getitem__", [](const Element& e, std::size_t i) {
        if (i >= e.dim()) throw py::index_error();
        return e[i];
      })
      .def("__len__", &Element::dim)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self / double())
      .def(-py::self)
      .def(py::self == py::self)
      .def("__abs__", [](const Element& e) { return norm(e); })
      .def("coord_norm", &Element::coord_norm)
      .def("inv", [](const Element& e) { return inv(e); })
      .def("__repr__", [](const Element& e) { return format_element(e); });

  m.def("commutator", &commutator);
  m.def("norm", &norm);
  m.def("conj", &conj);

  py::class_<NoncommPoly>(m, "Poly")
      .def(py::init([](const AlgebraPtr& a, const std::string& text) { return parse_poly(a, text); }))
      .def("__call__", [](const NoncommPoly& p, const py::object& x) { return p.eval(element_from(p.algebra(), x)); })
      .def_property_readonly("degree", &NoncommPoly::degree)
      .def("derivative", &diff_poly_tensor, "Closed tensor of dp")
      .def("derivative_at",
           [](const NoncommPoly& p, const py::object& x, const std::vector<py::object>& hs) {
             std::vector<Element> args;
             for (const auto& h : hs) args.push_back(element_from(p.algebra(), h));
             return diff_poly_k_at(p, args.size(), element_from(p.algebra(), x)).apply(args);
           },
           py::arg("x"), py::arg("directions"))
      .def("__repr__", [](const NoncommPoly& p) { return format_poly(p); });

  py::class_<TensorPoly>(m, "TensorPoly")
      .def(py::init([](const AlgebraPtr& a, const std::string& text) { return parse_form(a, text); }))
      .def_property_readonly("degree", &TensorPoly::degree)
      .def("__call__",
           [](const TensorPoly& t, const py::object& x, const std::vector<py::object>& args) {
             std::vector<Element> as;
             for (const auto& a : args) as.push_back(element_from(t.algebra(), a));
             return t.apply(element_from(t.algebra(), x), as);
           })
      .def("d", [](const TensorPoly& t) { return exterior_differential(t); })
      .def("__repr__", [](const TensorPoly& t) { return format_tensor(t); });

  m.def("gateaux",
        [](const std::function<Element(const Element&)>& f, const Element& x, const Element& h) {
          return gateaux(f, x, h);
        });

  m.def("series_coefficients",
        [](const std::string& kind, std::size_t order) {
          std::vector<std::vector<double>> out;
          for (const auto& s : solve_symmetric_system(parse_system_kind(kind), order)) out.push_back(s.coeffs);
          return out;
        },
        py::arg("kind"), py::arg("order") = 20);
  m.def("exp",
        [](const Element& x, std::size_t order) {
          return eval_series(solve_symmetric_system(SystemKind::Exp, order).front(), x);
        },
        py::arg("x"), py::arg("order") = 30);

  py::class_<IntegrabilityVerdict>(m, "Verdict")
      .def_readonly("certified", &IntegrabilityVerdict::certified)
      .def_readonly("max_residual", &IntegrabilityVerdict::max_residual)
      .def("__bool__", [](const IntegrabilityVerdict& v) { return v.certified; });

  m.def("integrate_path",
        [](const TensorPoly& form, const std::vector<py::object>& waypoints, std::size_t panels) {
          std::vector<Element> pts;
          for (const auto& w : waypoints) pts.push_back(element_from(form.algebra(), w));
          return integrate_along_path(FormP::from_tensor_poly(form), Path::polyline(pts), panels).value;
        },
        py::arg("form"), py::arg("waypoints"), py::arg("panels") = 4);
  m.def("check_integrable",
        [](const TensorPoly& form, std::size_t probes, std::uint64_t seed) {
          return check_integrable(FormP::from_tensor_poly(form), probes, seed);
        },
        py::arg("form"), py::arg("probes") = 32, py::arg("seed") = 42);
  m.def("poincare",
        [](const TensorPoly& form, const py::object& x) {
          return poincare_k(FormP::from_tensor_poly(form)).value(element_from(form.algebra(), x));
        },
        "k(omega) at x for a 1-form", py::arg("form"), py::arg("x"));

  m.def("classify",
        [](const NoncommPoly& f, std::size_t probes, std::uint64_t seed) {
          return to_string(classify(poly_map(f), probes, seed).kind);
        },
        py::arg("f"), py::arg("probes") = 20, py::arg("seed") = 42);
  m.def("integrate_complex",
        [](const NoncommPoly& a, const NoncommPoly& b, const py::object& z) {
          const Map f = integrate_complex_form(poly_map(a), poly_map(b));
          return f(element_from(a.algebra(), z));
        },
        py::arg("a"), py::arg("b"), py::arg("z"));

  m.def("path_dependence_gap",
        [](const py::object& a, const py::object& x) {
          const auto q = builtin_algebra("quaternion");
          return path_dependence(three_x_squared_form(q), element_from(q, a), element_from(q, x), false).gap;
        });
}
