#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkage/dsl.hpp"
#include "linkage/polyparse.hpp"

namespace py = pybind11;
using namespace linkage;

namespace {

Field field_of(const std::string& name) {
  if (name == "QQ") return Field::rationals();
  if (name.rfind("ZZ/", 0) == 0) return Field::prime(static_cast<std::uint32_t>(std::stoul(name.substr(3))));
  throw StructuralError("unknown field '" + name + "'; use QQ or ZZ/p");
}

std::vector<Poly> polys(const GradedRing& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(r.field(), r.variables(), t));
  return out;
}

GradedRing make(const std::string& field, const std::vector<std::string>& vars,
                const std::vector<std::string>& relations) {
  GradedRing s = make_ring(field_of(field), vars, {});
  return relations.empty() ? s : quotient_ring(s, polys(s, relations));
}

ModulePresentation coker(const GradedRing& r, std::vector<int> twists,
                         const std::vector<std::vector<std::string>>& rows) {
  if (rows.size() != twists.size()) throw StructuralError("one matrix row per generator twist is required");
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw StructuralError("matrix rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = r.reduce(parse_poly(r.field(), r.variables(), rows[i][j]));
  }
  return ModulePresentation::from_matrix(r, std::move(twists), m);
}

py::object optional_bool(const BoundedVerdict& v) {
  if (v.holds()) return py::bool_(true);
  if (v.failed()) return py::bool_(false);
  return py::none();
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict run_script(const std::string& source, int bound, bool strict, std::uint64_t seed,
                    const std::string& probe_primes) {
  dsl::RunConfig cfg;
  cfg.bound = bound;
  cfg.strict = strict;
  cfg.seed = seed;
  cfg.probe_primes = probe_primes;
  dsl::Script script = dsl::parse(source);
  dsl::RunResult r = dsl::execute(script, cfg);
  py::dict out;
  out["exit_code"] = dsl::exit_code(r, strict);
  out["report"] = py::module_::import("json").attr("loads")(dsl::report_json(r));
  out["json"] = dsl::report_json(r);
  out["text"] = r.text;
  return out;
}

py::dict check_theorem(const std::string& id, const ModulePresentation* m, const ModulePresentation* c, int n,
                       const std::vector<std::string>& ideal, int bound) {
  auto tid = theorem_from_name(id);
  if (!tid) throw StructuralError("unknown theorem id '" + id + "'");
  Bindings b;
  if (m) {
    b.m = *m;
    b.ring = m->ring();
  }
  if (c) {
    b.c = *c;
    b.ring = c->ring();
  }
  b.n = n;
  if (!ideal.empty()) {
    if (!b.ring) throw StructuralError("an ideal binding needs a module to fix the ring");
    b.ideal = polys(*b.ring, ideal);
  }
  HarnessConfig cfg;
  cfg.bound = bound;
  return json_to_py(dsl::report_to_json(check(*tid, b, cfg)));
}

}  // namespace

PYBIND11_MODULE(_linkage, m) {
  m.doc() = "Graded modules, linkage and theorem checks over quotients of polynomial rings";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<Inapplicable>(m, "Inapplicable", PyExc_ValueError);
  py::register_exception<ParseError>(m, "PolyParseError", PyExc_ValueError);
  static py::exception<dsl::DslError> dsl_error(m, "ScriptError", PyExc_SyntaxError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dsl::DslError& e) {
      py::object err = py::reinterpret_borrow<py::object>(dsl_error.ptr())(e.what());
      err.attr("line") = e.pos().line;
      err.attr("column") = e.pos().col;
      err.attr("expected") = e.expected();
      PyErr_SetObject(dsl_error.ptr(), err.ptr());
    }
  });

  py::class_<GradedRing>(m, "Ring")
      .def(py::init(&make), py::arg("field"), py::arg("variables"), py::arg("relations") = std::vector<std::string>{})
      .def_property_readonly("variables", &GradedRing::variables)
      .def_property_readonly("dim", [](const GradedRing& r) { return r.invariants().dim; })
      .def_property_readonly("depth", [](const GradedRing& r) { return r.invariants().depth; })
      .def_property_readonly("is_cohen_macaulay", [](const GradedRing& r) { return r.invariants().cohen_macaulay; })
      .def_property_readonly("is_gorenstein", [](const GradedRing& r) { return r.invariants().gorenstein; })
      .def("quotient", [](const GradedRing& r, const std::vector<std::string>& rel) { return quotient_ring(r, polys(r, rel)); })
      .def("__eq__", &GradedRing::operator==)
      .def("__repr__", [](const GradedRing& r) { return "Ring(" + r.describe() + ")"; });

  py::class_<ModulePresentation>(m, "Module")
      .def_static("coker", &coker, py::arg("ring"), py::arg("twists"), py::arg("matrix"))
      .def_static(
          "cyclic",
          [](const GradedRing& r, const std::vector<std::string>& ideal, int twist) {
            return ModulePresentation::cyclic(r, polys(r, ideal), twist);
          },
          py::arg("ring"), py::arg("ideal"), py::arg("twist") = 0)
      .def_static("free", &ModulePresentation::free, py::arg("ring"), py::arg("twists"))
      .def_property_readonly("ring", &ModulePresentation::ring)
      .def_property_readonly("gen_twists", &ModulePresentation::gen_twists)
      .def_property_readonly("rel_twists", &ModulePresentation::rel_twists)
      .def_property_readonly("num_gens", &ModulePresentation::num_gens)
      .def("is_zero", &ModulePresentation::is_zero)
      .def("minimalize", [](const ModulePresentation& x) { return minimalize(x); })
      .def("to_json", [](const ModulePresentation& x) { return json_to_py(dsl::module_to_json(x)); })
      .def("__repr__", &ModulePresentation::to_string);

  m.def("depth", [](const ModulePresentation& x) -> py::object {
    const int d = depth(x);
    if (d == kInfiniteDepth) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(d);
  });
  m.def("dim", &krull_dim);
  m.def("betti", [](const ModulePresentation& x, std::size_t length) { return betti(x, length).entries; },
        py::arg("module"), py::arg("length"), "Per homological degree, (internal degree, rank) pairs");
  m.def(
      "hilbert_series",
      [](const ModulePresentation& x) {
        HilbertSeries h = x.hilbert_series().reduced();
        return py::make_tuple(h.numerator.low(), h.numerator.coefficients(), h.denominator_power);
      },
      "(low, coefficients, d) for sum c_i t^(low+i) / (1-t)^d in lowest terms");
  m.def("local_cohomology_degrees", &local_cohomology_degrees);
  m.def("syzygy", &syzygy, py::arg("module"), py::arg("n"));
  m.def("transpose", [](const ModulePresentation& x) { return minimalize(transpose(x)); });
  m.def("link", [](const ModulePresentation& x) { return linkage::link(x); }, "lambda(M) = Omega Tr M");
  m.def("is_stable", [](const ModulePresentation& x) { return is_stable(x).stable; });
  m.def("is_horizontally_linked", [](const ModulePresentation& x) { return is_horizontally_linked(x).verdict; });
  m.def("is_isomorphic", [](const ModulePresentation& a, const ModulePresentation& b) -> py::object {
    IsoVerdict v = is_isomorphic(a, b);
    if (!v.resolved()) return py::none();
    return py::bool_(v.isomorphic());
  });
  m.def("canonical_module", &canonical_module);
  m.def("in_auslander_class",
        [](const ModulePresentation& x, const ModulePresentation& c, int bound) {
          return optional_bool(in_auslander_class(x, c, bound));
        },
        py::arg("module"), py::arg("c"), py::arg("bound") = -1);

  m.def("theorem_ids", [] {
    std::vector<std::string> out;
    for (TheoremId id : all_theorem_ids()) out.emplace_back(theorem_name(id));
    return out;
  });
  m.def("check", &check_theorem, py::arg("theorem"), py::arg("m") = nullptr, py::arg("c") = nullptr,
        py::arg("n") = 1, py::arg("ideal") = std::vector<std::string>{}, py::arg("bound") = -1,
        "Runs one theorem check and returns the report as a dict");

  m.def("parse_script", [](const std::string& src) { return dsl::pretty_print(dsl::parse(src)); },
        "Parses a script and returns its canonical text");
  m.def("run_script", &run_script, py::arg("source"), py::arg("bound") = -1, py::arg("strict") = false,
        py::arg("seed") = 0x5eed, py::arg("probe_primes") = "");
  m.attr("__version__") = dsl::kVersion;
}
