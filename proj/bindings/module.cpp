#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "xxz/analysis.hpp"
#include "xxz/errors.hpp"
#include "xxz/metric.hpp"
#include "xxz/oracle.hpp"
#include "xxz/spec_io.hpp"

namespace py = pybind11;
using namespace xxz;

namespace {

// Group is shared_ptr<const FiniteGroup>; wrap it for python.
struct PyGroup {
  Group g;
};

py::object cast_spec(AnySpec spec) {
  return std::visit([](auto&& s) { return py::cast(std::move(s)); }, std::move(spec));
}

template <typename Spec>
py::dict verify_dict(const Spec& spec) {
  CommutationReport rep;
  size_t n_gens;
  if constexpr (std::is_same_v<Spec, CodeSpec>) {
    auto set = build_all_stabilizers(spec);
    n_gens = set.gens.size();
    rep = verify_commutation(set);
  } else {
    auto set = build_qudit_stabilizers(spec);
    n_gens = set.gens.size();
    rep = verify_commutation(set);
  }
  py::list violations;
  for (const auto& v : rep.violations)
    violations.append(py::make_tuple(v.gen_i, v.gen_j, v.value));
  py::dict out;
  out["generators"] = n_gens;
  out["pairs_checked"] = rep.total_pairs;
  out["cross_pairs"] = rep.cross_pairs_checked;
  out["violations"] = violations;
  out["ok"] = rep.ok();
  return out;
}

py::dict degeneracy_dict(const DegeneracyResult& r) {
  py::dict out;
  out["n_qubits"] = r.n_qubits;
  out["generators"] = r.n_generators;
  out["rank"] = r.rank;
  out["k"] = r.logical_count;
  out["d"] = r.d;
  return out;
}

template <typename Spec>
py::object locality_obj(const Spec& spec) {
  const auto r = locality_check(spec);
  if (!r.finite) return py::none();
  return py::int_(r.radius);
}

template <typename Spec>
py::object metric_obj(const Spec& spec, const std::string& from, const std::string& to) {
  const auto ms = metric_sets_from_spec(spec);
  const int d = word_metric(ms, resolve_element(*spec.group(), from),
                            resolve_element(*spec.group(), to));
  if (d == kInfiniteDistance) return py::none();
  return py::int_(d);
}

template <typename Spec>
std::vector<std::string> ball_names(const Spec& spec, const std::string& center,
                                    int radius) {
  const auto ms = metric_sets_from_spec(spec);
  std::vector<std::string> out;
  for (int i : ball(ms, resolve_element(*spec.group(), center), radius))
    out.push_back(spec.group()->name(i));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "stabilizer codes on finite groups with 2q qubits per site";

  py::register_exception<parse_error>(m, "ParseError");
  py::register_exception<validation_error>(m, "ValidationError");
  py::register_exception<analysis_error>(m, "AnalysisError");

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("order", [](const PyGroup& g) { return g.g->order(); })
      .def_property_readonly("identity",
                             [](const PyGroup& g) { return g.g->identity(); })
      .def_property_readonly("abelian",
                             [](const PyGroup& g) { return g.g->is_abelian(); })
      .def("mul", [](const PyGroup& g, int a, int b) { return g.g->mul(a, b); })
      .def("inv", [](const PyGroup& g, int a) { return g.g->inv(a); })
      .def("name", [](const PyGroup& g, int a) { return g.g->name(a); })
      .def("names", [](const PyGroup& g) { return g.g->names(); })
      .def("element",
           [](const PyGroup& g, const std::string& tok) {
             return resolve_element(*g.g, tok);
           })
      .def("element_order",
           [](const PyGroup& g, int a) { return g.g->element_order(a); });

  m.def("make_cyclic", [](int n) { return PyGroup{make_cyclic(n)}; }, py::arg("n"));
  m.def(
      "make_torus",
      [](int l, int mm, int n) { return PyGroup{make_torus(l, mm, n)}; },
      py::arg("l"), py::arg("m"), py::arg("n"));
  m.def("direct_product", [](const PyGroup& a, const PyGroup& b) {
    return PyGroup{direct_product(a.g, b.g)};
  });
  m.def(
      "from_cayley_table",
      [](std::vector<std::vector<int>> table, std::vector<std::string> names) {
        return PyGroup{from_cayley_table(std::move(table), std::move(names))};
      },
      py::arg("table"), py::arg("names") = std::vector<std::string>{});

  py::class_<CodeSpec>(m, "CodeSpec")
      .def_property_readonly("group", [](const CodeSpec& s) { return PyGroup{s.group()}; })
      .def_property_readonly("q", &CodeSpec::q)
      .def_property_readonly("d", [](const CodeSpec&) { return 2; })
      .def_property_readonly("n_qubits", &CodeSpec::n_qubits);

  py::class_<QuditCodeSpec>(m, "QuditCodeSpec")
      .def_property_readonly("group",
                             [](const QuditCodeSpec& s) { return PyGroup{s.group()}; })
      .def_property_readonly("q", &QuditCodeSpec::q)
      .def_property_readonly("d", &QuditCodeSpec::modulus)
      .def_property_readonly("n_qubits", &QuditCodeSpec::n_qudits);

  m.def(
      "load_spec",
      [](const std::string& source, std::optional<int> size, int n, int a, int b) {
        PresetParams p;
        if (size) p.size = *size;
        p.n = n;
        p.a = a;
        p.b = b;
        return cast_spec(load_spec(source, p, size));
      },
      py::arg("source"), py::arg("size") = std::nullopt, py::arg("n") = 6,
      py::arg("a") = 2, py::arg("b") = 4,
      "Load a preset (haah-a, haah-b, lr-gcd, trivial) or a spec file.");
  m.def("parse_spec_text",
        [](const std::string& text) { return cast_spec(parse_spec_text(text)); });
  m.def("serialize_spec", [](const CodeSpec& s) { return serialize_spec(AnySpec(s)); });
  m.def("serialize_spec",
        [](const QuditCodeSpec& s) { return serialize_spec(AnySpec(s)); });
  m.def("to_qudit_spec", &to_qudit_spec, py::arg("spec"), py::arg("d"));

  m.def("verify", &verify_dict<CodeSpec>);
  m.def("verify", &verify_dict<QuditCodeSpec>);
  m.def("degeneracy",
        [](const CodeSpec& s) { return degeneracy_dict(logical_qubit_count(s)); });
  m.def("degeneracy",
        [](const QuditCodeSpec& s) { return degeneracy_dict(logical_qubit_count(s)); });
  m.def("locality", &locality_obj<CodeSpec>);
  m.def("locality", &locality_obj<QuditCodeSpec>);
  m.def("word_metric", &metric_obj<CodeSpec>, py::arg("spec"), py::arg("from_"),
        py::arg("to"));
  m.def("word_metric", &metric_obj<QuditCodeSpec>, py::arg("spec"), py::arg("from_"),
        py::arg("to"));
  m.def("ball", &ball_names<CodeSpec>, py::arg("spec"), py::arg("center"),
        py::arg("radius"));
  m.def("ball", &ball_names<QuditCodeSpec>, py::arg("spec"), py::arg("center"),
        py::arg("radius"));
  m.def("ground_space_dim", [](const CodeSpec& s) {
    return ground_space_dim_dense(build_all_stabilizers(s));
  });
  m.def("ground_space_dim", [](const QuditCodeSpec& s) {
    return ground_space_dim_dense(build_qudit_stabilizers(s));
  });

  m.attr("__version__") = "0.1.0";
}
