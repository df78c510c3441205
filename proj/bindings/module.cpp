#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <ternlog/expr.hpp>
#include <ternlog/laws.hpp>
#include <ternlog/netlist.hpp>
#include <ternlog/rewrite.hpp>
#include <ternlog/stdcells.hpp>
#include <ternlog/synth.hpp>
#include <ternlog/truth_table.hpp>

namespace py = pybind11;

namespace {

//! Thin value wrapper so Python never sees the shared-pointer plumbing.
struct py_expr {
  ternlog::expr_ptr ptr;
};

ternlog::assignment to_env(const std::map<std::string, int>& env) {
  ternlog::assignment out;
  for (const auto& [name, value] : env) out.insert_or_assign(name, ternlog::trit(value));
  return out;
}

std::map<std::string, ternlog::expr_ptr> to_outputs(const std::map<std::string, py_expr>& outs) {
  std::map<std::string, ternlog::expr_ptr> named;
  for (const auto& [name, e] : outs) named.emplace(name, e.ptr);
  return named;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "symmetric ternary logic toolkit: values 0/1/2, operators rotate/alpha/beta/gamma";

  m.def("rotate", [](int x) -> int { return ternlog::rotate(ternlog::trit(x)).value(); },
        py::arg("x"), "rotate a trit: 0->2, 1->0, 2->1");
  m.def("alpha", [](int x, int y) -> int {
          return ternlog::alpha(ternlog::trit(x), ternlog::trit(y)).value();
        },
        py::arg("x"), py::arg("y"), "minimum under the ordering 0 < 1 < 2 (infix *)");
  m.def("beta", [](int x, int y) -> int {
          return ternlog::beta(ternlog::trit(x), ternlog::trit(y)).value();
        },
        py::arg("x"), py::arg("y"), "minimum under the ordering 1 < 2 < 0 (infix +)");
  m.def("gamma", [](int x, int y) -> int {
          return ternlog::gamma(ternlog::trit(x), ternlog::trit(y)).value();
        },
        py::arg("x"), py::arg("y"), "minimum under the ordering 2 < 0 < 1 (infix @)");

  py::class_<py_expr>(m, "Expr", "immutable ternary expression")
      .def("__str__", [](const py_expr& e) { return ternlog::pretty_print(e.ptr); })
      .def("__repr__",
           [](const py_expr& e) { return "Expr(\"" + ternlog::pretty_print(e.ptr) + "\")"; })
      .def("evaluate",
           [](const py_expr& e, const std::map<std::string, int>& env) -> int {
             return ternlog::evaluate(e.ptr, to_env(env)).value();
           },
           py::arg("env"), "evaluate under a {name: trit} assignment")
      .def("free_vars",
           [](const py_expr& e) {
             const auto vars = ternlog::free_vars(e.ptr);
             return std::vector<std::string>(vars.begin(), vars.end());
           })
      .def("cost", [](const py_expr& e) { return ternlog::cost(e.ptr); },
           "operator nodes in the shared (hash-consed) form");

  m.def("parse", [](const std::string& text) { return py_expr{ternlog::parse(text)}; },
        py::arg("text"), "parse the concrete syntax (~ * + @, constants 0/1/2)");
  m.def("cost", [](const py_expr& e) { return ternlog::cost(e.ptr); }, py::arg("expr"));
  m.def("table", [](const py_expr& e) { return ternlog::table_of(e.ptr).to_compact(); },
        py::arg("expr"), "compact truth table over the sorted free variables");
  m.def("synthesize",
        [](const std::string& table_text) {
          return py_expr{ternlog::synthesize(ternlog::parse_table(table_text))};
        },
        py::arg("table_text"), "regular formula realizing a truth table (compact or row format)");
  m.def("simplify",
        [](const py_expr& e, int budget) { return py_expr{ternlog::simplify(e.ptr, budget)}; },
        py::arg("expr"), py::arg("budget") = 32, "rewrite toward lower cost");
  m.def("equivalent",
        [](const py_expr& a, const py_expr& b) {
          return ternlog::equivalent(a.ptr, b.ptr).equal();
        },
        py::arg("a"), py::arg("b"), "exhaustive equivalence over the union of free variables");
  m.def("counterexample",
        [](const py_expr& a,
           const py_expr& b) -> std::optional<std::tuple<std::map<std::string, int>, int, int>> {
          const ternlog::equivalence eq = ternlog::equivalent(a.ptr, b.ptr);
          if (eq.equal()) return std::nullopt;
          std::map<std::string, int> env;
          for (const auto& [name, value] : eq.mismatch->env) env.emplace(name, value.value());
          return std::make_tuple(std::move(env), int(eq.mismatch->lhs_value.value()),
                                 int(eq.mismatch->rhs_value.value()));
        },
        py::arg("a"), py::arg("b"),
        "None when equivalent, else (assignment, value of a, value of b) at the least row");

  m.def("to_dot",
        [](const std::map<std::string, py_expr>& outputs) {
          return ternlog::emit_dot(ternlog::lower(to_outputs(outputs)));
        },
        py::arg("outputs"), "lower {name: Expr} to a gate netlist in graph text form");
  m.def("to_json",
        [](const std::map<std::string, py_expr>& outputs) {
          return ternlog::emit_json(ternlog::lower(to_outputs(outputs)));
        },
        py::arg("outputs"), "lower {name: Expr} to a gate netlist in JSON form");
  m.def("simulate",
        [](const std::string& netlist_json, const std::map<std::string, int>& env) {
          const auto values = ternlog::simulate(ternlog::parse_json(netlist_json), to_env(env));
          std::map<std::string, int> out;
          for (const auto& [name, value] : values) out.emplace(name, value.value());
          return out;
        },
        py::arg("netlist_json"), py::arg("env"), "forward-simulate a JSON netlist");

  m.def("cells", [] {
    std::vector<std::string> names;
    for (const auto& c : ternlog::std_cells()) names.push_back(c.name);
    return names;
  });
  m.def("cell_table",
        [](const std::string& name) { return ternlog::cell(name).reference.to_compact(); },
        py::arg("name"));
  m.def("cell_expr", [](const std::string& name) { return py_expr{ternlog::cell(name).expression}; },
        py::arg("name"));

  m.def("verify_ok", [] {
    for (const auto& c : ternlog::verify_all())
      if (!c.passed) return false;
    for (const auto& l : ternlog::check_laws())
      if (!l.passed) return false;
    return true;
  });
  m.def("verify_report", [] {
    return ternlog::render_cell_checks(ternlog::verify_all()) +
           ternlog::render_laws(ternlog::check_laws());
  });
  m.def("census_ok", [] {
    const auto report = ternlog::monadic_census();
    return report.forms_match_reference && report.uncovered_are_permutations &&
           report.reconstructions_cover_uncovered && report.distinct.size() == 21 &&
           report.uncovered.size() == 6;
  });
  m.def("census_report", [] { return ternlog::render_census(ternlog::monadic_census()); });
}
