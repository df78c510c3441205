#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <ternlog/expr.hpp>
#include <ternlog/netlist.hpp>
#include <ternlog/rewrite.hpp>
#include <ternlog/stdcells.hpp>
#include <ternlog/truth_table.hpp>

#include "test_util.hpp"

using namespace ternlog;

namespace {

int operator_gates(const netlist& n) {
  int count = 0;
  for (const auto& g : n.gates) {
    if (g.kind != gate_kind::input && g.kind != gate_kind::constant) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("lower emits a dense, dependency-ordered, hash-consed DAG") {
  const auto n = lower({{"out", parse("~x")}});
  REQUIRE(n.gates.size() == 2);
  CHECK(n.gates[0].kind == gate_kind::input);
  CHECK(n.gates[0].label == "x");
  CHECK(n.gates[1].kind == gate_kind::rot);
  CHECK(n.gates[1].operands == std::vector<std::uint32_t>{0});
  CHECK(n.outputs.at("out") == 1);
  CHECK_NOTHROW(validate(n));

  // The duplicated x*1 lowers to one ALPHA gate.
  const auto shared = lower({{"out", parse("x*1 @ x*1")}});
  CHECK(shared.gates.size() == 4);  // x, 1, ALPHA, GAMMA
  CHECK_NOTHROW(validate(shared));
}

TEST_CASE("lowering several outputs shares structure across them") {
  const auto carry = cell("THA_CARRY").expression;
  const auto sum = cell("THA_SUM").expression;
  const auto both = lower({{"carry", carry}, {"sum", sum}});
  CHECK_NOTHROW(validate(both));
  const auto carry_only = lower({{"carry", carry}});
  const auto sum_only = lower({{"sum", sum}});
  CHECK(both.gates.size() < carry_only.gates.size() + sum_only.gates.size());
  // Outputs can name the same gate.
  const auto twice = lower({{"a", parse("x*y")}, {"b", parse("x*y")}});
  CHECK(twice.outputs.at("a") == twice.outputs.at("b"));
  CHECK(emit_dot(twice).find("xlabel=\"a,b\"") != std::string::npos);
}

TEST_CASE("gate count of a lowered expression equals its cost") {
  std::mt19937 rng(112358);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    const auto e = testing::random_expr(rng, 5, vars);
    CHECK(operator_gates(lower({{"out", e}})) == cost(e));
  }
  for (const auto& c : std_cells()) {
    CHECK(operator_gates(lower({{"out", c.expression}})) == cost(c.expression));
  }
}

TEST_CASE("simulate runs the forward semantics") {
  const auto sti = lower({{"out", cell("STI").expression}});
  CHECK(simulate(sti, {{"x", trit(0)}}).at("out").value() == 2);
  CHECK(simulate(sti, {{"x", trit(1)}}).at("out").value() == 1);
  CHECK(simulate(sti, {{"x", trit(2)}}).at("out").value() == 0);

  const auto adder =
      lower({{"carry", cell("THA_CARRY").expression}, {"sum", cell("THA_SUM").expression}});
  const auto out = simulate(adder, {{"x", trit(2)}, {"y", trit(1)}});
  CHECK(out.at("carry").value() == 1);
  CHECK(out.at("sum").value() == 0);

  CHECK_THROWS_WITH_AS((void)simulate(sti, {}), doctest::Contains("missing input: x"),
                       netlist_error);
}

TEST_CASE("simulation agrees with evaluation everywhere") {
  std::mt19937 rng(314159);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 50; ++i) {
    const auto e = testing::random_expr(rng, 4, vars);
    const auto n = lower({{"out", e}});
    const auto order = free_vars(e);
    for (std::size_t row = 0; row < pow3(order.size()); ++row) {
      const auto inputs = decode_row(row, order.size());
      assignment env;
      for (std::size_t k = 0; k < order.size(); ++k) env.emplace(order[k], inputs[k]);
      CHECK(simulate(n, env).at("out") == evaluate(e, env));
    }
  }
}

TEST_CASE("emit_dot is deterministic and marks outputs") {
  const auto expected =
      "digraph netlist {\n"
      "  n0 [shape=plaintext, label=\"x\"];\n"
      "  n1 [shape=box, label=\"ROT\", xlabel=\"out\"];\n"
      "  n0 -> n1;\n"
      "}\n";
  CHECK(emit_dot(lower({{"out", parse("~x")}})) == expected);

  // Byte-stable across independent lowerings.
  const auto a = emit_dot(lower({{"out", cell("TNAND").expression}}));
  const auto b = emit_dot(lower({{"out", parse(pretty_print(cell("TNAND").expression))}}));
  CHECK(a == b);

  // Operator gates render with Greek letters.
  const auto dot = emit_dot(lower({{"out", parse("x*y+z@~x")}}));
  CHECK(dot.find("label=\"α\"") != std::string::npos);
  CHECK(dot.find("label=\"β\"") != std::string::npos);
  CHECK(dot.find("label=\"γ\"") != std::string::npos);

  CHECK(emit_dot(netlist{}) == "digraph netlist {\n}\n");
}

TEST_CASE("JSON round trips exactly") {
  const auto n =
      lower({{"carry", cell("THA_CARRY").expression}, {"sum", cell("THA_SUM").expression}});
  const auto text = emit_json(n);
  CHECK(text.back() == '\n');
  CHECK(parse_json(text) == n);
  CHECK(emit_json(parse_json(text)) == text);

  const auto empty = netlist{};
  CHECK(parse_json(emit_json(empty)) == empty);

  // Spot-check the schema spelling.
  CHECK(text.find("\"kind\": \"INPUT\"") != std::string::npos);
  CHECK(text.find("\"kind\": \"GAMMA\"") != std::string::npos);
  CHECK(text.find("\"outputs\"") != std::string::npos);
}

TEST_CASE("validate rejects malformed netlists with the offending field") {
  auto make = [](std::vector<gate> gates, std::map<std::string, std::uint32_t> outputs) {
    return netlist{std::move(gates), std::move(outputs)};
  };
  const gate input_x{0, gate_kind::input, {}, "x"};

  CHECK_THROWS_WITH_AS(validate(make({gate{1, gate_kind::input, {}, "x"}}, {})),
                       doctest::Contains("gates[0].id: expected 0, found 1"), netlist_error);
  CHECK_THROWS_WITH_AS(validate(make({gate{0, gate_kind::rot, {}, ""}}, {})),
                       doctest::Contains("ROT takes 1 operand"), netlist_error);
  CHECK_THROWS_WITH_AS(validate(make({gate{0, gate_kind::rot, {0}, ""}}, {})),
                       doctest::Contains("does not precede"), netlist_error);
  CHECK_THROWS_WITH_AS(validate(make({gate{0, gate_kind::input, {}, "9bad"}}, {{"o", 0}})),
                       doctest::Contains("invalid input name"), netlist_error);
  CHECK_THROWS_WITH_AS(validate(make({gate{0, gate_kind::constant, {}, "3"}}, {{"o", 0}})),
                       doctest::Contains("constant must be 0, 1 or 2"), netlist_error);
  CHECK_THROWS_WITH_AS(
      validate(make({input_x, gate{1, gate_kind::rot, {0}, "junk"}}, {{"o", 1}})),
      doctest::Contains("carry no label"), netlist_error);
  CHECK_THROWS_WITH_AS(
      validate(make({input_x, gate{1, gate_kind::input, {}, "x"}}, {{"a", 0}, {"b", 1}})),
      doctest::Contains("not hash-consed"), netlist_error);
  CHECK_THROWS_WITH_AS(validate(make({input_x}, {{"o", 5}})),
                       doctest::Contains("outputs[\"o\"]: unknown gate id 5"), netlist_error);
  CHECK_THROWS_WITH_AS(validate(make({input_x}, {})),
                       doctest::Contains("unreachable from any output"), netlist_error);
}

TEST_CASE("parse_json rejects schema violations with the offending path") {
  auto rejects = [](const std::string& text, const std::string& needle) {
    CHECK_THROWS_WITH_AS((void)parse_json(text), doctest::Contains(needle.c_str()),
                         netlist_error);
  };
  rejects("not json", "invalid JSON");
  rejects("[]", "$: expected an object");
  rejects(R"({"gates": [], "outputs": {}, "extra": 1})", "extra: unknown field");
  rejects(R"({"gates": {}, "outputs": {}})", "gates: expected an array");
  rejects(R"({"gates": []})", "outputs: expected an object");
  rejects(R"({"gates": [7], "outputs": {}})", "gates[0]: expected an object");
  rejects(R"({"gates": [{"id": 0, "kind": "INPUT", "operands": [], "label": "x", "oops": 1}],
              "outputs": {"o": 0}})",
          "gates[0].oops: unknown field");
  rejects(R"({"gates": [{"id": -1, "kind": "INPUT", "operands": [], "label": "x"}],
              "outputs": {}})",
          "gates[0].id: expected a non-negative integer");
  rejects(R"({"gates": [{"id": 0, "kind": "XOR", "operands": []}], "outputs": {}})",
          "gates[0].kind: unknown gate kind \"XOR\"");
  rejects(R"({"gates": [{"id": 0, "kind": "ROT", "operands": [-1]}], "outputs": {}})",
          "gates[0].operands[0]: expected a non-negative integer");
  rejects(R"({"gates": [{"id": 0, "kind": "INPUT", "operands": [], "label": 3}],
              "outputs": {}})",
          "gates[0].label: expected a string");
  rejects(R"({"gates": [{"id": 0, "kind": "INPUT", "operands": [], "label": "x"}],
              "outputs": {"o": "zero"}})",
          "outputs[\"o\"]: expected a non-negative integer");
  // Structural invariants are enforced after decoding.
  rejects(R"({"gates": [{"id": 1, "kind": "INPUT", "operands": [], "label": "x"}],
              "outputs": {}})",
          "gates[0].id: expected 0, found 1");
  rejects(R"({"gates": [{"id": 0, "kind": "INPUT", "operands": [], "label": "x"},
                         {"id": 1, "kind": "INPUT", "operands": [], "label": "x"}],
              "outputs": {"a": 0, "b": 1}})",
          "not hash-consed");
  rejects(R"({"gates": [{"id": 0, "kind": "INPUT", "operands": [], "label": "x"}],
              "outputs": {}})",
          "unreachable");
}

TEST_CASE("lower rejects null expressions") {
  CHECK_THROWS_WITH_AS((void)lower({{"out", nullptr}}), doctest::Contains("null expression"),
                       netlist_error);
}
