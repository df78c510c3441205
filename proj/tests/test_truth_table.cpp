#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <ternlog/expr.hpp>
#include <ternlog/truth_table.hpp>

#include "test_util.hpp"

using namespace ternlog;

TEST_CASE("row encoding: first variable is the most significant digit") {
  CHECK(decode_row(0, 2) == std::vector<trit>{trit(0), trit(0)});
  CHECK(decode_row(5, 2) == std::vector<trit>{trit(1), trit(2)});
  CHECK(decode_row(7, 2) == std::vector<trit>{trit(2), trit(1)});
  CHECK(decode_row(26, 3) == std::vector<trit>{trit(2), trit(2), trit(2)});
  for (std::size_t row = 0; row < 27; ++row) {
    CHECK(encode_row(decode_row(row, 3)) == row);
  }
  CHECK(decode_row(0, 0).empty());
  CHECK(encode_row({}) == 0);
}

TEST_CASE("truth_table construction validates its shape") {
  CHECK_NOTHROW(truth_table({"x"}, {trit(2), trit(0), trit(1)}));
  CHECK_NOTHROW(truth_table({}, {trit(1)}));  // nullary: one row
  CHECK_THROWS_AS(truth_table({"x"}, {trit(0)}), table_error);
  CHECK_THROWS_AS(truth_table({"x", "x"}, std::vector<trit>(9, trit(0))), table_error);
  CHECK_THROWS_AS(truth_table({"x", "9bad"}, std::vector<trit>(9, trit(0))), table_error);
}

TEST_CASE("table_of evaluates over the canonical row order") {
  const auto t = table_of(parse("~x"));
  CHECK(t.var_names() == std::vector<std::string>{"x"});
  CHECK(t.to_compact() == "vars: x\n201");

  // x is the most significant input: the first nine rows of x*y+z have x=0.
  const auto d = table_of(parse("x@y"), {"x", "y"});
  CHECK(d.output(encode_row({trit(0), trit(2)})).value() == 2);
  CHECK(d.output(encode_row({trit(2), trit(0)})).value() == 2);
  CHECK(d.output(encode_row({trit(1), trit(1)})).value() == 1);

  // Extra variables widen the table without changing the function.
  const auto wide = table_of(parse("~x"), {"x", "pad"});
  CHECK(wide.arity() == 2);
  for (std::size_t row = 0; row < 9; ++row) {
    CHECK(wide.output(row) == rotate(decode_row(row, 2)[0]));
  }

  // The variable order must cover the free variables.
  CHECK_THROWS_AS(table_of(parse("x*y"), std::vector<std::string>{"x"}), table_error);
}

TEST_CASE("the arity cap guards exhaustive work") {
  std::vector<std::string> names;
  for (char c = 'a'; c < 'a' + 13; ++c) names.emplace_back(1, c);
  expr_ptr e = variable(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) e = alpha(e, variable(names[i]));
  CHECK_THROWS_AS(table_of(e), table_error);
  CHECK_NOTHROW(table_of(e, 13));  // raising the cap unblocks it
}

TEST_CASE("compact format round trips") {
  const auto t = table_of(parse("x*y+~y"), {"x", "y"});
  const auto back = parse_table(t.to_compact());
  CHECK(back == t);
  CHECK(parse_table("vars: x\n210").to_compact() == "vars: x\n210");
  // Nullary table: empty variable list, one digit.
  const auto n = parse_table("vars:\n2");
  CHECK(n.arity() == 0);
  CHECK(n.output(0).value() == 2);
}

TEST_CASE("row format lists one assignment per line in any order") {
  const auto t = parse_table(
      "vars: x y\n"
      "0 0 -> 0\n0 1 -> 0\n0 2 -> 0\n"
      "2 0 -> 0\n2 1 -> 1\n2 2 -> 2\n"
      "1 0 -> 0\n1 1 -> 1\n1 2 -> 1\n");
  CHECK(t == table_of(parse("x*y"), {"x", "y"}));
}

TEST_CASE("parse_table rejects malformed input with specific messages") {
  CHECK_THROWS_WITH_AS(parse_table(""), doctest::Contains("empty table"), table_error);
  CHECK_THROWS_WITH_AS(parse_table("vars: x\n21"), doctest::Contains("3"), table_error);
  CHECK_THROWS_WITH_AS(parse_table("vars: x\n213"), doctest::Contains("digit"), table_error);
  CHECK_THROWS_AS(parse_table("vars: x y\n0 0 -> 0"), table_error);  // missing rows
  CHECK_THROWS_AS(parse_table("vars: x\n0 -> 0\n1 -> 1\n2 -> 2\n2 -> 2"), table_error);
  CHECK_THROWS_AS(parse_table("vars: x\n0 -> 0\n1 -> 1\n1 -> 1"), table_error);  // duplicate
  CHECK_THROWS_AS(parse_table("vars: x x\n201"), table_error);
}

TEST_CASE("equivalent compares over the union of free variables") {
  CHECK(equivalent(parse("x*y"), parse("y*x")).equal());
  CHECK(equivalent(parse("x"), parse("x*1 @ ~~x*1+2")).equal());

  // Different variable sets: the union {x, y} is exhausted.
  const auto eq = equivalent(parse("x"), parse("x*y"));
  REQUIRE_FALSE(eq.equal());
  REQUIRE(eq.mismatch.has_value());
  // Least failing row: x=0 y=0 gives 0 vs 0 (fine)... the first mismatch is x=1 y=0.
  const auto& cex = *eq.mismatch;
  CHECK(cex.env == assignment{{"x", trit(1)}, {"y", trit(0)}});
  CHECK(cex.lhs_value.value() == 1);
  CHECK(cex.rhs_value.value() == 0);
}

TEST_CASE("the refuted distributivity direction yields the canonical witness") {
  const auto eq = equivalent(parse("x+(y*z)"), parse("(x+y)*(x+z)"));
  REQUIRE_FALSE(eq.equal());
  const auto& cex = *eq.mismatch;
  CHECK(cex.env == assignment{{"x", trit(2)}, {"y", trit(0)}, {"z", trit(1)}});
  CHECK(cex.lhs_value.value() == 2);
  CHECK(cex.rhs_value.value() == 1);
}

TEST_CASE("random expressions agree with their own tables") {
  std::mt19937 rng(97531);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    const auto e = testing::random_expr(rng, 5, vars);
    const auto order = free_vars(e);
    const auto t = table_of(e);
    REQUIRE(t.var_names() == order);
    for (std::size_t row = 0; row < t.outputs().size(); ++row) {
      const auto inputs = decode_row(row, order.size());
      assignment env;
      for (std::size_t k = 0; k < order.size(); ++k) env.emplace(order[k], inputs[k]);
      CHECK(evaluate(e, env) == t.output(row));
    }
  }
}
