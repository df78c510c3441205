// Acceptance gate: ten criteria, one PASS/FAIL line each; the exit code is
// the number of failed criteria.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <ternlog/expr.hpp>
#include <ternlog/laws.hpp>
#include <ternlog/netlist.hpp>
#include <ternlog/rewrite.hpp>
#include <ternlog/stdcells.hpp>
#include <ternlog/synth.hpp>
#include <ternlog/trit.hpp>
#include <ternlog/truth_table.hpp>

#include "test_util.hpp"

using namespace ternlog;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << label << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

truth_table random_table(std::mt19937& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> digit(0, 2);
  std::vector<trit> outputs;
  outputs.reserve(pow3(vars.size()));
  for (std::size_t i = 0; i < pow3(vars.size()); ++i) outputs.emplace_back(digit(rng));
  return {vars, std::move(outputs)};
}

void criterion_1_laws() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = check_laws();
  bool ok = results.size() == 26;
  int held = 0;
  const law_result* refuted = nullptr;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (r.item.should_hold) {
      ++held;
    } else {
      ok = ok && refuted == nullptr;
      refuted = &r;
    }
  }
  ok = ok && held == 25 && refuted != nullptr && refuted->check.mismatch.has_value();
  if (ok) {
    const counterexample& cex = *refuted->check.mismatch;
    ok = cex.env == assignment{{"x", trit(2)}, {"y", trit(0)}, {"z", trit(1)}} &&
         cex.lhs_value == trit(2) && cex.rhs_value == trit(1);
  }
  ok = ok && seconds_since(start) < 1.0;
  report(1, "25 identities hold, the reversed distributivity is refuted, in under 1s", ok);
}

void criterion_2_tables() {
  bool ok = true;
  const int rot_expected[3] = {2, 0, 1};
  const int alpha_expected[3][3] = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  const int beta_expected[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
  const int gamma_expected[3][3] = {{0, 0, 2}, {0, 1, 2}, {2, 2, 2}};
  for (int x = 0; x < 3; ++x) {
    ok = ok && rotate(trit(x)).value() == rot_expected[x];
    for (int y = 0; y < 3; ++y) {
      ok = ok && alpha(trit(x), trit(y)).value() == alpha_expected[x][y];
      ok = ok && beta(trit(x), trit(y)).value() == beta_expected[x][y];
      ok = ok && gamma(trit(x), trit(y)).value() == gamma_expected[x][y];
    }
  }
  const int perm_expected[6][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0},
                                   {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const auto ops = all_perm_ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (int x = 0; x < 3; ++x) {
      ok = ok && apply_perm(ops[i], trit(x)).value() == perm_expected[i][x];
    }
  }
  report(2, "operator and permutation tables are bit-exact", ok);
}

void criterion_3_synthesis() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int code = 0; code < 27; ++code) {
    const truth_table t({"x"}, {trit(code / 9), trit(code / 3 % 3), trit(code % 3)});
    ok = ok && table_of(synthesize(t), {"x"}) == t;
  }
  std::mt19937 rng(20260814);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_table(rng, {"x", "y"});
    ok = ok && table_of(synthesize(t), t.var_names()) == t;
  }
  for (int i = 0; i < 50; ++i) {
    const auto t = random_table(rng, {"a", "b", "c"});
    ok = ok && table_of(synthesize(t), t.var_names()) == t;
  }
  ok = ok && seconds_since(start) < 5.0;
  report(3, "synthesis reproduces 27 monadic, 200 dyadic and 50 triadic tables in under 5s", ok);
}

void criterion_4_reconstructions() {
  const std::pair<perm_op, const char*> rebuilt[6] = {
      {perm_op::identity, "x*1 @ ~~x*1+2"},
      {perm_op::rotate, "~x*1 @ x*1+2"},
      {perm_op::rotate2, "~~x*1 @ ~x*1+2"},
      {perm_op::reverse, "x*1 @ ~x*1+2"},
      {perm_op::rotate_reverse, "~~x*1 @ x*1+2"},
      {perm_op::rotate2_reverse, "~x*1 @ ~~x*1+2"},
  };
  bool ok = true;
  for (const auto& [op, text] : rebuilt) {
    const auto form = parse(text);
    for (int v = 0; v < 3; ++v) {
      ok = ok && evaluate(form, {{"x", trit(v)}}) == apply_perm(op, trit(v));
    }
  }
  report(4, "the six bijections are rebuilt exactly by their selector forms", ok);
}

void criterion_5_cells() {
  // Cost of each derived form, frozen; cross-checked against the live value.
  const std::map<std::string, int> frozen_costs{
      {"STI", 6},  {"NTI", 7},  {"PTI", 7},        {"TNAND", 11},
      {"TNOR", 11}, {"THA_CARRY", 8}, {"THA_SUM", 12},
  };
  bool ok = true;
  for (const auto& [name, frozen] : frozen_costs) {
    const std_cell* c = find_cell(name);
    if (c == nullptr) {
      ok = false;
      continue;
    }
    ok = ok && table_of(c->expression, c->reference.var_names()) == c->reference;
    const auto synth = synthesize(c->reference);
    ok = ok && equivalent(synth, c->expression).equal();
    const auto reduced = simplify(synth);
    ok = ok && equivalent(reduced, c->expression).equal();
    ok = ok && cost(c->expression) == frozen;
    ok = ok && cost(reduced) <= cost(c->expression);
  }
  report(5, "each derived cell matches its table, its synthesis, and its frozen cost bound", ok);
}

void criterion_6_lemma() {
  bool ok = equivalent(parse("x*1 @ ~x*1 @ ~~x*1"), parse("0")).equal();
  ok = ok && pretty_print(simplify(parse("x*1 @ ~x*1 @ ~~x*1"))) == "0";
  ok = ok && equivalent(parse("y*1 @ ~y*1 @ ~~y*1"), parse("0")).equal();
  report(6, "the three selector filters of one variable jointly reject every input", ok);
}

void criterion_7_census() {
  const auto r = monadic_census();
  bool ok = r.forms.size() == 27 && r.forms_match_reference && r.distinct.size() == 21 &&
            r.uncovered.size() == 6 && r.uncovered_are_permutations &&
            r.reconstructions_cover_uncovered;
  // Disjoint union: distinct + uncovered = all 27 monadic functions.
  std::set<std::vector<trit>> all(r.distinct.begin(), r.distinct.end());
  for (const auto& t : r.uncovered) ok = ok && all.insert(t).second;
  ok = ok && all.size() == 27;
  report(7, "the census covers 21 functions; the 6 missing ones are the bijections", ok);
}

void criterion_8_alternates() {
  const bool ok = equivalent(cell("NTI").expression, parse("~x@0")).equal() &&
                  equivalent(cell("PTI").expression, parse("(~x+2)@0")).equal();
  report(8, "the inverter alternates ~x@0 and (~x+2)@0 match NTI and PTI", ok);
}

void criterion_9_binary_restriction() {
  bool ok = true;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      ok = ok && alpha(trit(x), trit(y)).value() == (x && y ? 1 : 0);
      ok = ok && beta(trit(x), trit(y)).value() == (x || y ? 1 : 0);
    }
  }
  report(9, "alpha and beta restrict to boolean AND and OR on {0, 1}", ok);
}

void criterion_10_round_trips() {
  bool ok = true;
  std::mt19937 rng(424242);
  const std::vector<std::string> vars{"x", "y", "z"};

  // Parse/pretty round trip over 1000 random trees.
  for (int i = 0; i < 1000; ++i) {
    const auto e = testing::random_expr(rng, 6, vars);
    ok = ok && struct_equal(parse(pretty_print(e)), e);
  }

  // Netlist JSON round trip.
  const auto adder =
      lower({{"carry", cell("THA_CARRY").expression}, {"sum", cell("THA_SUM").expression}});
  ok = ok && parse_json(emit_json(adder)) == adder;
  for (int i = 0; i < 20; ++i) {
    const auto n = lower({{"out", testing::random_expr(rng, 5, vars)}});
    ok = ok && parse_json(emit_json(n)) == n;
  }

  // Simulation agrees with evaluation: every cell exhaustively...
  for (const auto& c : std_cells()) {
    const auto n = lower({{"out", c.expression}});
    const auto& order = c.reference.var_names();
    for (std::size_t row = 0; row < pow3(order.size()); ++row) {
      const auto inputs = decode_row(row, order.size());
      assignment env;
      for (std::size_t k = 0; k < order.size(); ++k) env.emplace(order[k], inputs[k]);
      ok = ok && simulate(n, env).at("out") == evaluate(c.expression, env);
    }
  }
  // ...plus 200 random expressions of arity at most 3, exhaustively.
  for (int i = 0; i < 200; ++i) {
    const auto e = testing::random_expr(rng, 4, vars);
    const auto n = lower({{"out", e}});
    const auto order = free_vars(e);
    for (std::size_t row = 0; row < pow3(order.size()); ++row) {
      const auto inputs = decode_row(row, order.size());
      assignment env;
      for (std::size_t k = 0; k < order.size(); ++k) env.emplace(order[k], inputs[k]);
      ok = ok && simulate(n, env).at("out") == evaluate(e, env);
    }
  }

  // Graph text is byte-stable across independent lowerings.
  const auto dot_a = emit_dot(lower({{"out", cell("TNAND").expression}}));
  const auto dot_b =
      emit_dot(lower({{"out", parse(pretty_print(cell("TNAND").expression))}}));
  ok = ok && dot_a == dot_b && !dot_a.empty();

  report(10, "parse/pretty, JSON, simulation and graph text all round trip", ok);
}

}  // namespace

int main() {
  criterion_1_laws();
  criterion_2_tables();
  criterion_3_synthesis();
  criterion_4_reconstructions();
  criterion_5_cells();
  criterion_6_lemma();
  criterion_7_census();
  criterion_8_alternates();
  criterion_9_binary_restriction();
  criterion_10_round_trips();
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criteria failed\n";
  }
  return failures;
}
