#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ternlog/expr.hpp>
#include <ternlog/laws.hpp>
#include <ternlog/netlist.hpp>
#include <ternlog/rewrite.hpp>
#include <ternlog/stdcells.hpp>
#include <ternlog/synth.hpp>
#include <ternlog/truth_table.hpp>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

//! Expression arguments may point at a file with the @path prefix.
std::string expr_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

char digit(ternlog::trit t) { return static_cast<char>('0' + t.value()); }

ternlog::assignment parse_bindings(const std::vector<std::string>& sets) {
  ternlog::assignment env;
  for (const std::string& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 != s.size() - 1)
      throw std::runtime_error("bad binding (expected name=value with value 0, 1 or 2): " + s);
    const char value = s[eq + 1];
    if (value < '0' || value > '2')
      throw std::runtime_error("bad binding value (expected 0, 1 or 2): " + s);
    env.insert_or_assign(s.substr(0, eq), ternlog::trit(value - '0'));
  }
  return env;
}

std::map<std::string, ternlog::expr_ptr> parse_outputs(const std::vector<std::string>& items) {
  std::map<std::string, ternlog::expr_ptr> named;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::runtime_error("bad output (expected name=expr): " + item);
    std::string name = item.substr(0, eq);
    if (named.count(name) != 0) throw std::runtime_error("duplicate output name: " + name);
    named.emplace(std::move(name), ternlog::parse(expr_arg(item.substr(eq + 1))));
  }
  return named;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric ternary logic toolkit: values 0/1/2, operators ~ (rotate), * + @"};
  app.require_subcommand(1);

  std::string eval_expr;
  std::vector<std::string> eval_sets;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression to one trit");
  eval_cmd->add_option("expr", eval_expr, "expression (or @file)")->required();
  eval_cmd->add_option("--set", eval_sets, "variable binding name=value (repeatable)");

  std::string table_expr;
  std::size_t table_max_arity = ternlog::default_max_arity;
  CLI::App* table_cmd = app.add_subcommand("table", "print an expression's truth table");
  table_cmd->add_option("expr", table_expr, "expression (or @file)")->required();
  table_cmd->add_option("--max-arity", table_max_arity, "arity cap for exhaustive enumeration");

  std::string synth_path;
  bool synth_simplify = false;
  int synth_budget = 32;
  CLI::App* synth_cmd = app.add_subcommand("synth", "synthesize an expression from a table file");
  synth_cmd->add_option("table-file", synth_path, "truth table file")->required();
  synth_cmd->add_flag("--simplify", synth_simplify, "simplify the synthesized expression");
  synth_cmd->add_option("--budget", synth_budget, "rewrite pass budget");

  std::string simp_expr;
  bool simp_trace = false;
  int simp_budget = 32;
  CLI::App* simp_cmd = app.add_subcommand("simplify", "rewrite an expression to lower cost");
  simp_cmd->add_option("expr", simp_expr, "expression (or @file)")->required();
  simp_cmd->add_flag("--trace", simp_trace, "print each applied rule with subterm costs");
  simp_cmd->add_option("--budget", simp_budget, "rewrite pass budget");

  std::string equiv_a;
  std::string equiv_b;
  std::size_t equiv_max_arity = ternlog::default_max_arity;
  CLI::App* equiv_cmd =
      app.add_subcommand("equiv", "check two expressions for exhaustive equivalence");
  equiv_cmd->add_option("a", equiv_a, "first expression (or @file)")->required();
  equiv_cmd->add_option("b", equiv_b, "second expression (or @file)")->required();
  equiv_cmd->add_option("--max-arity", equiv_max_arity, "arity cap for exhaustive enumeration");

  std::vector<std::string> dot_items;
  CLI::App* dot_cmd = app.add_subcommand("dot", "emit a gate netlist as graph text");
  dot_cmd->add_option("outputs", dot_items, "named outputs, each name=expr");

  std::vector<std::string> json_items;
  CLI::App* json_cmd = app.add_subcommand("json", "emit a gate netlist as JSON");
  json_cmd->add_option("outputs", json_items, "named outputs, each name=expr");

  std::string cell_name;
  bool cell_table = false;
  bool cell_expr = false;
  bool cell_dot = false;
  CLI::App* cell_cmd = app.add_subcommand("stdcell", "dump a library cell");
  cell_cmd->add_option("name", cell_name, "cell name (e.g. STI, TNAND, THA_SUM)")->required();
  CLI::Option* opt_table = cell_cmd->add_flag("--table", cell_table, "print the truth table only");
  CLI::Option* opt_expr = cell_cmd->add_flag("--expr", cell_expr, "print the expression only");
  CLI::Option* opt_dot = cell_cmd->add_flag("--dot", cell_dot, "print the netlist graph only");
  opt_table->excludes(opt_expr)->excludes(opt_dot);
  opt_expr->excludes(opt_dot);

  CLI::App* census_cmd = app.add_subcommand("census", "report one-variable coverage of composed forms");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the cell checks and the law suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      const ternlog::trit value =
          ternlog::evaluate(ternlog::parse(expr_arg(eval_expr)), parse_bindings(eval_sets));
      std::cout << digit(value) << '\n';
    } else if (table_cmd->parsed()) {
      std::cout << ternlog::table_of(ternlog::parse(expr_arg(table_expr)), table_max_arity)
                       .to_compact()
                << '\n';
    } else if (synth_cmd->parsed()) {
      ternlog::expr_ptr e = ternlog::synthesize(ternlog::parse_table(read_file(synth_path)));
      if (synth_simplify) e = ternlog::simplify(e, synth_budget);
      std::cout << ternlog::pretty_print(e) << '\n';
    } else if (simp_cmd->parsed()) {
      std::vector<ternlog::trace_entry> trace;
      const ternlog::expr_ptr result = ternlog::simplify(
          ternlog::parse(expr_arg(simp_expr)), simp_budget, simp_trace ? &trace : nullptr);
      for (const ternlog::trace_entry& t : trace)
        std::cout << t.rule << ' ' << t.cost_before << " -> " << t.cost_after << '\n';
      std::cout << ternlog::pretty_print(result) << '\n';
    } else if (equiv_cmd->parsed()) {
      const ternlog::equivalence eq = ternlog::equivalent(
          ternlog::parse(expr_arg(equiv_a)), ternlog::parse(expr_arg(equiv_b)), equiv_max_arity);
      if (eq.equal()) {
        std::cout << "EQUAL\n";
      } else {
        const ternlog::counterexample& cex = *eq.mismatch;
        for (const auto& [name, value] : cex.env) std::cout << name << '=' << digit(value) << ' ';
        std::cout << ": a=" << digit(cex.lhs_value) << " b=" << digit(cex.rhs_value) << '\n';
        return 1;
      }
    } else if (dot_cmd->parsed()) {
      std::cout << ternlog::emit_dot(ternlog::lower(parse_outputs(dot_items)));
    } else if (json_cmd->parsed()) {
      std::cout << ternlog::emit_json(ternlog::lower(parse_outputs(json_items)));
    } else if (cell_cmd->parsed()) {
      const ternlog::std_cell& c = ternlog::cell(cell_name);
      if (cell_table) {
        std::cout << c.reference.to_compact() << '\n';
      } else if (cell_expr) {
        std::cout << ternlog::pretty_print(c.expression) << '\n';
      } else if (cell_dot) {
        std::cout << ternlog::emit_dot(ternlog::lower({{"out", c.expression}}));
      } else {
        std::cout << "cell: " << c.name << '\n'
                  << c.reference.to_compact() << '\n'
                  << "expr: " << ternlog::pretty_print(c.expression) << '\n'
                  << "cost: " << ternlog::cost(c.expression) << '\n';
      }
    } else if (census_cmd->parsed()) {
      const ternlog::census_report report = ternlog::monadic_census();
      std::cout << ternlog::render_census(report);
      const bool ok = report.forms_match_reference && report.uncovered_are_permutations &&
                      report.reconstructions_cover_uncovered && report.distinct.size() == 21 &&
                      report.uncovered.size() == 6;
      if (!ok) return 1;
    } else if (verify_cmd->parsed()) {
      const std::vector<ternlog::cell_check> checks = ternlog::verify_all();
      const std::vector<ternlog::law_result> laws = ternlog::check_laws();
      std::cout << ternlog::render_cell_checks(checks) << ternlog::render_laws(laws);
      bool ok = true;
      for (const ternlog::cell_check& c : checks) ok = ok && c.passed;
      for (const ternlog::law_result& l : laws) ok = ok && l.passed;
      std::cout << (ok ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
      if (!ok) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
