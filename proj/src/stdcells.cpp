#include <ternlog/stdcells.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

#include <ternlog/rewrite.hpp>
#include <ternlog/synth.hpp>

namespace ternlog {
namespace {

truth_table make_table(std::vector<std::string> vars, std::string_view digits) {
  std::vector<trit> outputs;
  outputs.reserve(digits.size());
  for (char c : digits) outputs.push_back(trit(c - '0'));
  return truth_table(std::move(vars), std::move(outputs));
}

std::vector<std_cell> build_cells() {
  std::vector<std_cell> cells;
  auto add = [&](std::string name, std::vector<std::string> vars, std::string_view digits,
                 expr_ptr e) {
    truth_table ref = make_table(std::move(vars), digits);
    if (!(table_of(e, ref.var_names()) == ref))
      throw std::logic_error("cell " + name + ": expression does not match its table");
    cells.push_back({std::move(name), std::move(ref), std::move(e)});
  };
  const std::vector<std::string> x{"x"};
  const std::vector<std::string> xy{"x", "y"};

  const expr_ptr tnand_e = parse("(x*1 @ y*1)+2 @ (~~x+~~y)*1");
  const expr_ptr tnor_e = parse("~~x*1 @ ~~y*1 @ (x+y)*1+2");
  // STI applied on top of another expression, via the selector form of the
  // rotate-reverse bijection.
  auto sti_of = [](const expr_ptr& e) {
    return substitute(parse("~~z*1 @ z*1+2"), {{"z", e}});
  };

  add("STI", x, "210", parse("~~x*1 @ x*1+2"));
  add("NTI", x, "200", parse("(~~x*1 @ x*1+2) @ ~x"));
  add("PTI", x, "220", parse("(~~x*1 @ x*1+2) @ ~~x"));
  add("TNAND", xy, "222211210", tnand_e);
  add("TNOR", xy, "210110000", tnor_e);
  add("TAND", xy, "000011012", sti_of(tnand_e));
  add("TOR", xy, "012112222", sti_of(tnor_e));
  add("THA_CARRY", xy, "000001011", parse("x*1 @ y*1 @ (~x+~y)*1"));
  add("THA_SUM", xy, "012120201", parse("x*1+y @ ~x*1+~~y @ ~~x*1+~y"));
  add("REVERSE", x, "021", parse("x*1 @ ~x*1+2"));
  add("ROT", x, "201", parse("~x*1 @ x*1+2"));
  add("ROT2", x, "120", parse("~~x*1 @ ~x*1+2"));
  return cells;
}

std::string digits_of(const std::vector<trit>& table) {
  std::string s;
  for (trit t : table) s.push_back(static_cast<char>('0' + t.value()));
  return s;
}

}  // namespace

const std::vector<std_cell>& std_cells() {
  static const std::vector<std_cell> cells = build_cells();
  return cells;
}

const std_cell* find_cell(std::string_view name) {
  for (const std_cell& c : std_cells())
    if (c.name == name) return &c;
  return nullptr;
}

const std_cell& cell(std::string_view name) {
  const std_cell* c = find_cell(name);
  if (c == nullptr) throw std::invalid_argument("unknown cell: " + std::string(name));
  return *c;
}

std::vector<cell_check> verify_all() {
  std::vector<cell_check> checks;
  for (const std_cell& c : std_cells()) {
    checks.push_back(
        {c.name, "table-match", table_of(c.expression, c.reference.var_names()) == c.reference, ""});

    const expr_ptr synth = synthesize(c.reference);
    checks.push_back({c.name, "synthesis-equivalent", equivalent(synth, c.expression).equal(), ""});

    const expr_ptr reduced = simplify(synth);
    const int reduced_cost = cost(reduced);
    const int reference_cost = cost(c.expression);
    const bool ok = equivalent(reduced, c.expression).equal() && reduced_cost <= reference_cost;
    checks.push_back({c.name, "simplify-cost", ok,
                      "cost " + std::to_string(reduced_cost) + " vs " +
                          std::to_string(reference_cost)});
  }
  return checks;
}

std::string render_cell_checks(const std::vector<cell_check>& checks) {
  std::ostringstream out;
  for (const cell_check& c : checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.cell << ' ' << c.check;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

census_report monadic_census() {
  census_report report;

  // Expected 3-entry function of each composed form, recomputed offline from
  // the operator tables and frozen; order is rotation-major, then the first
  // stage and second stage each cycling (@,0), (*,1), (+,2).
  static const char* const reference_columns[27] = {
      "002", "001", "222", "000", "011", "211", "202", "111", "212",
      "200", "100", "222", "000", "101", "121", "220", "111", "221",
      "020", "010", "222", "000", "110", "112", "022", "111", "122",
  };

  struct stage {
    expr_kind op;
    int c;
  };
  const stage stages[3] = {
      {expr_kind::gamma, 0}, {expr_kind::alpha, 1}, {expr_kind::beta, 2}};

  const expr_ptr vx = variable("x");
  auto table_of_form = [](const expr_ptr& form) {
    std::vector<trit> table;
    for (int v = 0; v < 3; ++v) table.push_back(evaluate(form, {{"x", trit(v)}}));
    return table;
  };

  report.forms_match_reference = true;
  std::set<std::vector<trit>> covered;
  int index = 0;
  for (int m = 0; m < 3; ++m) {
    expr_ptr base = vx;
    for (int i = 0; i < m; ++i) base = rotate(base);
    for (const stage& s1 : stages)
      for (const stage& s2 : stages) {
        expr_ptr form =
            dyadic(s2.op, dyadic(s1.op, base, constant(trit(s1.c))), constant(trit(s2.c)));
        std::vector<trit> table = table_of_form(form);
        const bool match = digits_of(table) == reference_columns[index];
        report.forms_match_reference = report.forms_match_reference && match;
        covered.insert(table);
        report.forms.push_back({std::move(form), std::move(table), match});
        ++index;
      }
  }
  report.distinct.assign(covered.begin(), covered.end());

  for (int code = 0; code < 27; ++code)
    if (std::vector<trit> f{trit(code / 9), trit((code / 3) % 3), trit(code % 3)};
        covered.count(f) == 0)
      report.uncovered.push_back(std::move(f));

  std::set<std::vector<trit>> permutations;
  for (perm_op p : all_perm_ops())
    permutations.insert({apply_perm(p, trit(0)), apply_perm(p, trit(1)), apply_perm(p, trit(2))});
  const std::set<std::vector<trit>> uncovered_set(report.uncovered.begin(),
                                                  report.uncovered.end());
  report.uncovered_are_permutations = uncovered_set == permutations;

  // Selector forms rebuilding the six bijections the composed forms miss.
  const std::pair<perm_op, const char*> rebuilt[6] = {
      {perm_op::identity, "x*1 @ ~~x*1+2"},
      {perm_op::rotate, "~x*1 @ x*1+2"},
      {perm_op::rotate2, "~~x*1 @ ~x*1+2"},
      {perm_op::reverse, "x*1 @ ~x*1+2"},
      {perm_op::rotate_reverse, "~~x*1 @ x*1+2"},
      {perm_op::rotate2_reverse, "~x*1 @ ~~x*1+2"},
  };
  bool all_rebuilt = true;
  std::set<std::vector<trit>> rebuilt_tables;
  for (const auto& [p, text] : rebuilt) {
    expr_ptr form = parse(text);
    std::vector<trit> table = table_of_form(form);
    bool match = true;
    for (int v = 0; v < 3; ++v) match = match && table[v] == apply_perm(p, trit(v));
    all_rebuilt = all_rebuilt && match;
    rebuilt_tables.insert(table);
    report.reconstructions.push_back({p, std::move(form), std::move(table), match});
  }
  report.reconstructions_cover_uncovered = all_rebuilt && rebuilt_tables == uncovered_set;
  return report;
}

std::string render_census(const census_report& report) {
  std::ostringstream out;
  for (const census_report::form_entry& f : report.forms)
    out << (f.matches_reference ? "ok   " : "FAIL ") << pretty_print(f.form) << " -> "
        << digits_of(f.table) << '\n';
  out << "distinct functions: " << report.distinct.size() << '\n';
  out << "uncovered functions: " << report.uncovered.size() << '\n';
  out << "uncovered are exactly the six permutations: "
      << (report.uncovered_are_permutations ? "yes" : "NO") << '\n';
  for (const census_report::reconstruction& r : report.reconstructions)
    out << (r.matches ? "ok   " : "FAIL ") << perm_name(r.op) << " <- " << pretty_print(r.form)
        << " -> " << digits_of(r.table) << '\n';
  out << "reconstructions cover the uncovered functions: "
      << (report.reconstructions_cover_uncovered ? "yes" : "NO") << '\n';
  return out.str();
}

}  // namespace ternlog
