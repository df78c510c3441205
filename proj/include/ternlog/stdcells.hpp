#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <ternlog/expr.hpp>
#include <ternlog/trit.hpp>
#include <ternlog/truth_table.hpp>

namespace ternlog {

/*! \brief A named library cell: its reference truth table and the library's
 *         reference expression (the final derived form).  The expression is
 *         checked against the table when the library is built.
 */
struct std_cell {
  std::string name;
  truth_table reference;
  expr_ptr expression;
};

//! The twelve cells: STI, NTI, PTI, TNAND, TNOR, TAND, TOR, THA_CARRY,
//! THA_SUM, REVERSE, ROT, ROT2.
[[nodiscard]] const std::vector<std_cell>& std_cells();

//! Lookup by name; nullptr when unknown.
[[nodiscard]] const std_cell* find_cell(std::string_view name);

//! Lookup by name; throws std::invalid_argument when unknown.
[[nodiscard]] const std_cell& cell(std::string_view name);

struct cell_check {
  std::string cell;
  std::string check;  //!< table-match | synthesis-equivalent | simplify-cost
  bool passed;
  std::string detail;
};

/*! \brief Three checks per cell: the expression matches the table, the
 *         synthesized regular formula is equivalent to the expression, and
 *         simplifying the regular formula reaches cost no greater than the
 *         expression's.
 */
[[nodiscard]] std::vector<cell_check> verify_all();

[[nodiscard]] std::string render_cell_checks(const std::vector<cell_check>& checks);

/*! \brief Census of all 27 composed one-variable forms
 *         ((m(x) op1 c1) op2 c2) with m ranging over the three rotations
 *         and (op, c) over (@,0), (*,1), (+,2): which of the 27 monadic
 *         functions they cover (21), which they miss (the 6 bijections),
 *         and the selector forms that rebuild the missing ones.
 */
struct census_report {
  struct form_entry {
    expr_ptr form;
    std::vector<trit> table;  //!< outputs on inputs 0, 1, 2
    bool matches_reference;
  };
  struct reconstruction {
    perm_op op;
    expr_ptr form;
    std::vector<trit> table;
    bool matches;
  };
  std::vector<form_entry> forms;              //!< the 27 composed forms, fixed order
  std::vector<std::vector<trit>> distinct;    //!< unique functions among the forms
  std::vector<std::vector<trit>> uncovered;   //!< monadic functions never produced
  std::vector<reconstruction> reconstructions;
  bool forms_match_reference = false;
  bool uncovered_are_permutations = false;
  bool reconstructions_cover_uncovered = false;
};

[[nodiscard]] census_report monadic_census();

[[nodiscard]] std::string render_census(const census_report& report);

}  // namespace ternlog
