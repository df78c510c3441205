#pragma once

#include <string>
#include <vector>

#include <ternlog/truth_table.hpp>

namespace ternlog {

/*! \brief One algebraic identity of the operator algebra, written in the
 *         concrete syntax.  should_hold is false for the single reversed
 *         distributivity direction, which the suite refutes by
 *         counterexample instead of asserting.
 */
struct law {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool should_hold;
};

//! 25 identities that hold, plus the one refuted reversal.
[[nodiscard]] const std::vector<law>& law_suite();

struct law_result {
  law item;
  bool passed;        //!< outcome agreed with should_hold
  equivalence check;  //!< the exhaustive comparison, with witness if unequal
};

//! Check the whole suite exhaustively.
[[nodiscard]] std::vector<law_result> check_laws();

//! Human-readable one-line-per-law report.
[[nodiscard]] std::string render_laws(const std::vector<law_result>& results);

}  // namespace ternlog
