#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <ternlog/expr.hpp>

namespace ternlog {

/*! \brief Oriented rewrite rule.  Every variable occurring in the patterns
 *         is a pattern variable; the right side only uses variables bound
 *         on the left.
 *
 * Inside a flattened associative-commutative spine, pattern operands match
 * single operands — except a variable listed in bundle_vars, which may
 * absorb all operands left over in that spine (as their canonical
 * re-nesting; at most one such variable per spine, and it must absorb at
 * least one operand).  Repeated variables must bind structurally equal
 * subterms.  Each rule is machine-verified sound over every ground
 * substitution when the catalog is built.
 */
struct rewrite_rule {
  std::string name;
  expr_ptr lhs;
  expr_ptr rhs;
  std::string family;  //!< constant-fold, boundedness, identity, idempotency,
                       //!< involution, fusion, complementation, de-morgan, factoring
  std::set<std::string> bundle_vars;
};

//! The fixed, ordered rule catalog; earlier rules take priority.
[[nodiscard]] const std::vector<rewrite_rule>& rule_catalog();

//! Lookup by name; nullptr when absent.
[[nodiscard]] const rewrite_rule* find_rule(std::string_view name);

/*! \brief Associative-commutative normal form: every alpha/beta/gamma spine
 *         is flattened, sorted by struct_compare and re-nested to the left.
 *         Semantics-preserving; idempotent.
 */
[[nodiscard]] expr_ptr canonicalize(const expr_ptr& e);

/*! \brief Operator nodes in the hash-consed DAG of e: structurally equal
 *         subtrees count once; constants and variables are free.
 */
[[nodiscard]] int cost(const expr_ptr& e);

struct trace_entry {
  std::string rule;
  int cost_before;  //!< cost of the rewritten subterm before the step
  int cost_after;
};

/*! \brief Budgeted innermost rewriting under the catalog.  Each pass sweeps
 *         leaf-upward, applying at every node the first matching rule until
 *         none applies; passes repeat until a structural fixpoint or until
 *         the budget (>= 1) is exhausted.  The result is the lowest-cost
 *         snapshot seen — the input, or any pass end — so the cost never
 *         exceeds cost(e); ties go to the lexicographically least
 *         pretty-printed form.
 */
[[nodiscard]] expr_ptr simplify(const expr_ptr& e, int budget = 32,
                                std::vector<trace_entry>* trace = nullptr);

}  // namespace ternlog
