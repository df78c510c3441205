#pragma once

#include <vector>

#include <ternlog/truth_table.hpp>

namespace ternlog {

/*! \brief One row's selector: rotation counts per input plus the row's
 *         output payload.  The built expression is
 *         (rot^c1(x1) + ... + rot^cn(xn)) * 1 + payload —
 *         the beta spine is 0 exactly on the selected row (each input is
 *         rotated down to 0 there), the `*1` filter clips everything else
 *         to 1, and `+payload` then either yields the payload or the
 *         neutral 1 that the enclosing gamma chain ignores.
 */
struct selector_term {
  std::vector<trit> rotations;
  trit payload;
};

[[nodiscard]] selector_term selector_for_row(const truth_table& t, std::size_t row);

//! Selector semantics without building the tree: payload if every rotated input is 0, else 1.
[[nodiscard]] trit selector_value(const selector_term& term, const std::vector<trit>& inputs);

//! The selector as an expression over the given variable names (one per rotation count).
[[nodiscard]] expr_ptr selector_expr(const selector_term& term,
                                     const std::vector<std::string>& var_names);

/*! \brief Regular-formula synthesis: the gamma combination, in canonical
 *         row order and left-nested, of every row's selector term.
 *         Nullary tables become their single constant.  The result always
 *         evaluates back to the input table; it is not minimized (feed it
 *         to simplify() for that).
 */
[[nodiscard]] expr_ptr synthesize(const truth_table& t);

}  // namespace ternlog
