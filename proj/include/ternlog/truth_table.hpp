#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <ternlog/expr.hpp>

namespace ternlog {

//! Exhaustive table/equivalence work is capped at this arity unless a caller raises it.
inline constexpr std::size_t default_max_arity = 12;

struct table_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[nodiscard]] constexpr std::size_t pow3(std::size_t n) {
  std::size_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

//! Inputs for a row index; the first variable is the most significant digit.
[[nodiscard]] std::vector<trit> decode_row(std::size_t row, std::size_t arity);
[[nodiscard]] std::size_t encode_row(const std::vector<trit>& inputs);

/*! \brief Complete truth table: one output per input row, rows in canonical
 *         order (row i encodes inputs base-3 with the first variable most
 *         significant).
 */
class truth_table {
public:
  truth_table(std::vector<std::string> var_names, std::vector<trit> outputs);

  [[nodiscard]] std::size_t arity() const { return var_names_.size(); }
  [[nodiscard]] const std::vector<std::string>& var_names() const { return var_names_; }
  [[nodiscard]] const std::vector<trit>& outputs() const { return outputs_; }
  [[nodiscard]] trit output(std::size_t row) const { return outputs_.at(row); }

  /*! One header line `vars: <names>` then one line of 3^n output digits.
   *  parse_table() accepts this format back unchanged.
   */
  [[nodiscard]] std::string to_compact() const;

  friend bool operator==(const truth_table&, const truth_table&) = default;

private:
  std::vector<std::string> var_names_;
  std::vector<trit> outputs_;
};

/*! \brief Evaluate e on every assignment over var_order (which must cover
 *         the expression's free variables; extra names are allowed and
 *         widen the table).
 */
[[nodiscard]] truth_table table_of(const expr_ptr& e, const std::vector<std::string>& var_order,
                                   std::size_t max_arity = default_max_arity);

//! Same, over the expression's own free variables in name order.
[[nodiscard]] truth_table table_of(const expr_ptr& e, std::size_t max_arity = default_max_arity);

struct counterexample {
  assignment env;
  trit lhs_value;
  trit rhs_value;
};

struct equivalence {
  std::optional<counterexample> mismatch;  //!< empty when the sides agree everywhere
  [[nodiscard]] bool equal() const { return !mismatch.has_value(); }
  explicit operator bool() const { return equal(); }
};

/*! \brief Exhaustive comparison over the union of both sides' free
 *         variables (sorted by name).  A mismatch reports the least row.
 */
[[nodiscard]] equivalence equivalent(const expr_ptr& a, const expr_ptr& b,
                                     std::size_t max_arity = default_max_arity);

/*! \brief Parse either table format:
 *   - compact: `vars: x y` header, then 3^n output digits;
 *   - rows: `vars: x y` header, then lines `<in1> <in2> -> <out>`
 *     in any order, each row exactly once.
 */
[[nodiscard]] truth_table parse_table(std::string_view text);

}  // namespace ternlog
