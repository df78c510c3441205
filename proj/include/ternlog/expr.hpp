#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <ternlog/trit.hpp>

namespace ternlog {

enum class expr_kind : std::uint8_t { constant, variable, rotate, alpha, beta, gamma };

class expr;
using expr_ptr = std::shared_ptr<const expr>;

/*! \brief Immutable expression tree over rotate/alpha/beta/gamma,
 *         constants 0|1|2 and named variables.
 *
 * Nodes are shared freely (subtrees may alias); all algorithms treat
 * them as values and compare structurally, never by pointer.
 */
class expr {
public:
  [[nodiscard]] expr_kind kind() const { return kind_; }
  [[nodiscard]] bool is_dyadic() const {
    return kind_ == expr_kind::alpha || kind_ == expr_kind::beta || kind_ == expr_kind::gamma;
  }

  //! Constant nodes only.
  [[nodiscard]] trit value() const;
  //! Variable nodes only.
  [[nodiscard]] const std::string& name() const;
  //! Rotate nodes only.
  [[nodiscard]] const expr_ptr& child() const;
  //! Dyadic nodes only.
  [[nodiscard]] const expr_ptr& left() const;
  [[nodiscard]] const expr_ptr& right() const;

private:
  expr(expr_kind kind, trit value, std::string name, expr_ptr a, expr_ptr b)
      : kind_{kind}, value_{value}, name_{std::move(name)}, a_{std::move(a)}, b_{std::move(b)} {}

  expr_kind kind_;
  trit value_;
  std::string name_;
  expr_ptr a_;
  expr_ptr b_;

  friend expr_ptr constant(trit);
  friend expr_ptr variable(std::string);
  friend expr_ptr rotate(expr_ptr);
  friend expr_ptr dyadic(expr_kind, expr_ptr, expr_ptr);
};

[[nodiscard]] expr_ptr constant(trit v);
//! Valid names match [A-Za-z][A-Za-z0-9_]*; anything else throws std::invalid_argument.
[[nodiscard]] expr_ptr variable(std::string name);
[[nodiscard]] expr_ptr rotate(expr_ptr e);
[[nodiscard]] expr_ptr dyadic(expr_kind op, expr_ptr l, expr_ptr r);
[[nodiscard]] expr_ptr alpha(expr_ptr l, expr_ptr r);
[[nodiscard]] expr_ptr beta(expr_ptr l, expr_ptr r);
[[nodiscard]] expr_ptr gamma(expr_ptr l, expr_ptr r);

[[nodiscard]] bool struct_equal(const expr_ptr& a, const expr_ptr& b);

/*! \brief Total structural order used wherever determinism matters:
 *         constants (by value) < variables (by name) < compound nodes
 *         (by kind rotate < alpha < beta < gamma, then children).
 */
[[nodiscard]] std::strong_ordering struct_compare(const expr_ptr& a, const expr_ptr& b);

using assignment = std::map<std::string, trit>;

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t offset);
  std::size_t offset;  //!< byte offset into the input text
};

struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*! \brief Parse the concrete syntax: prefix `~` (rotate, tightest), infix
 *         `*` (alpha), `+` (beta), `@` (gamma, loosest), all infix
 *         left-associative; `(`...`)`; constants 0|1|2; identifiers.
 */
[[nodiscard]] expr_ptr parse(std::string_view text);

//! Minimal-parenthesis rendering; parse(pretty_print(e)) reproduces e exactly.
[[nodiscard]] std::string pretty_print(const expr_ptr& e);

//! Throws eval_error naming the variable if the assignment misses one.
[[nodiscard]] trit evaluate(const expr_ptr& e, const assignment& env);

//! Free variables in ascending name order, each listed once.
[[nodiscard]] std::vector<std::string> free_vars(const expr_ptr& e);

//! Replace whole variables by expressions (simultaneous, capture-free).
[[nodiscard]] expr_ptr substitute(const expr_ptr& e, const std::map<std::string, expr_ptr>& map);

}  // namespace ternlog
