#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ternlog {

/*! \brief One ternary digit: 0, 1 or 2.
 *
 * Construction from any other integer throws; arithmetic never wraps
 * silently.  The whole algebra below is defined by lookup tables so the
 * semantics stay visibly in one place.
 */
class trit {
public:
  constexpr trit() = default;

  explicit constexpr trit(int v) : v_{static_cast<std::uint8_t>(v)} {
    if (v < 0 || v > 2) {
      throw std::invalid_argument("trit value must be 0, 1 or 2, got " + std::to_string(v));
    }
  }

  [[nodiscard]] constexpr int value() const { return v_; }

  constexpr auto operator<=>(const trit&) const = default;

private:
  std::uint8_t v_{0};
};

/*! \brief Rotation: decrement modulo 3, i.e. 0->2, 1->0, 2->1. */
[[nodiscard]] constexpr trit rotate(trit x) {
  constexpr std::array<int, 3> table{2, 0, 1};
  return trit{table[static_cast<std::size_t>(x.value())]};
}

namespace detail {
// The three dyadic operators pick the smaller operand under three rotated
// orderings of {0,1,2}: alpha uses 0 < 1 < 2, beta uses 1 < 2 < 0 and
// gamma uses 2 < 0 < 1.  Rows are the left operand, columns the right.
inline constexpr int alpha_table[3][3] = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
inline constexpr int beta_table[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
inline constexpr int gamma_table[3][3] = {{0, 0, 2}, {0, 1, 2}, {2, 2, 2}};
}  // namespace detail

/*! \brief Minimum under the ordering 0 < 1 < 2 (written infix as `*`). */
[[nodiscard]] constexpr trit alpha(trit x, trit y) {
  return trit{detail::alpha_table[x.value()][y.value()]};
}

/*! \brief Minimum under the ordering 1 < 2 < 0 (written infix as `+`). */
[[nodiscard]] constexpr trit beta(trit x, trit y) {
  return trit{detail::beta_table[x.value()][y.value()]};
}

/*! \brief Minimum under the ordering 2 < 0 < 1 (written infix as `@`). */
[[nodiscard]] constexpr trit gamma(trit x, trit y) {
  return trit{detail::gamma_table[x.value()][y.value()]};
}

/*! \brief The six bijections on {0,1,2}: three rotations and their reversals. */
enum class perm_op : std::uint8_t {
  identity,        // [0,1,2]
  rotate,          // [2,0,1]
  rotate2,         // [1,2,0]
  reverse,         // [0,2,1]  swaps 1 and 2
  rotate_reverse,  // [2,1,0]  rotate after reverse
  rotate2_reverse  // [1,0,2]  rotate twice after reverse
};

[[nodiscard]] constexpr std::array<trit, 3> perm_table(perm_op p) {
  constexpr int tables[6][3] = {
      {0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
  };
  const auto& t = tables[static_cast<std::size_t>(p)];
  return {trit{t[0]}, trit{t[1]}, trit{t[2]}};
}

[[nodiscard]] constexpr trit apply_perm(perm_op p, trit x) {
  return perm_table(p)[static_cast<std::size_t>(x.value())];
}

[[nodiscard]] constexpr std::array<perm_op, 6> all_perm_ops() {
  return {perm_op::identity,       perm_op::rotate,         perm_op::rotate2,
          perm_op::reverse,        perm_op::rotate_reverse, perm_op::rotate2_reverse};
}

[[nodiscard]] constexpr const char* perm_name(perm_op p) {
  constexpr const char* names[6] = {"identity",       "rotate",  "rotate2",
                                    "reverse",        "rotate-reverse",
                                    "rotate2-reverse"};
  return names[static_cast<std::size_t>(p)];
}

}  // namespace ternlog
