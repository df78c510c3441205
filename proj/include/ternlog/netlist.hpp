#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <ternlog/expr.hpp>

namespace ternlog {

class netlist_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class gate_kind { input, constant, rot, alpha, beta, gamma };

//! Interchange spelling: INPUT, CONST, ROT, ALPHA, BETA, GAMMA.
[[nodiscard]] std::string gate_kind_name(gate_kind k);

struct gate {
  std::uint32_t id = 0;
  gate_kind kind = gate_kind::input;
  std::vector<std::uint32_t> operands;  //!< 0-2 ids, each < id
  std::string label;                    //!< input name / constant digit; empty otherwise

  bool operator==(const gate&) const = default;
};

/*! \brief Hash-consed gate DAG.  Gates are densely numbered in dependency
 *         order; no two gates share (kind, operands, label); every gate is
 *         reachable from some output.  Use validate() to check a hand-built
 *         or deserialized value.
 */
struct netlist {
  std::vector<gate> gates;
  std::map<std::string, std::uint32_t> outputs;

  bool operator==(const netlist&) const = default;
};

//! Throws netlist_error (message names the offending field) on violation.
void validate(const netlist& n);

/*! \brief Lower expressions into one shared DAG.  Outputs are visited in
 *         name order, depth first; structurally equal subexpressions map
 *         to one gate, within and across outputs.
 */
[[nodiscard]] netlist lower(const std::map<std::string, expr_ptr>& named_exprs);

//! Forward simulation; env must cover every INPUT label.
[[nodiscard]] std::map<std::string, trit> simulate(const netlist& n, const assignment& env);

//! Deterministic graph text: one node per gate, one edge per operand use,
//! output gates marked; byte-identical for equal netlists.
[[nodiscard]] std::string emit_dot(const netlist& n);

//! Schema: {"gates": [{"id", "kind", "operands", "label"?}], "outputs": {name: id}}.
[[nodiscard]] std::string emit_json(const netlist& n);

//! Inverse of emit_json; rejects schema violations with the offending path.
[[nodiscard]] netlist parse_json(const std::string& text);

}  // namespace ternlog
