#include <ternlog/synth.hpp>

#include <stdexcept>

namespace ternlog {

selector_term selector_for_row(const truth_table& t, std::size_t row) {
  // rotating an input by its own row value sends it to 0: rot^v(v) = 0
  return {decode_row(row, t.arity()), t.output(row)};
}

trit selector_value(const selector_term& term, const std::vector<trit>& inputs) {
  if (inputs.size() != term.rotations.size()) {
    throw std::invalid_argument("selector_value: input count mismatch");
  }
  if (inputs.empty()) return term.payload;
  // literally the term's operator composition: beta spine, *1 filter, +payload
  trit spine = inputs[0];
  for (int i = 0; i < term.rotations[0].value(); ++i) spine = rotate(spine);
  for (std::size_t k = 1; k < inputs.size(); ++k) {
    trit v = inputs[k];
    for (int i = 0; i < term.rotations[k].value(); ++i) v = rotate(v);
    spine = beta(spine, v);
  }
  return beta(alpha(spine, trit{1}), term.payload);
}

expr_ptr selector_expr(const selector_term& term, const std::vector<std::string>& var_names) {
  if (var_names.size() != term.rotations.size()) {
    throw std::invalid_argument("selector_expr: variable count mismatch");
  }
  if (var_names.empty()) return constant(term.payload);
  expr_ptr spine;
  for (std::size_t k = 0; k < var_names.size(); ++k) {
    expr_ptr v = variable(var_names[k]);
    for (int i = 0; i < term.rotations[k].value(); ++i) v = rotate(std::move(v));
    spine = spine ? beta(std::move(spine), std::move(v)) : std::move(v);
  }
  return beta(alpha(std::move(spine), constant(trit{1})), constant(term.payload));
}

expr_ptr synthesize(const truth_table& t) {
  if (t.arity() == 0) return constant(t.output(0));
  expr_ptr result;
  for (std::size_t row = 0; row < t.outputs().size(); ++row) {
    auto term = selector_expr(selector_for_row(t, row), t.var_names());
    result = result ? gamma(std::move(result), std::move(term)) : std::move(term);
  }
  return result;
}

}  // namespace ternlog
