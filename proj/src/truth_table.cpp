#include <ternlog/truth_table.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ternlog {

std::vector<trit> decode_row(std::size_t row, std::size_t arity) {
  std::vector<trit> inputs(arity);
  for (std::size_t k = arity; k-- > 0;) {
    inputs[k] = trit{static_cast<int>(row % 3)};
    row /= 3;
  }
  return inputs;
}

std::size_t encode_row(const std::vector<trit>& inputs) {
  std::size_t row = 0;
  for (const trit v : inputs) row = row * 3 + static_cast<std::size_t>(v.value());
  return row;
}

namespace {

bool valid_var_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (const char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

truth_table::truth_table(std::vector<std::string> var_names, std::vector<trit> outputs)
    : var_names_{std::move(var_names)}, outputs_{std::move(outputs)} {
  std::set<std::string> seen;
  for (const auto& name : var_names_) {
    if (!valid_var_name(name)) throw table_error("invalid variable name: \"" + name + "\"");
    if (!seen.insert(name).second) throw table_error("duplicate variable name: " + name);
  }
  if (outputs_.size() != pow3(var_names_.size())) {
    throw table_error("expected " + std::to_string(pow3(var_names_.size())) + " outputs, got " +
                      std::to_string(outputs_.size()));
  }
}

std::string truth_table::to_compact() const {
  std::string out = "vars:";
  for (const auto& name : var_names_) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const trit v : outputs_) out += static_cast<char>('0' + v.value());
  return out;
}

truth_table table_of(const expr_ptr& e, const std::vector<std::string>& var_order,
                     std::size_t max_arity) {
  if (var_order.size() > max_arity) {
    throw table_error("arity " + std::to_string(var_order.size()) + " exceeds cap of " +
                      std::to_string(max_arity));
  }
  const std::set<std::string> known{var_order.begin(), var_order.end()};
  for (const auto& name : free_vars(e)) {
    if (!known.contains(name)) throw table_error("variable order misses variable: " + name);
  }
  const std::size_t rows = pow3(var_order.size());
  std::vector<trit> outputs;
  outputs.reserve(rows);
  assignment env;
  for (std::size_t row = 0; row < rows; ++row) {
    const auto inputs = decode_row(row, var_order.size());
    for (std::size_t k = 0; k < var_order.size(); ++k) env[var_order[k]] = inputs[k];
    outputs.push_back(evaluate(e, env));
  }
  return {var_order, std::move(outputs)};
}

truth_table table_of(const expr_ptr& e, std::size_t max_arity) {
  return table_of(e, free_vars(e), max_arity);
}

equivalence equivalent(const expr_ptr& a, const expr_ptr& b, std::size_t max_arity) {
  std::set<std::string> names;
  for (const auto& n : free_vars(a)) names.insert(n);
  for (const auto& n : free_vars(b)) names.insert(n);
  const std::vector<std::string> vars{names.begin(), names.end()};
  if (vars.size() > max_arity) {
    throw table_error("arity " + std::to_string(vars.size()) + " exceeds cap of " +
                      std::to_string(max_arity));
  }
  const std::size_t rows = pow3(vars.size());
  assignment env;
  for (std::size_t row = 0; row < rows; ++row) {
    const auto inputs = decode_row(row, vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) env[vars[k]] = inputs[k];
    const trit va = evaluate(a, env);
    const trit vb = evaluate(b, env);
    if (va != vb) return {counterexample{env, va, vb}};
  }
  return {};
}

namespace {

trit parse_digit(char c, std::size_t line_no) {
  if (c < '0' || c > '2') {
    throw table_error("invalid output digit '" + std::string{c} + "' on line " +
                      std::to_string(line_no));
  }
  return trit{c - '0'};
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in{line};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

}  // namespace

truth_table parse_table(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (const char c : text) {
      if (c == '\n') {
        lines.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
  }
  std::size_t i = 0;
  while (i < lines.size() && split_ws(lines[i]).empty()) ++i;
  if (i == lines.size()) throw table_error("empty table text");
  auto header = split_ws(lines[i]);
  if (header.empty() || header.front().rfind("vars:", 0) != 0) {
    throw table_error("expected 'vars:' header on line " + std::to_string(i + 1));
  }
  std::vector<std::string> var_names;
  if (header.front() != "vars:") {
    var_names.push_back(header.front().substr(5));  // tolerate "vars:x"
  }
  var_names.insert(var_names.end(), header.begin() + 1, header.end());
  const std::size_t arity = var_names.size();
  const std::size_t rows = pow3(arity);
  ++i;

  // decide format by looking for "->" in the body
  bool row_format = false;
  for (std::size_t j = i; j < lines.size(); ++j) {
    if (lines[j].find("->") != std::string::npos) {
      row_format = true;
      break;
    }
  }

  if (!row_format) {
    std::string digits;
    for (; i < lines.size(); ++i) {
      for (const char c : lines[i]) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        digits += c;
      }
    }
    if (digits.size() != rows) {
      throw table_error("expected " + std::to_string(rows) + " output digits, got " +
                        std::to_string(digits.size()));
    }
    std::vector<trit> outputs;
    outputs.reserve(rows);
    for (std::size_t k = 0; k < digits.size(); ++k) outputs.push_back(parse_digit(digits[k], i));
    return {std::move(var_names), std::move(outputs)};
  }

  std::vector<std::optional<trit>> outputs(rows);
  for (; i < lines.size(); ++i) {
    auto words = split_ws(lines[i]);
    if (words.empty()) continue;
    const std::size_t line_no = i + 1;
    if (words.size() != arity + 2 || words[arity] != "->") {
      throw table_error("malformed row on line " + std::to_string(line_no) + ": expected '" +
                        std::to_string(arity) + " inputs -> output'");
    }
    std::vector<trit> inputs;
    inputs.reserve(arity);
    for (std::size_t k = 0; k < arity; ++k) {
      if (words[k].size() != 1) {
        throw table_error("invalid input digit '" + words[k] + "' on line " +
                          std::to_string(line_no));
      }
      inputs.push_back(parse_digit(words[k][0], line_no));
    }
    if (words.back().size() != 1) {
      throw table_error("invalid output digit '" + words.back() + "' on line " +
                        std::to_string(line_no));
    }
    const trit out = parse_digit(words.back()[0], line_no);
    const std::size_t row = encode_row(inputs);
    if (outputs[row].has_value()) {
      throw table_error("duplicate row on line " + std::to_string(line_no));
    }
    outputs[row] = out;
  }
  std::vector<trit> final_outputs;
  final_outputs.reserve(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    if (!outputs[row].has_value()) {
      std::string inputs;
      for (const trit v : decode_row(row, arity)) {
        if (!inputs.empty()) inputs += ' ';
        inputs += static_cast<char>('0' + v.value());
      }
      throw table_error("missing row for inputs: " + inputs);
    }
    final_outputs.push_back(*outputs[row]);
  }
  return {std::move(var_names), std::move(final_outputs)};
}

}  // namespace ternlog
