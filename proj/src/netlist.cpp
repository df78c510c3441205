#include <ternlog/netlist.hpp>

#include <cctype>
#include <functional>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace ternlog {
namespace {

int operand_count(gate_kind k) {
  switch (k) {
    case gate_kind::input:
    case gate_kind::constant:
      return 0;
    case gate_kind::rot:
      return 1;
    default:
      return 2;
  }
}

bool valid_input_label(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string display_label(const gate& g) {
  switch (g.kind) {
    case gate_kind::input:
    case gate_kind::constant:
      return g.label;
    case gate_kind::rot:
      return "ROT";
    case gate_kind::alpha:
      return "α";
    case gate_kind::beta:
      return "β";
    default:
      return "γ";
  }
}

gate_kind kind_from_name(const std::string& name, const std::string& path) {
  if (name == "INPUT") return gate_kind::input;
  if (name == "CONST") return gate_kind::constant;
  if (name == "ROT") return gate_kind::rot;
  if (name == "ALPHA") return gate_kind::alpha;
  if (name == "BETA") return gate_kind::beta;
  if (name == "GAMMA") return gate_kind::gamma;
  throw netlist_error(path + ": unknown gate kind \"" + name + "\"");
}

}  // namespace

std::string gate_kind_name(gate_kind k) {
  switch (k) {
    case gate_kind::input:
      return "INPUT";
    case gate_kind::constant:
      return "CONST";
    case gate_kind::rot:
      return "ROT";
    case gate_kind::alpha:
      return "ALPHA";
    case gate_kind::beta:
      return "BETA";
    default:
      return "GAMMA";
  }
}

void validate(const netlist& n) {
  std::map<std::tuple<int, std::string, std::vector<std::uint32_t>>, std::uint32_t> seen;
  for (std::size_t i = 0; i < n.gates.size(); ++i) {
    const gate& g = n.gates[i];
    const std::string path = "gates[" + std::to_string(i) + "]";
    if (g.id != i)
      throw netlist_error(path + ".id: expected " + std::to_string(i) + ", found " +
                          std::to_string(g.id));
    if (g.operands.size() != static_cast<std::size_t>(operand_count(g.kind)))
      throw netlist_error(path + ".operands: " + gate_kind_name(g.kind) + " takes " +
                          std::to_string(operand_count(g.kind)) + " operand(s), found " +
                          std::to_string(g.operands.size()));
    for (std::size_t k = 0; k < g.operands.size(); ++k)
      if (g.operands[k] >= g.id)
        throw netlist_error(path + ".operands[" + std::to_string(k) + "]: id " +
                            std::to_string(g.operands[k]) + " does not precede gate " +
                            std::to_string(g.id));
    switch (g.kind) {
      case gate_kind::input:
        if (!valid_input_label(g.label))
          throw netlist_error(path + ".label: invalid input name \"" + g.label + "\"");
        break;
      case gate_kind::constant:
        if (g.label != "0" && g.label != "1" && g.label != "2")
          throw netlist_error(path + ".label: constant must be 0, 1 or 2, found \"" + g.label +
                              "\"");
        break;
      default:
        if (!g.label.empty())
          throw netlist_error(path + ".label: " + gate_kind_name(g.kind) +
                              " gates carry no label");
        break;
    }
    auto key = std::make_tuple(static_cast<int>(g.kind), g.label, g.operands);
    auto [it, inserted] = seen.emplace(std::move(key), g.id);
    if (!inserted)
      throw netlist_error(path + ": duplicates gate " + std::to_string(it->second) +
                          " (netlist is not hash-consed)");
  }
  std::vector<char> reachable(n.gates.size(), 0);
  std::function<void(std::uint32_t)> mark = [&](std::uint32_t id) {
    if (reachable[id]) return;
    reachable[id] = 1;
    for (std::uint32_t op : n.gates[id].operands) mark(op);
  };
  for (const auto& [name, id] : n.outputs) {
    if (id >= n.gates.size())
      throw netlist_error("outputs[\"" + name + "\"]: unknown gate id " + std::to_string(id));
    mark(id);
  }
  for (std::size_t i = 0; i < n.gates.size(); ++i)
    if (!reachable[i])
      throw netlist_error("gates[" + std::to_string(i) + "]: unreachable from any output");
}

netlist lower(const std::map<std::string, expr_ptr>& named_exprs) {
  netlist n;
  std::map<std::tuple<int, std::string, std::vector<std::uint32_t>>, std::uint32_t> memo;
  auto emit = [&](gate_kind k, std::string label, std::vector<std::uint32_t> operands) {
    auto key = std::make_tuple(static_cast<int>(k), label, operands);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(n.gates.size());
    n.gates.push_back(gate{id, k, std::move(operands), std::move(label)});
    memo.emplace(std::move(key), id);
    return id;
  };
  std::function<std::uint32_t(const expr_ptr&)> visit = [&](const expr_ptr& e) -> std::uint32_t {
    switch (e->kind()) {
      case expr_kind::constant:
        return emit(gate_kind::constant, std::string(1, static_cast<char>('0' + e->value().value())),
                    {});
      case expr_kind::variable:
        return emit(gate_kind::input, e->name(), {});
      case expr_kind::rotate:
        return emit(gate_kind::rot, "", {visit(e->child())});
      case expr_kind::alpha:
        return emit(gate_kind::alpha, "", {visit(e->left()), visit(e->right())});
      case expr_kind::beta:
        return emit(gate_kind::beta, "", {visit(e->left()), visit(e->right())});
      default:
        return emit(gate_kind::gamma, "", {visit(e->left()), visit(e->right())});
    }
  };
  for (const auto& [name, e] : named_exprs) {
    if (!e) throw netlist_error("output \"" + name + "\": null expression");
    n.outputs.emplace(name, visit(e));
  }
  return n;
}

std::map<std::string, trit> simulate(const netlist& n, const assignment& env) {
  std::vector<trit> values(n.gates.size(), trit(0));
  for (const gate& g : n.gates) {
    if (g.id >= n.gates.size()) throw netlist_error("gate id out of range");
    for (std::uint32_t op : g.operands)
      if (op >= g.id) throw netlist_error("operand id out of range");
    switch (g.kind) {
      case gate_kind::input: {
        auto it = env.find(g.label);
        if (it == env.end()) throw netlist_error("missing input: " + g.label);
        values[g.id] = it->second;
        break;
      }
      case gate_kind::constant:
        values[g.id] = trit(g.label.at(0) - '0');
        break;
      case gate_kind::rot:
        values[g.id] = rotate(values[g.operands[0]]);
        break;
      case gate_kind::alpha:
        values[g.id] = alpha(values[g.operands[0]], values[g.operands[1]]);
        break;
      case gate_kind::beta:
        values[g.id] = beta(values[g.operands[0]], values[g.operands[1]]);
        break;
      default:
        values[g.id] = gamma(values[g.operands[0]], values[g.operands[1]]);
        break;
    }
  }
  std::map<std::string, trit> out;
  for (const auto& [name, id] : n.outputs) {
    if (id >= n.gates.size()) throw netlist_error("output \"" + name + "\": unknown gate id");
    out.emplace(name, values[id]);
  }
  return out;
}

std::string emit_dot(const netlist& n) {
  // Gather output names per gate (outputs map is sorted, so the joined
  // marker text is deterministic).
  std::map<std::uint32_t, std::string> markers;
  for (const auto& [name, id] : n.outputs) {
    auto [it, inserted] = markers.emplace(id, name);
    if (!inserted) it->second += "," + name;
  }
  std::ostringstream out;
  out << "digraph netlist {\n";
  for (const gate& g : n.gates) {
    const bool leaf = g.kind == gate_kind::input || g.kind == gate_kind::constant;
    out << "  n" << g.id << " [shape=" << (leaf ? "plaintext" : "box") << ", label=\""
        << display_label(g) << "\"";
    auto marker = markers.find(g.id);
    if (marker != markers.end()) out << ", xlabel=\"" << marker->second << "\"";
    out << "];\n";
  }
  for (const gate& g : n.gates)
    for (std::uint32_t op : g.operands) out << "  n" << op << " -> n" << g.id << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_json(const netlist& n) {
  nlohmann::ordered_json j;
  j["gates"] = nlohmann::ordered_json::array();
  for (const gate& g : n.gates) {
    nlohmann::ordered_json jg;
    jg["id"] = g.id;
    jg["kind"] = gate_kind_name(g.kind);
    jg["operands"] = g.operands;
    if (g.kind == gate_kind::input || g.kind == gate_kind::constant) jg["label"] = g.label;
    j["gates"].push_back(std::move(jg));
  }
  j["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [name, id] : n.outputs) j["outputs"][name] = id;
  return j.dump(2) + "\n";
}

netlist parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw netlist_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw netlist_error("$: expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "gates" && key != "outputs") throw netlist_error(key + ": unknown field");
  if (!j.contains("gates") || !j["gates"].is_array())
    throw netlist_error("gates: expected an array");
  if (!j.contains("outputs") || !j["outputs"].is_object())
    throw netlist_error("outputs: expected an object");

  netlist n;
  std::size_t index = 0;
  for (const auto& jg : j["gates"]) {
    const std::string path = "gates[" + std::to_string(index++) + "]";
    if (!jg.is_object()) throw netlist_error(path + ": expected an object");
    for (const auto& [key, value] : jg.items())
      if (key != "id" && key != "kind" && key != "operands" && key != "label")
        throw netlist_error(path + "." + key + ": unknown field");
    if (!jg.contains("id") || !jg["id"].is_number_unsigned())
      throw netlist_error(path + ".id: expected a non-negative integer");
    if (!jg.contains("kind") || !jg["kind"].is_string())
      throw netlist_error(path + ".kind: expected a string");
    if (!jg.contains("operands") || !jg["operands"].is_array())
      throw netlist_error(path + ".operands: expected an array");
    gate g;
    g.id = jg["id"].get<std::uint32_t>();
    g.kind = kind_from_name(jg["kind"].get<std::string>(), path + ".kind");
    std::size_t oi = 0;
    for (const auto& jo : jg["operands"]) {
      if (!jo.is_number_unsigned())
        throw netlist_error(path + ".operands[" + std::to_string(oi) +
                            "]: expected a non-negative integer");
      g.operands.push_back(jo.get<std::uint32_t>());
      ++oi;
    }
    if (jg.contains("label")) {
      if (!jg["label"].is_string()) throw netlist_error(path + ".label: expected a string");
      g.label = jg["label"].get<std::string>();
    }
    n.gates.push_back(std::move(g));
  }
  for (const auto& [name, id] : j["outputs"].items()) {
    if (!id.is_number_unsigned())
      throw netlist_error("outputs[\"" + name + "\"]: expected a non-negative integer");
    n.outputs.emplace(name, id.get<std::uint32_t>());
  }
  validate(n);
  return n;
}

}  // namespace ternlog
