#include <ternlog/rewrite.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace ternlog {
namespace {

using binding_map = std::map<std::string, expr_ptr>;

bool is_ac(expr_kind k) {
  return k == expr_kind::alpha || k == expr_kind::beta || k == expr_kind::gamma;
}

void flatten_into(const expr_ptr& e, expr_kind op, std::vector<expr_ptr>& out) {
  if (e->kind() == op) {
    flatten_into(e->left(), op, out);
    flatten_into(e->right(), op, out);
  } else {
    out.push_back(e);
  }
}

std::vector<expr_ptr> flatten(const expr_ptr& e, expr_kind op) {
  std::vector<expr_ptr> out;
  flatten_into(e, op, out);
  return out;
}

//! Left-nested fold of a non-empty operand list.
expr_ptr rebundle(expr_kind op, const std::vector<expr_ptr>& ops) {
  if (ops.empty()) throw std::logic_error("rebundle: empty operand list");
  expr_ptr acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = dyadic(op, acc, ops[i]);
  return acc;
}

void sort_operands(std::vector<expr_ptr>& ops) {
  std::stable_sort(ops.begin(), ops.end(), [](const expr_ptr& a, const expr_ptr& b) {
    return struct_compare(a, b) < 0;
  });
}

/*! Pattern matching for one rule.  Associative-commutative spines are
 *  compared as multisets: fixed pattern operands claim distinct subject
 *  operands (with backtracking, so repeated variables stay consistent), a
 *  bundle variable absorbs whatever is left in its spine, and at the
 *  application root any unclaimed subject operands are handed back to the
 *  caller to carry over unchanged.
 */
class matcher {
 public:
  explicit matcher(const rewrite_rule& rule) : rule_(rule) {}

  //! Success continuation: the rest of the overall match.
  using cont = std::function<bool()>;

  /*! Explore every way pat can cover sub, invoking k on each candidate
   *  binding extension until k succeeds.  Bindings added along a failed
   *  path are removed again, so a false return leaves bind untouched —
   *  that is what lets an outer spine retry a nested spine's alternative
   *  solutions (a bare variable next to a bundle admits several).
   */
  bool match(const expr_ptr& pat, const expr_ptr& sub, binding_map& bind, const cont& k) {
    switch (pat->kind()) {
      case expr_kind::constant:
        return sub->kind() == expr_kind::constant && sub->value() == pat->value() && k();
      case expr_kind::variable:
        return bind_var(pat->name(), sub, bind, k);
      case expr_kind::rotate:
        return sub->kind() == expr_kind::rotate && match(pat->child(), sub->child(), bind, k);
      default: {
        if (sub->kind() != pat->kind()) return false;
        return match_spine(pat->kind(), flatten(pat, pat->kind()), flatten(sub, pat->kind()),
                           bind, nullptr, k);
      }
    }
  }

  bool match_spine(expr_kind op, const std::vector<expr_ptr>& pat_ops,
                   const std::vector<expr_ptr>& subject, binding_map& bind,
                   std::vector<expr_ptr>* remainder, const cont& k) {
    std::vector<expr_ptr> fixed;
    std::string bundle_name;
    bool has_bundle = false;
    for (const auto& p : pat_ops) {
      if (p->kind() == expr_kind::variable && rule_.bundle_vars.count(p->name()) != 0) {
        has_bundle = true;
        bundle_name = p->name();
      } else {
        fixed.push_back(p);
      }
    }
    if (fixed.size() + (has_bundle ? 1 : 0) > subject.size()) return false;
    if (!has_bundle && remainder == nullptr && fixed.size() != subject.size()) return false;

    std::vector<char> used(subject.size(), 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t pi) -> bool {
      if (pi == fixed.size()) {
        std::vector<expr_ptr> leftover;
        for (std::size_t si = 0; si < subject.size(); ++si)
          if (!used[si]) leftover.push_back(subject[si]);
        if (has_bundle) {
          if (leftover.empty()) return false;  // a bundle must absorb something
          return bind_var(bundle_name, rebundle(op, leftover), bind, k);
        }
        if (remainder != nullptr) {
          *remainder = std::move(leftover);
          if (k()) return true;
          remainder->clear();
          return false;
        }
        return leftover.empty() && k();
      }
      for (std::size_t si = 0; si < subject.size(); ++si) {
        if (used[si]) continue;
        used[si] = 1;
        if (match(fixed[pi], subject[si], bind, [&] { return assign(pi + 1); })) return true;
        used[si] = 0;
      }
      return false;
    };
    return assign(0);
  }

 private:
  static bool bind_var(const std::string& name, const expr_ptr& value, binding_map& bind,
                       const cont& k) {
    const auto it = bind.find(name);
    if (it != bind.end()) return struct_equal(it->second, value) && k();
    bind.emplace(name, value);
    if (k()) return true;
    bind.erase(name);
    return false;
  }

  const rewrite_rule& rule_;
};

expr_ptr instantiate(const expr_ptr& pat, const binding_map& bind) {
  switch (pat->kind()) {
    case expr_kind::constant:
      return pat;
    case expr_kind::variable: {
      auto it = bind.find(pat->name());
      if (it == bind.end()) throw std::logic_error("unbound pattern variable: " + pat->name());
      return it->second;
    }
    case expr_kind::rotate:
      return rotate(instantiate(pat->child(), bind));
    default:
      return dyadic(pat->kind(), instantiate(pat->left(), bind), instantiate(pat->right(), bind));
  }
}

/*! Try one rule at one node.  At an associative-commutative root the rule
 *  may consume a sub-multiset of the spine; the leftover operands are
 *  recombined with the replacement, which is sound because the operator is
 *  associative and commutative.  Returns the canonical replacement.
 */
std::optional<expr_ptr> apply_rule(const rewrite_rule& rule, const expr_ptr& node) {
  matcher m(rule);
  binding_map bind;
  if (is_ac(rule.lhs->kind())) {
    if (node->kind() != rule.lhs->kind()) return std::nullopt;
    const expr_kind op = node->kind();
    std::vector<expr_ptr> remainder;
    if (!m.match_spine(op, flatten(rule.lhs, op), flatten(node, op), bind, &remainder,
                       [] { return true; }))
      return std::nullopt;
    expr_ptr out = instantiate(rule.rhs, bind);
    if (!remainder.empty()) {
      remainder.push_back(out);
      out = rebundle(op, remainder);
    }
    return canonicalize(out);
  }
  if (!m.match(rule.lhs, node, bind, [] { return true; })) return std::nullopt;
  return canonicalize(instantiate(rule.rhs, bind));
}

// ---------------------------------------------------------------------------
// Catalog construction.  Every rule is checked before it is admitted:
// the right side introduces no variables, each spine holds at most one
// bundle variable, and the two sides evaluate identically under every
// ground substitution of the pattern variables.

int pow3(int n) {
  int r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

void check_bundle_placement(const expr_ptr& e, const rewrite_rule& r) {
  switch (e->kind()) {
    case expr_kind::constant:
    case expr_kind::variable:
      return;
    case expr_kind::rotate:
      check_bundle_placement(e->child(), r);
      return;
    default: {
      auto ops = flatten(e, e->kind());
      int bundles = 0;
      for (const auto& o : ops)
        if (o->kind() == expr_kind::variable && r.bundle_vars.count(o->name()) != 0) ++bundles;
      if (bundles > 1)
        throw std::logic_error("rule " + r.name + ": more than one bundle variable in a spine");
      for (const auto& o : ops) check_bundle_placement(o, r);
      return;
    }
  }
}

void validate_rule(const rewrite_rule& r) {
  const auto lhs_list = free_vars(r.lhs);
  const std::set<std::string> lhs_vars(lhs_list.begin(), lhs_list.end());
  for (const auto& v : free_vars(r.rhs))
    if (lhs_vars.count(v) == 0)
      throw std::logic_error("rule " + r.name + ": right side introduces variable " + v);
  for (const auto& v : r.bundle_vars)
    if (lhs_vars.count(v) == 0)
      throw std::logic_error("rule " + r.name + ": unknown bundle variable " + v);
  check_bundle_placement(r.lhs, r);

  const std::vector<std::string> vars(lhs_vars.begin(), lhs_vars.end());
  for (int code = 0; code < pow3(static_cast<int>(vars.size())); ++code) {
    assignment env;
    int rest = code;
    for (const auto& v : vars) {
      env.emplace(v, trit(rest % 3));
      rest /= 3;
    }
    if (evaluate(r.lhs, env) != evaluate(r.rhs, env))
      throw std::logic_error("rule " + r.name + " is unsound");
  }
}

std::string trit_text(trit t) { return std::string(1, static_cast<char>('0' + t.value())); }

std::vector<rewrite_rule> build_catalog() {
  std::vector<rewrite_rule> rules;
  auto add = [&](std::string name, const expr_ptr& lhs, const expr_ptr& rhs, std::string family,
                 std::set<std::string> bundles = {}) {
    rewrite_rule r{std::move(name), lhs, rhs, std::move(family), std::move(bundles)};
    validate_rule(r);
    rules.push_back(std::move(r));
  };
  auto adds = [&](std::string name, const std::string& lhs, const std::string& rhs,
                  std::string family, std::set<std::string> bundles = {}) {
    add(std::move(name), parse(lhs), parse(rhs), std::move(family), std::move(bundles));
  };

  // Ground folds, generated from the operator tables themselves.
  for (int v = 0; v < 3; ++v) {
    const trit t(v);
    adds("fold-rotate-" + trit_text(t), "~" + trit_text(t), trit_text(rotate(t)),
         "constant-fold");
  }
  struct dyadic_fold {
    const char* name;
    char symbol;
    trit (*fn)(trit, trit);
  };
  for (const dyadic_fold& d : {dyadic_fold{"alpha", '*', &alpha}, dyadic_fold{"beta", '+', &beta},
                               dyadic_fold{"gamma", '@', &gamma}}) {
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const trit tx(x), ty(y);
        adds("fold-" + std::string(d.name) + "-" + trit_text(tx) + "-" + trit_text(ty),
             trit_text(tx) + d.symbol + trit_text(ty), trit_text(d.fn(tx, ty)), "constant-fold");
      }
  }

  adds("boundedness-alpha", "x*0", "0", "boundedness", {"x"});
  adds("boundedness-beta", "x+1", "1", "boundedness", {"x"});
  adds("boundedness-gamma", "x@2", "2", "boundedness", {"x"});
  adds("identity-alpha", "x*2", "x", "identity", {"x"});
  adds("identity-beta", "x+0", "x", "identity", {"x"});
  adds("identity-gamma", "x@1", "x", "identity", {"x"});
  adds("idempotency-alpha", "x*x", "x", "idempotency");
  adds("idempotency-beta", "x+x", "x", "idempotency");
  adds("idempotency-gamma", "x@x", "x", "idempotency");
  adds("involution", "~~~x", "x", "involution");

  // Fusing a variable's two selector filters back into the bare variable
  // (or its rotation), and pushing a rotation inward across such a pair.
  adds("fusion-keep", "x*1 @ ~~x*1+2", "x", "fusion", {"x"});
  adds("fusion-rotate", "~x*1 @ x*1+2", "~x", "fusion", {"x"});
  adds("fusion-rotate2", "~~x*1 @ ~x*1+2", "~~x", "fusion", {"x"});
  adds("fusion-push-keep", "~(~x*1 @ ~~x*1+2)", "x*1 @ ~x*1+2", "fusion", {"x"});
  adds("fusion-push-rotate", "~(x*1 @ ~x*1+2)", "~~x*1 @ x*1+2", "fusion", {"x"});
  adds("fusion-push-rotate2", "~(~~x*1 @ x*1+2)", "~x*1 @ ~~x*1+2", "fusion", {"x"});

  adds("complementation-alpha", "x*~x*~~x", "0", "complementation");
  adds("complementation-beta", "x+~x+~~x", "1", "complementation");
  adds("complementation-gamma", "x@~x@~~x", "2", "complementation");

  // A variable's three selector filters together reject every value.
  adds("selector-complement", "x*1 @ ~x*1 @ ~~x*1", "0", "complementation", {"x"});

  // Five two-variable selector filters anchored at rotations (a, b) — one
  // variable swept through all three rotations against each anchor — fuse
  // into the two anchored one-variable filters.
  {
    const expr_ptr vx = variable("x");
    const expr_ptr vy = variable("y");
    const expr_ptr one = constant(trit(1));
    auto rot_n = [](expr_ptr e, int n) {
      while (n-- > 0) e = rotate(e);
      return e;
    };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        std::vector<expr_ptr> terms;
        for (int i = 0; i < 3; ++i) terms.push_back(alpha(beta(rot_n(vx, a), rot_n(vy, i)), one));
        for (int j = 0; j < 3; ++j)
          if (j != a) terms.push_back(alpha(beta(rot_n(vx, j), rot_n(vy, b)), one));
        add("selector-merge-" + std::to_string(a) + std::to_string(b),
            rebundle(expr_kind::gamma, terms), gamma(alpha(rot_n(vx, a), one), alpha(rot_n(vy, b), one)),
            "complementation");
      }
  }

  // A shared context joined with all three rotations of one variable.
  adds("selector-collapse", "(c+x)*1 @ (c+~x)*1 @ (c+~~x)*1", "c*1", "complementation", {"c"});

  // Fusion of a two-filter pair underneath a shared selector context.
  adds("selector-pair-keep", "(c+y)*1 @ (c+~~y)*1+2", "c*1+y", "complementation", {"c"});
  adds("selector-pair-rotate", "(c+~y)*1 @ (c+y)*1+2", "c*1+~y", "complementation", {"c"});
  adds("selector-pair-rotate2", "(c+~~y)*1 @ (c+~y)*1+2", "c*1+~~y", "complementation", {"c"});

  adds("demorgan-alpha", "~(x*y)", "~x@~y", "de-morgan", {"y"});
  adds("demorgan-beta", "~(x+y)", "~x*~y", "de-morgan", {"y"});
  adds("demorgan-gamma", "~(x@y)", "~x+~y", "de-morgan", {"y"});

  adds("factoring-beta-alpha", "x*y + x*z", "x*(y+z)", "factoring", {"y", "z"});
  adds("factoring-gamma-beta", "(x+y) @ (x+z)", "x+(y@z)", "factoring", {"y", "z"});
  adds("factoring-alpha-gamma", "(x@y) * (x@z)", "x@(y*z)", "factoring", {"y", "z"});

  return rules;
}

constexpr int node_local_limit = 256;

expr_ptr sweep(const expr_ptr& e, std::vector<trace_entry>* trace) {
  expr_ptr node;
  switch (e->kind()) {
    case expr_kind::constant:
    case expr_kind::variable:
      node = e;
      break;
    case expr_kind::rotate:
      node = rotate(sweep(e->child(), trace));
      break;
    default: {
      const expr_kind op = e->kind();
      std::vector<expr_ptr> ops;
      for (const auto& o : flatten(e, op)) flatten_into(sweep(o, trace), op, ops);
      sort_operands(ops);
      node = rebundle(op, ops);
      break;
    }
  }
  for (int iter = 0;; ++iter) {
    if (iter >= node_local_limit) throw std::logic_error("rewrite loop did not settle");
    const rewrite_rule* hit = nullptr;
    expr_ptr next;
    for (const rewrite_rule& rule : rule_catalog()) {
      if (auto out = apply_rule(rule, node)) {
        hit = &rule;
        next = *out;
        break;
      }
    }
    if (hit == nullptr) break;
    if (trace != nullptr) trace->push_back({hit->name, cost(node), cost(next)});
    node = std::move(next);
  }
  return node;
}

}  // namespace

const std::vector<rewrite_rule>& rule_catalog() {
  static const std::vector<rewrite_rule> catalog = build_catalog();
  return catalog;
}

const rewrite_rule* find_rule(std::string_view name) {
  for (const rewrite_rule& r : rule_catalog())
    if (r.name == name) return &r;
  return nullptr;
}

expr_ptr canonicalize(const expr_ptr& e) {
  if (!e) throw std::invalid_argument("canonicalize: null expression");
  switch (e->kind()) {
    case expr_kind::constant:
    case expr_kind::variable:
      return e;
    case expr_kind::rotate:
      return rotate(canonicalize(e->child()));
    default: {
      auto ops = flatten(e, e->kind());
      for (auto& o : ops) o = canonicalize(o);
      sort_operands(ops);
      return rebundle(e->kind(), ops);
    }
  }
}

int cost(const expr_ptr& e) {
  if (!e) throw std::invalid_argument("cost: null expression");
  // Structural interning: equal subtrees share one node, so they are paid
  // for once, exactly as in the lowered netlist.
  using node_key = std::tuple<int, int, std::string, int, int>;
  std::map<node_key, int> ids;
  int operators = 0;
  std::function<int(const expr_ptr&)> intern = [&](const expr_ptr& n) -> int {
    node_key key;
    bool is_operator = false;
    switch (n->kind()) {
      case expr_kind::constant:
        key = {0, n->value().value(), "", -1, -1};
        break;
      case expr_kind::variable:
        key = {1, 0, n->name(), -1, -1};
        break;
      case expr_kind::rotate: {
        const int c = intern(n->child());
        key = {2, 0, "", c, -1};
        is_operator = true;
        break;
      }
      default: {
        const int l = intern(n->left());
        const int r = intern(n->right());
        key = {3 + static_cast<int>(n->kind()) - static_cast<int>(expr_kind::alpha), 0, "", l, r};
        is_operator = true;
        break;
      }
    }
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(ids.size());
    ids.emplace(key, id);
    if (is_operator) ++operators;
    return id;
  };
  intern(e);
  return operators;
}

expr_ptr simplify(const expr_ptr& e, int budget, std::vector<trace_entry>* trace) {
  if (!e) throw std::invalid_argument("simplify: null expression");
  if (budget < 1) throw std::invalid_argument("simplify: budget must be at least 1");

  expr_ptr best = e;
  int best_cost = cost(e);
  std::string best_text = pretty_print(e);
  auto consider = [&](const expr_ptr& cand) {
    const int c = cost(cand);
    std::string t = pretty_print(cand);
    if (c < best_cost || (c == best_cost && t < best_text)) {
      best = cand;
      best_cost = c;
      best_text = std::move(t);
    }
  };

  expr_ptr cur = canonicalize(e);
  consider(cur);
  for (int pass = 0; pass < budget; ++pass) {
    expr_ptr next = sweep(cur, trace);
    if (struct_equal(next, cur)) break;
    cur = std::move(next);
    consider(cur);
  }
  return best;
}

}  // namespace ternlog
