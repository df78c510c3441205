#include <ternlog/expr.hpp>

#include <cctype>
#include <set>

namespace ternlog {

trit expr::value() const {
  if (kind_ != expr_kind::constant) throw std::logic_error("value() on non-constant node");
  return value_;
}

const std::string& expr::name() const {
  if (kind_ != expr_kind::variable) throw std::logic_error("name() on non-variable node");
  return name_;
}

const expr_ptr& expr::child() const {
  if (kind_ != expr_kind::rotate) throw std::logic_error("child() on non-rotate node");
  return a_;
}

const expr_ptr& expr::left() const {
  if (!is_dyadic()) throw std::logic_error("left() on non-dyadic node");
  return a_;
}

const expr_ptr& expr::right() const {
  if (!is_dyadic()) throw std::logic_error("right() on non-dyadic node");
  return b_;
}

expr_ptr constant(trit v) {
  return expr_ptr{new expr{expr_kind::constant, v, {}, nullptr, nullptr}};
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

expr_ptr variable(std::string name) {
  if (!valid_name(name)) {
    throw std::invalid_argument("invalid variable name: \"" + name + "\"");
  }
  return expr_ptr{new expr{expr_kind::variable, trit{}, std::move(name), nullptr, nullptr}};
}

expr_ptr rotate(expr_ptr e) {
  if (!e) throw std::invalid_argument("rotate: null operand");
  return expr_ptr{new expr{expr_kind::rotate, trit{}, {}, std::move(e), nullptr}};
}

expr_ptr dyadic(expr_kind op, expr_ptr l, expr_ptr r) {
  if (op != expr_kind::alpha && op != expr_kind::beta && op != expr_kind::gamma) {
    throw std::invalid_argument("dyadic: not a dyadic operator kind");
  }
  if (!l || !r) throw std::invalid_argument("dyadic: null operand");
  return expr_ptr{new expr{op, trit{}, {}, std::move(l), std::move(r)}};
}

expr_ptr alpha(expr_ptr l, expr_ptr r) { return dyadic(expr_kind::alpha, std::move(l), std::move(r)); }
expr_ptr beta(expr_ptr l, expr_ptr r) { return dyadic(expr_kind::beta, std::move(l), std::move(r)); }
expr_ptr gamma(expr_ptr l, expr_ptr r) { return dyadic(expr_kind::gamma, std::move(l), std::move(r)); }

bool struct_equal(const expr_ptr& a, const expr_ptr& b) {
  if (a.get() == b.get()) return true;  // aliasing shortcut only; fall through for copies
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case expr_kind::constant: return a->value() == b->value();
    case expr_kind::variable: return a->name() == b->name();
    case expr_kind::rotate: return struct_equal(a->child(), b->child());
    default:
      return struct_equal(a->left(), b->left()) && struct_equal(a->right(), b->right());
  }
}

namespace {

int order_class(const expr_ptr& e) {
  switch (e->kind()) {
    case expr_kind::constant: return 0;
    case expr_kind::variable: return 1;
    default: return 2;
  }
}

}  // namespace

std::strong_ordering struct_compare(const expr_ptr& a, const expr_ptr& b) {
  if (auto c = order_class(a) <=> order_class(b); c != 0) return c;
  switch (a->kind()) {
    case expr_kind::constant: return a->value().value() <=> b->value().value();
    case expr_kind::variable: return a->name() <=> b->name();
    default: break;
  }
  // compound: rotate < alpha < beta < gamma, then children lexicographically
  if (auto c = static_cast<int>(a->kind()) <=> static_cast<int>(b->kind()); c != 0) return c;
  if (a->kind() == expr_kind::rotate) return struct_compare(a->child(), b->child());
  if (auto c = struct_compare(a->left(), b->left()); c != 0) return c;
  return struct_compare(a->right(), b->right());
}

parse_error::parse_error(const std::string& what, std::size_t off)
    : std::runtime_error{what + " at offset " + std::to_string(off)}, offset{off} {}

namespace {

/* Recursive-descent parser for the grammar
 *   gamma := beta  ('@' beta)*
 *   beta  := alpha ('+' alpha)*
 *   alpha := unary ('*' unary)*
 *   unary := '~' unary | '0'|'1'|'2' | ident | '(' gamma ')'
 */
class parser {
public:
  explicit parser(std::string_view text) : text_{text} {}

  expr_ptr run() {
    skip_ws();
    if (at_end()) throw parse_error("empty expression", pos_);
    auto e = parse_gamma();
    skip_ws();
    if (!at_end()) throw parse_error("unexpected trailing input", pos_);
    return e;
  }

private:
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  expr_ptr parse_gamma() {
    auto e = parse_beta();
    while (accept('@')) e = gamma(std::move(e), parse_beta());
    return e;
  }

  expr_ptr parse_beta() {
    auto e = parse_alpha();
    while (accept('+')) e = beta(std::move(e), parse_alpha());
    return e;
  }

  expr_ptr parse_alpha() {
    auto e = parse_unary();
    while (accept('*')) e = alpha(std::move(e), parse_unary());
    return e;
  }

  expr_ptr parse_unary() {
    skip_ws();
    if (at_end()) throw parse_error("expected operand", pos_);
    if (peek() == '~') {
      ++pos_;
      return rotate(parse_unary());
    }
    return parse_primary();
  }

  expr_ptr parse_primary() {
    skip_ws();
    if (at_end()) throw parse_error("expected operand", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = parse_gamma();
      skip_ws();
      if (at_end() || peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (c >= '0' && c <= '2') {
      ++pos_;
      return constant(trit{c - '0'});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      throw parse_error("constants are 0, 1 or 2", pos_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      return variable(std::string{text_.substr(start, pos_ - start)});
    }
    throw parse_error(std::string{"unexpected character '"} + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_{0};
};

int precedence(expr_kind k) {
  switch (k) {
    case expr_kind::gamma: return 0;
    case expr_kind::beta: return 1;
    case expr_kind::alpha: return 2;
    case expr_kind::rotate: return 3;
    default: return 4;  // atoms never need parentheses
  }
}

char op_char(expr_kind k) {
  switch (k) {
    case expr_kind::alpha: return '*';
    case expr_kind::beta: return '+';
    default: return '@';
  }
}

void print(const expr_ptr& e, std::string& out) {
  switch (e->kind()) {
    case expr_kind::constant:
      out += static_cast<char>('0' + e->value().value());
      return;
    case expr_kind::variable:
      out += e->name();
      return;
    case expr_kind::rotate: {
      out += '~';
      const bool parens = precedence(e->child()->kind()) < precedence(expr_kind::rotate);
      if (parens) out += '(';
      print(e->child(), out);
      if (parens) out += ')';
      return;
    }
    default: {
      const int prec = precedence(e->kind());
      // left child of a left-associative operator tolerates equal precedence
      const bool lparens = precedence(e->left()->kind()) < prec;
      const bool rparens = precedence(e->right()->kind()) <= prec;
      if (lparens) out += '(';
      print(e->left(), out);
      if (lparens) out += ')';
      out += op_char(e->kind());
      if (rparens) out += '(';
      print(e->right(), out);
      if (rparens) out += ')';
      return;
    }
  }
}

}  // namespace

expr_ptr parse(std::string_view text) { return parser{text}.run(); }

std::string pretty_print(const expr_ptr& e) {
  std::string out;
  print(e, out);
  return out;
}

trit evaluate(const expr_ptr& e, const assignment& env) {
  switch (e->kind()) {
    case expr_kind::constant:
      return e->value();
    case expr_kind::variable: {
      const auto it = env.find(e->name());
      if (it == env.end()) throw eval_error("unbound variable: " + e->name());
      return it->second;
    }
    case expr_kind::rotate:
      return rotate(evaluate(e->child(), env));
    case expr_kind::alpha:
      return alpha(evaluate(e->left(), env), evaluate(e->right(), env));
    case expr_kind::beta:
      return beta(evaluate(e->left(), env), evaluate(e->right(), env));
    default:
      return gamma(evaluate(e->left(), env), evaluate(e->right(), env));
  }
}

namespace {

void collect_vars(const expr_ptr& e, std::set<std::string>& out) {
  switch (e->kind()) {
    case expr_kind::constant: return;
    case expr_kind::variable: out.insert(e->name()); return;
    case expr_kind::rotate: collect_vars(e->child(), out); return;
    default:
      collect_vars(e->left(), out);
      collect_vars(e->right(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> free_vars(const expr_ptr& e) {
  std::set<std::string> vars;
  collect_vars(e, vars);
  return {vars.begin(), vars.end()};
}

expr_ptr substitute(const expr_ptr& e, const std::map<std::string, expr_ptr>& map) {
  switch (e->kind()) {
    case expr_kind::constant:
      return e;
    case expr_kind::variable: {
      const auto it = map.find(e->name());
      return it == map.end() ? e : it->second;
    }
    case expr_kind::rotate:
      return rotate(substitute(e->child(), map));
    default:
      return dyadic(e->kind(), substitute(e->left(), map), substitute(e->right(), map));
  }
}

}  // namespace ternlog
