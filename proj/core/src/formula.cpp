#include "su/formula.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace su {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Formula Formula::make(Kind kind, std::string name, const Formula* l,
                      const Formula* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = static_cast<std::size_t>(kind) * 0x517cc1b727220a95ULL;
  if (kind == Kind::Var) {
    h = mix(h, std::hash<std::string>{}(node->name));
  }
  if (l) {
    node->lhs = l->node_;
    h = mix(h, l->hash());
    node->nodes += l->node_count();
  }
  if (r) {
    node->rhs = r->node_;
    h = mix(h, r->hash());
    node->nodes += r->node_count();
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  static const Formula instance = make(Kind::Bottom, {}, nullptr, nullptr);
  return instance;
}

Formula Formula::var(std::string name) {
  return make(Kind::Var, std::move(name), nullptr, nullptr);
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return make(Kind::And, {}, &lhs, &rhs);
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return make(Kind::Or, {}, &lhs, &rhs);
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Kind::Implies, {}, &lhs, &rhs);
}

bool Formula::is_neg() const {
  return kind() == Kind::Implies && node_->rhs->kind == Kind::Bottom;
}

const std::string& Formula::var_name() const {
  if (!is_var()) throw Error("var_name() on a non-variable formula");
  return node_->name;
}

Formula Formula::lhs() const {
  if (!node_->lhs) throw Error("lhs() on an atomic formula");
  return Formula(node_->lhs);
}

Formula Formula::rhs() const {
  if (!node_->rhs) throw Error("rhs() on an atomic formula");
  return Formula(node_->rhs);
}

int Formula::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case Kind::Bottom:
      return 0;
    case Kind::Var:
      return a.name.compare(b.name);
    default: {
      int c = compare(*a.lhs, *b.lhs);
      if (c != 0) return c;
      return compare(*a.rhs, *b.rhs);
    }
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (hash() != other.hash()) return false;
  return compare(*node_, *other.node_) == 0;
}

bool Formula::operator<(const Formula& other) const {
  return compare(*node_, *other.node_) < 0;
}

// --- printing ---------------------------------------------------------------

namespace {

void print_rec(const Formula& f, std::string& out);

// Argument of '~': atoms and further negations stay bare.
void print_neg_arg(const Formula& f, std::string& out) {
  if (f.is_bottom() || f.is_var() || f.is_neg()) {
    print_rec(f, out);
  } else {
    out += '(';
    print_rec(f, out);
    out += ')';
  }
}

// Operand of '&' or '|'.  `same` is the operand's own kind when it may be
// flattened into the chain (left operand only, matching the left-associative
// parse).
void print_junct_arg(const Formula& f, Formula::Kind same, std::string& out) {
  bool parens;
  switch (f.kind()) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
      parens = f.kind() != same;
      break;
    case Formula::Kind::Implies:
      parens = !f.is_neg();
      break;
    default:
      parens = false;
  }
  if (parens) out += '(';
  print_rec(f, out);
  if (parens) out += ')';
}

void print_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      out += "_|_";
      return;
    case Formula::Kind::Var:
      out += f.var_name();
      return;
    case Formula::Kind::And:
      print_junct_arg(f.lhs(), Formula::Kind::And, out);
      out += " & ";
      print_junct_arg(f.rhs(), Formula::Kind::Bottom, out);
      return;
    case Formula::Kind::Or:
      print_junct_arg(f.lhs(), Formula::Kind::Or, out);
      out += " | ";
      print_junct_arg(f.rhs(), Formula::Kind::Bottom, out);
      return;
    case Formula::Kind::Implies: {
      if (f.is_neg()) {
        out += '~';
        print_neg_arg(f.lhs(), out);
        return;
      }
      Formula a = f.lhs();
      bool parens = a.kind() == Formula::Kind::Implies && !a.is_neg();
      if (parens) out += '(';
      print_rec(a, out);
      if (parens) out += ')';
      out += " -> ";
      print_rec(f.rhs(), out);  // right-associative, never parenthesized
      return;
    }
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print_rec(*this, out);
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    if (text_.empty()) throw ParseError("empty formula", 0);
    Formula f = parse_formula();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input", pos_);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError("syntax error at byte " + std::to_string(at) + ": " + msg,
                     at);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
        text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool eat_bottom() {
    skip_ws();
    if (text_.substr(pos_, 3) == "_|_") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  Formula parse_formula() {
    Formula lhs = parse_junct();
    if (eat_arrow()) return Formula::implies(std::move(lhs), parse_formula());
    return lhs;
  }

  Formula parse_junct() {
    Formula acc = parse_unary();
    skip_ws();
    if (pos_ >= text_.size()) return acc;
    char op = text_[pos_];
    if (op != '&' && op != '|') return acc;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '&' && c != '|') break;
      if (c != op)
        fail("mixing '&' and '|' requires parentheses", pos_);
      ++pos_;
      Formula rhs = parse_unary();
      acc = op == '&' ? Formula::conj(std::move(acc), std::move(rhs))
                      : Formula::disj(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Formula parse_unary() {
    skip_ws();
    if (eat('~')) return Formula::neg(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a formula", pos_);
    if (eat_bottom()) return Formula::bottom();
    if (eat('(')) {
      Formula f = parse_formula();
      skip_ws();
      if (!eat(')')) fail("expected ')'", pos_);
      return f;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_')
          ++pos_;
        else
          break;
      }
      return Formula::var(std::string(text_.substr(start, pos_ - start)));
    }
    fail("expected '_|_', a variable, '~' or '('", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

// --- variables / substitution ----------------------------------------------

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Var:
      out.insert(f.var_name());
      return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
  }
}

Formula subst_rec(const Formula& f, const SchemaSubstitution& s) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return f;
    case Formula::Kind::Var: {
      auto it = s.bindings.find(f.var_name());
      if (it == s.bindings.end())
        throw PreconditionError("instantiate: no binding for schema variable '" +
                                f.var_name() + "'");
      return it->second;
    }
    case Formula::Kind::And:
      return Formula::conj(subst_rec(f.lhs(), s), subst_rec(f.rhs(), s));
    case Formula::Kind::Or:
      return Formula::disj(subst_rec(f.lhs(), s), subst_rec(f.rhs(), s));
    default:
      return Formula::implies(subst_rec(f.lhs(), s), subst_rec(f.rhs(), s));
  }
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

Formula instantiate(const Formula& schema, const SchemaSubstitution& subst) {
  return subst_rec(schema, subst);
}

// --- axioms -----------------------------------------------------------------

Formula axiom(AxiomName name) {
  switch (name) {
    case AxiomName::Su:
      return parse_formula(
          "((~p -> q) & (~q -> p) -> r | s) -> (p -> r) | (q -> s)");
    case AxiomName::AaPlus:
      return parse_formula(
          "((p -> q) -> r | s) -> ((p -> q) -> r) | (~p -> s)");
    case AxiomName::Aa:
      return parse_formula(
          "((~p -> q) -> r | s) -> ((~p -> q) -> r) | (~~p -> s)");
    case AxiomName::Kp:
      return parse_formula("(~p -> q | r) -> (~p -> q) | (~p -> r)");
    case AxiomName::Sa:
      return parse_formula("((~~p -> p) -> p | ~p) -> ~p | ~~p");
  }
  throw Error("unknown axiom");
}

Formula axiom(std::string_view name) {
  if (name == "su") return axiom(AxiomName::Su);
  if (name == "aa_plus") return axiom(AxiomName::AaPlus);
  if (name == "aa") return axiom(AxiomName::Aa);
  if (name == "kp") return axiom(AxiomName::Kp);
  if (name == "sa") return axiom(AxiomName::Sa);
  throw Error("unknown axiom name '" + std::string(name) +
              "' (expected su, aa_plus, aa, kp or sa)");
}

}  // namespace su
