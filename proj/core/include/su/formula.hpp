// Propositional formulas over bottom, variables, conjunction, disjunction
// and implication.  Negation is definitional sugar: ~a is a -> _|_ and is
// never a distinct node.
//
// Concrete syntax accepted by parse() and produced by str():
//
//   formula := junct ('->' formula)?          right-associative
//   junct   := unary ('&' unary)*             or
//              unary ('|' unary)*             mixing '&' with '|' without
//                                             parentheses is a syntax error
//   unary   := '~' unary | atom
//   atom    := '_|_' | variable | '(' formula ')'
//
// '&' and '|' share one precedence level below '~' and above '->'.
// Variables match [a-zA-Z][a-zA-Z0-9_]*.

#ifndef SU_FORMULA_HPP
#define SU_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "su/errors.hpp"

namespace su {

class Formula {
 public:
  enum class Kind { Bottom, Var, And, Or, Implies };

  static Formula bottom();
  static Formula var(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula neg(Formula arg) { return implies(std::move(arg), bottom()); }

  Kind kind() const { return node_->kind; }
  bool is_bottom() const { return kind() == Kind::Bottom; }
  bool is_var() const { return kind() == Kind::Var; }
  // True for Implies(x, Bottom), the definitional shape of ~x.
  bool is_neg() const;

  const std::string& var_name() const;  // Var only
  Formula lhs() const;                  // And/Or/Implies only
  Formula rhs() const;

  std::size_t hash() const { return node_->hash; }
  std::size_t node_count() const { return node_->nodes; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  // Deterministic structural order (kind, then name/children).
  bool operator<(const Formula& other) const;

  // Minimal-parenthesization round-trip form; parse(str()) == *this.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;  // Var only
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t hash = 0;
    std::size_t nodes = 1;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, const Formula* l,
                      const Formula* r);
  static int compare(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

// Parses the grammar above.  Throws ParseError with the byte offset of the
// first offending character.
Formula parse_formula(std::string_view text);

inline std::string print_formula(const Formula& f) { return f.str(); }

// The exact set of variable names occurring in f.
std::set<std::string> variables(const Formula& f);

// Simultaneous substitution of formulas for variables.  Must bind every
// variable of the schema; bindings for variables not occurring in the schema
// are ignored.
struct SchemaSubstitution {
  std::map<std::string, Formula> bindings;
};

// Throws PreconditionError when a schema variable has no binding.
Formula instantiate(const Formula& schema, const SchemaSubstitution& subst);

// Built-in axiom constants, variables named p, q, r, s:
//   su      ((~p -> q) & (~q -> p) -> r | s) -> (p -> r) | (q -> s)
//   aa_plus ((p -> q) -> r | s) -> ((p -> q) -> r) | (~p -> s)
//   aa      ((~p -> q) -> r | s) -> ((~p -> q) -> r) | (~~p -> s)
//   kp      (~p -> q | r) -> (~p -> q) | (~p -> r)
//   sa      ((~~p -> p) -> p | ~p) -> ~p | ~~p
enum class AxiomName { Su, AaPlus, Aa, Kp, Sa };

Formula axiom(AxiomName name);
// Accepts "su", "aa_plus", "aa", "kp", "sa"; throws Error on unknown names.
Formula axiom(std::string_view name);

}  // namespace su

#endif  // SU_FORMULA_HPP
