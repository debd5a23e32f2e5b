// Formula syntax tree for the propositional and monadic first-order
// fragments, plus the structural operations on it: printing, free variables,
// capture-checked substitution and variant classes.

#ifndef PM_FORMULA_HPP
#define PM_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pm {

enum class Kind : std::uint8_t {
  prop_var,
  pred_app,
  negation,
  disjunction,
  universal,
  existential,
};

// Immutable, cheaply copyable formula. Only primitive nodes are ever stored:
// implication, conjunction and equivalence are desugared on construction.
class Formula {
 public:
  static Formula prop_var(std::string name);
  static Formula pred_app(std::string predicate, std::string variable);
  static Formula negation(Formula operand);
  static Formula disjunction(Formula left, Formula right);
  static Formula universal(std::string variable, Formula body);
  static Formula existential(std::string variable, Formula body);

  // p => q  :=  ~p v q
  static Formula implication(Formula antecedent, Formula consequent);
  // p . q  :=  ~(~p v ~q)
  static Formula conjunction(Formula left, Formula right);
  // p <=> q  :=  (p => q) . (q => p)
  static Formula equivalence(Formula left, Formula right);

  Kind kind() const noexcept;

  // Propositional variable name or predicate name.
  const std::string& name() const;
  // Argument of a predicate application or the variable bound by a quantifier.
  const std::string& variable() const;
  // Operand of a negation or body of a quantifier. The part accessors throw
  // Error on nodes without that part.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  bool is_quantifier() const noexcept {
    return kind() == Kind::universal || kind() == Kind::existential;
  }

  // Number of operator nodes (negations, disjunctions, quantifiers).
  std::size_t operator_count() const noexcept;
  std::size_t quantifier_count() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Canonical fully parenthesized ASCII rendering; parse(print(f)) == f.
std::string print(const Formula& f);

// Constructor-style rendering, e.g. Or(Not(p),q).
std::string print_tree(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> propositional_variables(const Formula& f);
std::set<std::string> predicates(const Formula& f);

bool is_propositional(const Formula& f);

// True when no free occurrence of `x` in `f` lies in the scope of a
// quantifier binding `z`.
bool is_free_for(const Formula& f, const std::string& x, const std::string& z);

// f[z|x]: every free occurrence of x replaced by z. Throws CaptureError when
// z is not free for x in f.
Formula substitute(const Formula& f, const std::string& x, const std::string& z);

// Simultaneous uniform substitution of formulas for propositional variables.
// Variables absent from the map are left alone.
Formula substitute_propositional(const Formula& f,
                                 const std::map<std::string, Formula>& subst);

// A finite truncation of the variant class p[_|x] to an explicit pool.
struct VariantClass {
  Formula base;
  std::string variable;
  std::vector<std::pair<std::string, Formula>> members;
};

VariantClass variants(const Formula& f, const std::string& x,
                      const std::set<std::string>& pool);

}  // namespace pm

#endif  // PM_FORMULA_HPP
