#include "pm/formula.hpp"

#include <optional>

#include "pm/error.hpp"

namespace pm {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::string variable;
  // Operand (or left) and right children; empty where unused.
  std::optional<Formula> first;
  std::optional<Formula> second;
  std::size_t operators = 0;
  std::size_t quantifiers = 0;
};

namespace {

template <typename NodeT>
std::shared_ptr<const NodeT> make_node(NodeT node) {
  return std::make_shared<const NodeT>(std::move(node));
}

}  // namespace

Formula Formula::prop_var(std::string name) {
  return Formula(make_node(Node{Kind::prop_var, std::move(name), {}, {}, {}}));
}

Formula Formula::pred_app(std::string predicate, std::string variable) {
  return Formula(make_node(
      Node{Kind::pred_app, std::move(predicate), std::move(variable), {}, {}}));
}

Formula Formula::negation(Formula operand) {
  Node n{Kind::negation, {}, {}, {}, {}};
  n.operators = operand.node_->operators + 1;
  n.quantifiers = operand.node_->quantifiers;
  n.first = std::move(operand);
  return Formula(make_node(std::move(n)));
}

Formula Formula::disjunction(Formula left, Formula right) {
  Node n{Kind::disjunction, {}, {}, {}, {}};
  n.operators = left.node_->operators + right.node_->operators + 1;
  n.quantifiers = left.node_->quantifiers + right.node_->quantifiers;
  n.first = std::move(left);
  n.second = std::move(right);
  return Formula(make_node(std::move(n)));
}

Formula Formula::universal(std::string variable, Formula body) {
  Node n{Kind::universal, {}, std::move(variable), {}, {}};
  n.operators = body.node_->operators + 1;
  n.quantifiers = body.node_->quantifiers + 1;
  n.first = std::move(body);
  return Formula(make_node(std::move(n)));
}

Formula Formula::existential(std::string variable, Formula body) {
  Node n{Kind::existential, {}, std::move(variable), {}, {}};
  n.operators = body.node_->operators + 1;
  n.quantifiers = body.node_->quantifiers + 1;
  n.first = std::move(body);
  return Formula(make_node(std::move(n)));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return disjunction(negation(std::move(antecedent)), std::move(consequent));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return negation(
      disjunction(negation(std::move(left)), negation(std::move(right))));
}

Formula Formula::equivalence(Formula left, Formula right) {
  return conjunction(implication(left, right), implication(right, left));
}

Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::string& Formula::variable() const { return node_->variable; }

const Formula& Formula::operand() const {
  if (!node_->first || node_->second) throw Error("formula has no operand");
  return *node_->first;
}

const Formula& Formula::left() const {
  if (node_->kind != Kind::disjunction) throw Error("formula is not binary");
  return *node_->first;
}

const Formula& Formula::right() const {
  if (node_->kind != Kind::disjunction) throw Error("formula is not binary");
  return *node_->second;
}

std::size_t Formula::operator_count() const noexcept { return node_->operators; }
std::size_t Formula::quantifier_count() const noexcept {
  return node_->quantifiers;
}

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Kind::prop_var:
      return a.name() <=> b.name();
    case Kind::pred_app:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.variable() <=> b.variable();
    case Kind::negation:
      return a.operand() <=> b.operand();
    case Kind::disjunction:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    case Kind::universal:
    case Kind::existential:
      if (auto c = a.variable() <=> b.variable(); c != 0) return c;
      return a.operand() <=> b.operand();
  }
  return std::strong_ordering::equal;
}

namespace {

// `tail` is set when nothing follows the formula inside its enclosing group,
// so a dotted quantifier printed there cannot swallow a following operand.
void print_into(const Formula& f, bool tail, std::string& out) {
  switch (f.kind()) {
    case Kind::prop_var:
      out += f.name();
      return;
    case Kind::pred_app:
      out += f.name();
      out += '(';
      out += f.variable();
      out += ')';
      return;
    case Kind::negation:
      out += '~';
      print_into(f.operand(), tail, out);
      return;
    case Kind::disjunction:
      out += '(';
      print_into(f.left(), false, out);
      out += " v ";
      print_into(f.right(), true, out);
      out += ')';
      return;
    case Kind::universal:
    case Kind::existential: {
      if (!tail) out += '(';
      out += f.kind() == Kind::universal ? "(" : "(E";
      out += f.variable();
      out += ").";
      print_into(f.operand(), true, out);
      if (!tail) out += ')';
      return;
    }
  }
}

void print_tree_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::prop_var:
      out += f.name();
      return;
    case Kind::pred_app:
      out += f.name() + "(" + f.variable() + ")";
      return;
    case Kind::negation:
      out += "Not(";
      print_tree_into(f.operand(), out);
      out += ')';
      return;
    case Kind::disjunction:
      out += "Or(";
      print_tree_into(f.left(), out);
      out += ',';
      print_tree_into(f.right(), out);
      out += ')';
      return;
    case Kind::universal:
    case Kind::existential:
      out += f.kind() == Kind::universal ? "ForAll(" : "Exists(";
      out += f.variable();
      out += ',';
      print_tree_into(f.operand(), out);
      out += ')';
      return;
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::prop_var:
      return;
    case Kind::pred_app:
      if (!bound.contains(f.variable())) out.insert(f.variable());
      return;
    case Kind::negation:
      collect_free(f.operand(), bound, out);
      return;
    case Kind::disjunction:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Kind::universal:
    case Kind::existential: {
      bool inserted = bound.insert(f.variable()).second;
      collect_free(f.operand(), bound, out);
      if (inserted) bound.erase(f.variable());
      return;
    }
  }
}

template <typename Visit>
void visit_leaves(const Formula& f, Visit&& visit) {
  switch (f.kind()) {
    case Kind::prop_var:
    case Kind::pred_app:
      visit(f);
      return;
    case Kind::negation:
    case Kind::universal:
    case Kind::existential:
      visit_leaves(f.operand(), visit);
      return;
    case Kind::disjunction:
      visit_leaves(f.left(), visit);
      visit_leaves(f.right(), visit);
      return;
  }
}

// Walks free occurrences of x; `binders` counts how often z is bound above.
bool free_for(const Formula& f, const std::string& x, const std::string& z,
              int z_binders) {
  switch (f.kind()) {
    case Kind::prop_var:
      return true;
    case Kind::pred_app:
      return f.variable() != x || z_binders == 0;
    case Kind::negation:
      return free_for(f.operand(), x, z, z_binders);
    case Kind::disjunction:
      return free_for(f.left(), x, z, z_binders) &&
             free_for(f.right(), x, z, z_binders);
    case Kind::universal:
    case Kind::existential:
      if (f.variable() == x) return true;  // x no longer free below
      return free_for(f.operand(), x, z,
                      z_binders + (f.variable() == z ? 1 : 0));
  }
  return true;
}

Formula rename_free(const Formula& f, const std::string& x,
                    const std::string& z) {
  switch (f.kind()) {
    case Kind::prop_var:
      return f;
    case Kind::pred_app:
      return f.variable() == x ? Formula::pred_app(f.name(), z) : f;
    case Kind::negation:
      return Formula::negation(rename_free(f.operand(), x, z));
    case Kind::disjunction:
      return Formula::disjunction(rename_free(f.left(), x, z),
                                  rename_free(f.right(), x, z));
    case Kind::universal:
      if (f.variable() == x) return f;
      return Formula::universal(f.variable(), rename_free(f.operand(), x, z));
    case Kind::existential:
      if (f.variable() == x) return f;
      return Formula::existential(f.variable(),
                                  rename_free(f.operand(), x, z));
  }
  return f;
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, true, out);
  return out;
}

std::string print_tree(const Formula& f) {
  std::string out;
  print_tree_into(f, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> propositional_variables(const Formula& f) {
  std::set<std::string> out;
  visit_leaves(f, [&](const Formula& leaf) {
    if (leaf.kind() == Kind::prop_var) out.insert(leaf.name());
  });
  return out;
}

std::set<std::string> predicates(const Formula& f) {
  std::set<std::string> out;
  visit_leaves(f, [&](const Formula& leaf) {
    if (leaf.kind() == Kind::pred_app) out.insert(leaf.name());
  });
  return out;
}

bool is_propositional(const Formula& f) {
  if (f.quantifier_count() != 0) return false;
  bool ok = true;
  visit_leaves(f, [&](const Formula& leaf) {
    if (leaf.kind() != Kind::prop_var) ok = false;
  });
  return ok;
}

bool is_free_for(const Formula& f, const std::string& x, const std::string& z) {
  return free_for(f, x, z, 0);
}

Formula substitute(const Formula& f, const std::string& x,
                   const std::string& z) {
  if (x == z) return f;
  if (!is_free_for(f, x, z)) {
    throw CaptureError(z + " is not free for " + x + " in " + print(f));
  }
  return rename_free(f, x, z);
}

Formula substitute_propositional(const Formula& f,
                                 const std::map<std::string, Formula>& subst) {
  switch (f.kind()) {
    case Kind::prop_var: {
      auto it = subst.find(f.name());
      return it == subst.end() ? f : it->second;
    }
    case Kind::pred_app:
      return f;
    case Kind::negation:
      return Formula::negation(substitute_propositional(f.operand(), subst));
    case Kind::disjunction:
      return Formula::disjunction(substitute_propositional(f.left(), subst),
                                  substitute_propositional(f.right(), subst));
    case Kind::universal:
      return Formula::universal(f.variable(),
                                substitute_propositional(f.operand(), subst));
    case Kind::existential:
      return Formula::existential(
          f.variable(), substitute_propositional(f.operand(), subst));
  }
  return f;
}

VariantClass variants(const Formula& f, const std::string& x,
                      const std::set<std::string>& pool) {
  if (pool.empty()) throw EvaluationError("variant pool is empty");
  if (!free_variables(f).contains(x)) {
    throw EvaluationError(x + " does not occur free in " + print(f));
  }
  VariantClass out{f, x, {}};
  for (const auto& z : pool) out.members.emplace_back(z, substitute(f, x, z));
  return out;
}

}  // namespace pm
