// Interpretation of the monadic first-order fragment over finite worlds.
//
// Predicate applications get world-grounded base Meanings, universal
// quantification merges the Meanings of all instances member-wise (the dotted
// union), and existential quantification pools their members. Propositional
// variables and the connectives are handled as in the propositional fragment.

#ifndef PM_FO_SEMANTICS_HPP
#define PM_FO_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/formula.hpp"
#include "pm/meaning.hpp"
#include "pm/ontology.hpp"
#include "pm/prop_semantics.hpp"

namespace pm {

// xi: individual variables to individuals. Quantifiers range over the images
// of `pool`, which must cover every individual of the world.
struct FoBinding {
  World world;
  std::map<std::string, std::string> xi;
  std::vector<std::string> pool;

  // One pool variable per individual, in order: x, y, z, x1, y1, z1, ...
  static FoBinding over(const World& w);

  // Throws EvaluationError unless xi is total on the pool and onto the
  // world's individuals.
  void validate() const;

  const std::string& individual_of(const std::string& variable) const;
};

std::vector<std::string> default_pool(std::size_t size);

// Base Meaning template for a monadic predicate; the single argument position
// is the tracked occurrence of the variable.
struct ThetaTemplate {
  std::string predicate;
  std::vector<std::size_t> marked_positions{0};
};

Meaning theta_base(const ThetaTemplate& t, const std::string& variable,
                   const FoBinding& b);

// Members in alignment order: all-diagonal members first, then by size, then
// lexicographically. Corresponding members of dotted-union operands are the
// ones at equal positions in this order.
std::vector<Member> alignment_order(const Meaning& m);

enum class MergeShape : std::uint8_t {
  // Operands must have equal member counts.
  strict,
  // Shorter operands are read as indexed families repeating their last
  // aligned member, so set collapse does not block the merge.
  repeat_last,
};

// Member-wise union of corresponding members. Throws StructureMismatch on
// unequal member counts under MergeShape::strict, EvaluationError on an empty
// sequence.
Meaning dotted_union(const std::vector<Meaning>& meanings,
                     MergeShape shape = MergeShape::strict);

struct BaseMode {
  enum class Kind : std::uint8_t { all, any };

  Kind kind = Kind::all;
  std::string variable;  // designated pool variable for Kind::any

  static BaseMode all() { return {}; }
  static BaseMode any(std::string variable) {
    return {Kind::any, std::move(variable)};
  }
};

std::string to_string(const BaseMode& mode);
// "all" or "any:<var>".
BaseMode parse_base_mode(const std::string& text);

// A predicate application whose variable is bound by an enclosing quantifier
// is evaluated at the individual the quantifier instance assigns. A free one
// falls to the base case: the dotted union over all pool variants (all), or
// the designated variable's instance (any).
Meaning eval_fo(const Formula& f, const FoBinding& b, const PropAssignment& h,
                TransversalPolicy policy = TransversalPolicy::minimal,
                const BaseMode& base_mode = BaseMode::all());

struct FoValidity {
  bool logical_truth = true;
  std::size_t checked = 0;
  std::optional<World> witness_world;
  std::optional<PropAssignment> witness_assignment;
};

// True iff the closed formula comes out true in every world under every
// enumerated assignment. Worlds lacking constants for the formula's
// propositional variables get upper-cased ones added.
FoValidity is_fo_logical_truth(
    const Formula& f, const std::vector<World>& worlds,
    const AssignmentMode& mode,
    TransversalPolicy policy = TransversalPolicy::minimal);

// Every world with 1..max_individuals individuals (a, b, c, ...) and one
// unary relation per predicate, over all extensions.
std::vector<World> monadic_worlds(const std::set<std::string>& predicates,
                                  std::size_t max_individuals);

// Copy of `w` with an upper-cased constant (default true) added for each
// variable the world cannot already supply.
World with_constants_for(const World& w, const std::set<std::string>& variables);

}  // namespace pm

#endif  // PM_FO_SEMANTICS_HPP
