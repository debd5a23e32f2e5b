// Interpretation functions for the propositional fragment: a formula is
// evaluated to a Meaning under an assignment of Meanings to its variables,
// and truth and tautology are read off those Meanings.

#ifndef PM_PROP_SEMANTICS_HPP
#define PM_PROP_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/formula.hpp"
#include "pm/meaning.hpp"
#include "pm/ontology.hpp"

namespace pm {

// h: propositional variables to Meanings, grounded in a world whose complexes
// every assigned Meaning is built from.
struct PropAssignment {
  std::map<std::string, Meaning> values;
  World world;
  // Canonical assignments record which constant stands for each variable.
  std::map<std::string, std::string> constants;

  // Throws EvaluationError for an unassigned variable.
  const Meaning& at(const std::string& variable) const;
};

// "p=T q=F" for canonical assignments; rendered Meanings otherwise.
std::string describe(const PropAssignment& h);

// The ordered pair of a formula and its Meaning under a fixed assignment.
struct Proposition {
  Formula formula;
  Meaning meaning;
};

Meaning eval_prop(const Formula& f, const PropAssignment& h,
                  TransversalPolicy policy = TransversalPolicy::minimal);

Proposition make_proposition(
    const Formula& f, const PropAssignment& h,
    TransversalPolicy policy = TransversalPolicy::minimal);

struct AssignmentMode {
  enum class Kind : std::uint8_t { canonical, sampled };

  Kind kind = Kind::canonical;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t size_bound = 0;

  static AssignmentMode canonical() { return {}; }
  static AssignmentMode sampled(std::uint64_t seed, std::size_t count,
                                std::size_t size_bound) {
    return {Kind::sampled, seed, count, size_bound};
  }
};

// Canonical: 2^n assignments sending each variable to the true or false atom
// Meaning of its own propositional constant (matched by upper-cased name,
// then remaining constants in name order), each grounded in a copy of `w`
// where that constant has the corresponding value. Rows run TT..., TF...,
// ..., FF... with variables in name order.
//
// Sampled: `count` assignments of pseudo-random Meanings over b0(w), each
// with 1..size_bound members of 1..size_bound pairs, reproducible from seed.
std::vector<PropAssignment> enumerate_assignments(
    const std::set<std::string>& variables, const World& w,
    const AssignmentMode& mode);

// A world with one propositional constant per variable, named by upper-casing
// the variable (p -> P), all true.
World world_for_variables(const std::set<std::string>& variables);

enum class Verdict : std::uint8_t { tautology, contradiction, contingent };

std::string to_string(Verdict v);

struct TautologyResult {
  Verdict verdict = Verdict::contingent;
  std::size_t checked = 0;
  // First assignment under which the formula is true / false, if any.
  std::optional<PropAssignment> true_witness;
  std::optional<PropAssignment> false_witness;
};

TautologyResult is_tautology(
    const Formula& f, const World& w, const AssignmentMode& mode,
    TransversalPolicy policy = TransversalPolicy::minimal);

}  // namespace pm

#endif  // PM_PROP_SEMANTICS_HPP
