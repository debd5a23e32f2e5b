// Classical ground truth: truth tables, Tarskian satisfaction over finite
// models, exhaustive formula enumeration, and the sweeps that compare the
// Meaning-based evaluators against them.
//
// Nothing here calls into the Meaning evaluators except through the
// Evaluators handed to check_equivalence.

#ifndef PM_ORACLE_HPP
#define PM_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pm/fo_semantics.hpp"
#include "pm/formula.hpp"
#include "pm/meaning.hpp"
#include "pm/ontology.hpp"
#include "pm/prop_semantics.hpp"

namespace pm {

using Valuation = std::map<std::string, bool>;

// Throws EvaluationError for quantifiers, predicates or unvalued variables.
bool truth_table_eval(const Formula& f, const Valuation& v);

struct TarskiModel {
  std::vector<std::string> domain;
  std::map<std::string, std::set<std::vector<std::string>>> extensions;
  // Truth values of the formula's propositional variables.
  Valuation prop_values;

  // Extensions from the world's facts; prop_values left empty.
  static TarskiModel from_world(const World& w);
};

using Environment = std::map<std::string, std::string>;

// Throws EvaluationError for unbound variables or unknown symbols.
bool tarski_eval(const Formula& f, const TarskiModel& m,
                 const Environment& env = {});

// All formulas over the propositional variables and the predicates applied
// to individual variables x, y, z, x1, ... (as many as max_quantifiers, at
// least one when predicates are given) with at most max_depth operators and
// max_quantifiers quantifiers. Ordered by operator count, then quantifier
// count, then construction order (negations, quantifications, disjunctions
// split left-smallest first); no duplicates.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars,
                                        const std::vector<std::string>& preds,
                                        std::size_t max_depth,
                                        std::size_t max_quantifiers);

using PropEvaluatorFn =
    std::function<Meaning(const Formula&, const PropAssignment&,
                          TransversalPolicy)>;
using FoEvaluatorFn =
    std::function<Meaning(const Formula&, const FoBinding&,
                          const PropAssignment&, TransversalPolicy,
                          const BaseMode&)>;

struct Evaluators {
  PropEvaluatorFn prop;
  FoEvaluatorFn fo;

  static Evaluators standard();
};

struct SweepConfig {
  // Propositional sweep.
  bool propositional = true;
  std::size_t prop_vars = 3;
  std::size_t prop_depth = 5;
  std::vector<TransversalPolicy> policies{TransversalPolicy::minimal,
                                          TransversalPolicy::full};
  AssignmentMode mode = AssignmentMode::canonical();

  // First-order sweep: closed formulas only, base mode all.
  bool first_order = true;
  std::size_t fo_depth = 4;
  std::size_t quantifiers = 2;
  std::size_t predicates = 2;
  std::size_t fo_prop_vars = 1;
  std::size_t max_individuals = 3;
  TransversalPolicy fo_policy = TransversalPolicy::minimal;

  // Disagreements listed per sweep; all are counted.
  std::size_t record_limit = 20;
};

struct Disagreement {
  // "oracle", "policy" (minimal and full truth differ), "closure" (Meaning
  // invariant broken) or "error" (evaluator threw).
  std::string kind;
  std::string formula;
  std::string assignment;
  std::string world;
  std::string policy;
  bool expected = false;
  std::optional<bool> got;
  std::string error;
};

struct SweepReport {
  std::string name;
  std::size_t formulas = 0;
  std::size_t checks = 0;
  std::size_t oracle_disagreements = 0;
  std::size_t policy_mismatches = 0;
  std::size_t closure_violations = 0;
  std::size_t errors = 0;
  // Only the first record_limit, in enumeration order.
  std::vector<Disagreement> records;

  std::size_t total() const {
    return oracle_disagreements + policy_mismatches + closure_violations +
           errors;
  }
};

struct EquivalenceReport {
  SweepConfig config;
  std::vector<SweepReport> sweeps;

  std::size_t total_disagreements() const;
  // First disagreement in enumeration order across sweeps.
  std::optional<Disagreement> minimal_counterexample() const;
};

EquivalenceReport check_equivalence(
    const SweepConfig& config,
    const Evaluators& evaluators = Evaluators::standard());

// Stable structured form: no timestamps, keys sorted.
nlohmann::json to_json(const EquivalenceReport& report);
std::string to_text(const EquivalenceReport& report);

// "{a,b} S={a} T={} P=T"
std::string describe_world(const World& w);

}  // namespace pm

#endif  // PM_ORACLE_HPP
