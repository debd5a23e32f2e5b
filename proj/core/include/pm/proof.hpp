// Checker for propositional proof scripts built from the primitive
// propositions *1.2-*1.6 by modus ponens (*1.1) and uniform substitution.
//
// Script format, one step per line ('#' comments and blank lines skipped):
//
//   <label> <formula> ; AX <schema> <var>=<formula>,...
//   <label> <formula> ; MP <major-label> <minor-label>
//   <label> <formula> ; SUB <label> <var>=<formula>,...
//
// Schemas: Taut, Add, Perm, Assoc, Sum. An AX step must give a formula for
// every variable of its schema. The major premiss of MP is the conditional.

#ifndef PM_PROOF_HPP
#define PM_PROOF_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pm/formula.hpp"

namespace pm {

struct Justification {
  enum class Kind : std::uint8_t { axiom, modus_ponens, substitution };

  Kind kind = Kind::axiom;
  std::string schema;                      // axiom
  std::string major;                       // modus ponens
  std::string minor;                       // modus ponens
  std::string source;                      // substitution
  std::map<std::string, Formula> mapping;  // axiom, substitution
};

struct ProofLine {
  std::string label;
  Formula formula;
  Justification justification;
  std::size_t source_line = 0;
};

struct ProofScript {
  std::vector<ProofLine> lines;
};

// Throws ProofFormatError for malformed lines (including formula syntax).
ProofScript parse_proof_script(std::string_view text);
ProofScript load_proof_script(const std::string& path);

// Throws EvaluationError for an unknown schema or a mapping that misses one
// of the schema's variables.
Formula axiom_instance(const std::string& schema,
                       const std::map<std::string, Formula>& subst);

// The schema itself, over p, q, r.
Formula axiom_schema(const std::string& schema);
std::vector<std::string> axiom_names();

// From ~X v Y and X, yields Y. Throws EvaluationError when the major premiss
// is not a conditional or its antecedent differs from the minor premiss.
Formula apply_mp(const Formula& major, const Formula& minor);

enum class LineStatus : std::uint8_t { valid, invalid, unchecked };

std::string to_string(LineStatus s);

struct LineVerdict {
  std::string label;
  LineStatus status = LineStatus::unchecked;
  std::string reason;
  // Canonical-mode tautology check of the line's formula; empty when the
  // line was not checked.
  std::optional<bool> tautology;
};

struct ProofVerdict {
  bool valid = false;
  // Some checked line is not a tautology.
  bool soundness_alarm = false;
  std::vector<LineVerdict> lines;
  // Index of the first invalid line, if any.
  std::optional<std::size_t> first_failure;
};

// Lines are checked in order; after the first invalid line the rest are
// reported unchecked.
ProofVerdict check_proof(const ProofScript& script);

}  // namespace pm

#endif  // PM_PROOF_HPP
