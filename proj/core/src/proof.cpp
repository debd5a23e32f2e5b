#include "pm/proof.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "pm/error.hpp"
#include "pm/parse.hpp"
#include "pm/prop_semantics.hpp"

namespace pm {

namespace {

struct Schema {
  const char* name;
  const char* text;
};

constexpr Schema kSchemas[] = {
    {"Taut", "p v p .=>. p"},
    {"Add", "q .=>. p v q"},
    {"Perm", "p v q .=>. q v p"},
    {"Assoc", "p v (q v r) .=>. q v (p v r)"},
    {"Sum", "q => r .=>. p v q => p v r"},
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_propvar(const std::string& s) {
  if (s.empty() || s[0] < 'p' || s[0] > 'r') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Formula parse_at(const std::string& text, std::size_t line) {
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw ProofFormatError(e.what(), line);
  }
}

// "p=q v r,q=~p"
std::map<std::string, Formula> parse_mapping(const std::string& text,
                                             std::size_t line) {
  std::map<std::string, Formula> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ProofFormatError("expected <var>=<formula> in '" + trim(item) + "'",
                             line);
    }
    const std::string var = trim(item.substr(0, eq));
    if (!is_propvar(var)) {
      throw ProofFormatError("'" + var + "' is not a propositional variable",
                             line);
    }
    if (out.contains(var)) {
      throw ProofFormatError("variable " + var + " mapped twice", line);
    }
    out.emplace(var, parse_at(trim(item.substr(eq + 1)), line));
  }
  return out;
}

Justification parse_justification(const std::string& text, std::size_t line) {
  const std::string body = trim(text);
  const std::size_t space = body.find_first_of(" \t");
  const std::string rule = body.substr(0, space);
  const std::string rest =
      space == std::string::npos ? std::string() : trim(body.substr(space));
  Justification j;
  if (rule == "AX" || rule == "SUB") {
    const std::size_t gap = rest.find_first_of(" \t");
    const std::string head = rest.substr(0, gap);
    if (head.empty()) throw ProofFormatError(rule + " needs an argument", line);
    const std::string mapping =
        gap == std::string::npos ? std::string() : trim(rest.substr(gap));
    if (rule == "AX") {
      j.kind = Justification::Kind::axiom;
      j.schema = head;
    } else {
      j.kind = Justification::Kind::substitution;
      j.source = head;
      if (mapping.empty()) {
        throw ProofFormatError("SUB needs a substitution", line);
      }
    }
    if (!mapping.empty()) j.mapping = parse_mapping(mapping, line);
    return j;
  }
  if (rule == "MP") {
    const auto words = split_words(rest);
    if (words.size() != 2) {
      throw ProofFormatError("MP expects <major> <minor>", line);
    }
    j.kind = Justification::Kind::modus_ponens;
    j.major = words[0];
    j.minor = words[1];
    return j;
  }
  throw ProofFormatError("unknown justification '" + rule + "'", line);
}

}  // namespace

ProofScript parse_proof_script(std::string_view text) {
  ProofScript script;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t semi = line.find(';');
    if (semi == std::string::npos) {
      throw ProofFormatError("missing ';' before justification", line_no);
    }
    const std::string head = trim(line.substr(0, semi));
    const std::size_t gap = head.find_first_of(" \t");
    if (gap == std::string::npos) {
      throw ProofFormatError("expected <label> <formula>", line_no);
    }
    script.lines.push_back({head.substr(0, gap),
                            parse_at(trim(head.substr(gap)), line_no),
                            parse_justification(line.substr(semi + 1), line_no),
                            line_no});
  }
  return script;
}

ProofScript load_proof_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof_script(buf.str());
}

std::vector<std::string> axiom_names() {
  std::vector<std::string> out;
  for (const auto& s : kSchemas) out.emplace_back(s.name);
  return out;
}

Formula axiom_schema(const std::string& schema) {
  for (const auto& s : kSchemas) {
    if (schema == s.name) return parse(s.text);
  }
  throw EvaluationError("unknown axiom schema '" + schema + "'");
}

Formula axiom_instance(const std::string& schema,
                       const std::map<std::string, Formula>& subst) {
  const Formula f = axiom_schema(schema);
  for (const auto& v : propositional_variables(f)) {
    if (!subst.contains(v)) {
      throw EvaluationError("substitution for " + schema + " misses " + v);
    }
  }
  for (const auto& [v, _] : subst) {
    if (!propositional_variables(f).contains(v)) {
      throw EvaluationError(schema + " has no variable " + v);
    }
  }
  return substitute_propositional(f, subst);
}

Formula apply_mp(const Formula& major, const Formula& minor) {
  if (major.kind() != Kind::disjunction ||
      major.left().kind() != Kind::negation) {
    throw EvaluationError("major premiss is not a conditional: " + print(major));
  }
  if (major.left().operand() != minor) {
    throw EvaluationError("antecedent " + print(major.left().operand()) +
                          " does not match " + print(minor));
  }
  return major.right();
}

std::string to_string(LineStatus s) {
  switch (s) {
    case LineStatus::valid:
      return "valid";
    case LineStatus::invalid:
      return "invalid";
    case LineStatus::unchecked:
      return "unchecked";
  }
  return "unchecked";
}

ProofVerdict check_proof(const ProofScript& script) {
  ProofVerdict verdict;
  std::map<std::string, Formula> proved;
  for (std::size_t i = 0; i < script.lines.size(); ++i) {
    const ProofLine& line = script.lines[i];
    LineVerdict lv{line.label, LineStatus::unchecked, {}, std::nullopt};
    if (verdict.first_failure) {
      verdict.lines.push_back(std::move(lv));
      continue;
    }
    auto premiss = [&](const std::string& label) -> const Formula& {
      auto it = proved.find(label);
      if (it == proved.end()) {
        throw EvaluationError("no earlier line labelled " + label);
      }
      return it->second;
    };
    try {
      if (proved.contains(line.label)) {
        throw EvaluationError("duplicate label " + line.label);
      }
      const Justification& j = line.justification;
      Formula derived = [&] {
        switch (j.kind) {
          case Justification::Kind::axiom:
            return axiom_instance(j.schema, j.mapping);
          case Justification::Kind::modus_ponens:
            return apply_mp(premiss(j.major), premiss(j.minor));
          case Justification::Kind::substitution:
            return substitute_propositional(premiss(j.source), j.mapping);
        }
        throw EvaluationError("unknown justification");
      }();
      if (derived != line.formula) {
        throw EvaluationError("justification yields " + print(derived) +
                              ", line states " + print(line.formula));
      }
      lv.status = LineStatus::valid;
      const auto vars = propositional_variables(line.formula);
      lv.tautology =
          is_tautology(line.formula, world_for_variables(vars),
                       AssignmentMode::canonical())
              .verdict == Verdict::tautology;
      if (!*lv.tautology) verdict.soundness_alarm = true;
      proved.emplace(line.label, line.formula);
    } catch (const Error& e) {
      lv.status = LineStatus::invalid;
      lv.reason = e.what();
      verdict.first_failure = i;
    }
    verdict.lines.push_back(std::move(lv));
  }
  verdict.valid = !verdict.first_failure;
  return verdict;
}

}  // namespace pm
