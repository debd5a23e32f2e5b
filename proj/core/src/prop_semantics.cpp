#include "pm/prop_semantics.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "pm/error.hpp"

namespace pm {

const Meaning& PropAssignment::at(const std::string& variable) const {
  auto it = values.find(variable);
  if (it == values.end()) {
    throw EvaluationError("no meaning assigned to " + variable);
  }
  return it->second;
}

std::string describe(const PropAssignment& h) {
  std::string out;
  for (const auto& [var, meaning] : h.values) {
    if (!out.empty()) out += ' ';
    auto c = h.constants.find(var);
    if (c != h.constants.end()) {
      out += var + '=' + (h.world.constant_value(c->second) ? 'T' : 'F');
    } else {
      out += var + ':' + render(meaning);
    }
  }
  return out;
}

Meaning eval_prop(const Formula& f, const PropAssignment& h,
                  TransversalPolicy policy) {
  switch (f.kind()) {
    case Kind::prop_var:
      return h.at(f.name());
    case Kind::disjunction:
      return unite(eval_prop(f.left(), h, policy),
                   eval_prop(f.right(), h, policy));
    case Kind::negation:
      return negate(eval_prop(f.operand(), h, policy), policy);
    case Kind::pred_app:
    case Kind::universal:
    case Kind::existential:
      break;
  }
  throw EvaluationError("not a propositional formula: " + print(f));
}

Proposition make_proposition(const Formula& f, const PropAssignment& h,
                             TransversalPolicy policy) {
  return {f, eval_prop(f, h, policy)};
}

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::map<std::string, std::string> match_constants(
    const std::set<std::string>& variables, const World& w) {
  std::map<std::string, std::string> out;
  std::set<std::string> used;
  for (const auto& v : variables) {
    if (w.has_constant(upper(v))) {
      out[v] = upper(v);
      used.insert(upper(v));
    }
  }
  auto next = w.constants().begin();
  for (const auto& v : variables) {
    if (out.contains(v)) continue;
    while (next != w.constants().end() && used.contains(next->first)) ++next;
    if (next == w.constants().end()) {
      throw WorldError("world has too few propositional constants for " +
                       std::to_string(variables.size()) + " variables");
    }
    out[v] = next->first;
    used.insert(next->first);
    ++next;
  }
  return out;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

Meaning random_meaning(std::mt19937_64& rng,
                       const std::vector<ElementaryComplex>& complexes,
                       std::size_t bound) {
  std::vector<Member> members(draw(rng, 1, bound));
  for (auto& m : members) {
    const auto size = draw(rng, 1, bound);
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto& c = complexes[draw(rng, 0, complexes.size() - 1)];
      m.push_back({c, draw(rng, 0, 1) == 0 ? Tag::diagonal : Tag::flipped});
    }
  }
  return Meaning(std::move(members));
}

}  // namespace

std::vector<PropAssignment> enumerate_assignments(
    const std::set<std::string>& variables, const World& w,
    const AssignmentMode& mode) {
  std::vector<PropAssignment> out;
  const std::vector<std::string> vars(variables.begin(), variables.end());
  if (mode.kind == AssignmentMode::Kind::canonical) {
    const auto constants = match_constants(variables, w);
    const std::size_t n = vars.size();
    if (n >= 31) throw EvaluationError("too many variables for canonical mode");
    const std::size_t rows = std::size_t{1} << n;
    out.reserve(rows);
    for (std::size_t row = 0; row < rows; ++row) {
      PropAssignment h{{}, w, constants};
      for (std::size_t k = 0; k < n; ++k) {
        const bool value = ((row >> (n - 1 - k)) & 1u) == 0;
        h.world.set_constant(constants.at(vars[k]), value);
      }
      for (const auto& v : vars) {
        h.values.emplace(v, canonical_atom_meaning(h.world, constants.at(v), {}));
      }
      out.push_back(std::move(h));
    }
    return out;
  }

  if (mode.count == 0 || mode.size_bound == 0) {
    throw EvaluationError("sampled mode needs a positive count and size bound");
  }
  const auto complexes = b0(w);
  if (complexes.empty()) {
    throw WorldError("sampled mode needs a world with at least one complex");
  }
  std::mt19937_64 rng(mode.seed);
  out.reserve(mode.count);
  for (std::size_t i = 0; i < mode.count; ++i) {
    PropAssignment h{{}, w, {}};
    for (const auto& v : vars) {
      h.values.emplace(v, random_meaning(rng, complexes, mode.size_bound));
    }
    out.push_back(std::move(h));
  }
  return out;
}

World world_for_variables(const std::set<std::string>& variables) {
  World w;
  for (const auto& v : variables) w.set_constant(upper(v), true);
  return w;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tautology:
      return "tautology";
    case Verdict::contradiction:
      return "contradiction";
    case Verdict::contingent:
      return "contingent";
  }
  return "contingent";
}

TautologyResult is_tautology(const Formula& f, const World& w,
                             const AssignmentMode& mode,
                             TransversalPolicy policy) {
  if (!is_propositional(f)) {
    throw EvaluationError("not a propositional formula: " + print(f));
  }
  TautologyResult result;
  for (auto& h : enumerate_assignments(propositional_variables(f), w, mode)) {
    ++result.checked;
    const bool truth = is_true(eval_prop(f, h, policy));
    auto& slot = truth ? result.true_witness : result.false_witness;
    if (!slot) slot = std::move(h);
  }
  if (!result.false_witness) {
    result.verdict = Verdict::tautology;
  } else if (!result.true_witness) {
    result.verdict = Verdict::contradiction;
  } else {
    result.verdict = Verdict::contingent;
  }
  return result;
}

}  // namespace pm
