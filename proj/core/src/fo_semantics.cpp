#include "pm/fo_semantics.hpp"

#include <algorithm>
#include <cctype>

#include "pm/error.hpp"

namespace pm {

std::vector<std::string> default_pool(std::size_t size) {
  static const char kLetters[] = {'x', 'y', 'z'};
  std::vector<std::string> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::string name(1, kLetters[i % 3]);
    if (i >= 3) name += std::to_string(i / 3);
    out.push_back(std::move(name));
  }
  return out;
}

FoBinding FoBinding::over(const World& w) {
  FoBinding b{w, {}, default_pool(w.individuals().size())};
  for (std::size_t i = 0; i < b.pool.size(); ++i) {
    b.xi.emplace(b.pool[i], w.individuals()[i]);
  }
  return b;
}

void FoBinding::validate() const {
  if (pool.empty()) throw EvaluationError("variable pool is empty");
  std::set<std::string> image;
  for (const auto& v : pool) {
    auto it = xi.find(v);
    if (it == xi.end()) throw EvaluationError("xi does not bind " + v);
    if (!world.has_individual(it->second)) {
      throw EvaluationError("xi maps " + v + " to unknown individual " +
                            it->second);
    }
    image.insert(it->second);
  }
  if (image.size() != world.individuals().size()) {
    throw EvaluationError("pool does not reach every individual");
  }
}

const std::string& FoBinding::individual_of(const std::string& variable) const {
  auto it = xi.find(variable);
  if (it == xi.end()) throw EvaluationError("unbound variable " + variable);
  return it->second;
}

Meaning theta_base(const ThetaTemplate& t, const std::string& variable,
                   const FoBinding& b) {
  if (std::find(b.pool.begin(), b.pool.end(), variable) == b.pool.end()) {
    throw EvaluationError("unbound variable " + variable);
  }
  if (t.marked_positions != std::vector<std::size_t>{0}) {
    throw EvaluationError("monadic template must mark its single argument");
  }
  return canonical_atom_meaning(b.world, t.predicate,
                                {b.individual_of(variable)});
}

std::vector<Member> alignment_order(const Meaning& m) {
  std::vector<Member> out = m.members();
  std::stable_sort(out.begin(), out.end(), [](const Member& a, const Member& b) {
    const bool da = is_all_diagonal(a);
    const bool db = is_all_diagonal(b);
    if (da != db) return da;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Meaning dotted_union(const std::vector<Meaning>& meanings, MergeShape shape) {
  if (meanings.empty()) throw EvaluationError("dotted union of nothing");
  std::vector<std::vector<Member>> aligned;
  aligned.reserve(meanings.size());
  std::size_t width = 0;
  for (const auto& m : meanings) {
    aligned.push_back(alignment_order(m));
    width = std::max(width, aligned.back().size());
  }
  for (const auto& a : aligned) {
    if (a.empty()) throw EvaluationError("dotted union of an empty meaning");
    if (a.size() != width && shape == MergeShape::strict) {
      throw StructureMismatch("dotted union operands have " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(width) + " members");
    }
  }
  std::vector<Member> merged(width);
  for (const auto& a : aligned) {
    for (std::size_t i = 0; i < width; ++i) {
      const Member& source = i < a.size() ? a[i] : a.back();
      merged[i].insert(merged[i].end(), source.begin(), source.end());
    }
  }
  return Meaning(std::move(merged));
}

std::string to_string(const BaseMode& mode) {
  return mode.kind == BaseMode::Kind::all ? "all" : "any:" + mode.variable;
}

BaseMode parse_base_mode(const std::string& text) {
  if (text == "all") return BaseMode::all();
  if (text.rfind("any:", 0) == 0 && text.size() > 4) {
    return BaseMode::any(text.substr(4));
  }
  throw EvaluationError("base mode must be 'all' or 'any:<var>', got '" +
                        text + "'");
}

namespace {

// Individual variables bound by enclosing quantifier instances, innermost
// last.
using Env = std::vector<std::pair<std::string, std::string>>;

const std::string* lookup(const Env& env, const std::string& var) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == var) return &it->second;
  }
  return nullptr;
}

class FoEvaluator {
 public:
  FoEvaluator(const FoBinding& b, const PropAssignment& h,
              TransversalPolicy policy, const BaseMode& base_mode)
      : b_(b), h_(h), policy_(policy), base_mode_(base_mode) {
    // Quantifiers range over the distinct individuals the pool reaches.
    for (const auto& v : b_.pool) {
      const auto& ind = b_.individual_of(v);
      if (std::find(range_.begin(), range_.end(), ind) == range_.end()) {
        range_.push_back(ind);
      }
    }
  }

  Meaning eval(const Formula& f, Env& env) const {
    switch (f.kind()) {
      case Kind::prop_var:
        return h_.at(f.name());
      case Kind::pred_app:
        return predicate(f, env);
      case Kind::disjunction:
        return unite(eval(f.left(), env), eval(f.right(), env));
      case Kind::negation:
        return negate(eval(f.operand(), env), policy_);
      case Kind::universal: {
        std::vector<Meaning> instances = each_instance(f, env);
        return dotted_union(instances, MergeShape::repeat_last);
      }
      case Kind::existential: {
        std::vector<Member> pooled;
        for (const auto& m : each_instance(f, env)) {
          pooled.insert(pooled.end(), m.members().begin(), m.members().end());
        }
        return Meaning(std::move(pooled));
      }
    }
    throw EvaluationError("unhandled formula");
  }

 private:
  std::vector<Meaning> each_instance(const Formula& q, Env& env) const {
    std::vector<Meaning> out;
    out.reserve(range_.size());
    for (const auto& individual : range_) {
      env.emplace_back(q.variable(), individual);
      out.push_back(eval(q.operand(), env));
      env.pop_back();
    }
    return out;
  }

  Meaning predicate(const Formula& f, const Env& env) const {
    if (const std::string* ind = lookup(env, f.variable())) {
      return canonical_atom_meaning(b_.world, f.name(), {*ind});
    }
    const ThetaTemplate t{f.name()};
    if (base_mode_.kind == BaseMode::Kind::any) {
      return theta_base(t, base_mode_.variable, b_);
    }
    std::vector<Meaning> variants;
    variants.reserve(b_.pool.size());
    for (const auto& z : b_.pool) variants.push_back(theta_base(t, z, b_));
    return dotted_union(variants);
  }

  const FoBinding& b_;
  const PropAssignment& h_;
  TransversalPolicy policy_;
  const BaseMode& base_mode_;
  std::vector<std::string> range_;
};

std::string individual_name(std::size_t i) {
  std::string name(1, static_cast<char>('a' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Meaning eval_fo(const Formula& f, const FoBinding& b, const PropAssignment& h,
                TransversalPolicy policy, const BaseMode& base_mode) {
  b.validate();
  Env env;
  return FoEvaluator(b, h, policy, base_mode).eval(f, env);
}

World with_constants_for(const World& w,
                         const std::set<std::string>& variables) {
  World out = w;
  for (const auto& v : variables) {
    if (!out.has_constant(upper(v))) out.set_constant(upper(v), true);
  }
  return out;
}

FoValidity is_fo_logical_truth(const Formula& f,
                               const std::vector<World>& worlds,
                               const AssignmentMode& mode,
                               TransversalPolicy policy) {
  if (!free_variables(f).empty()) {
    throw EvaluationError("formula has free individual variables: " + print(f));
  }
  const auto vars = propositional_variables(f);
  FoValidity result;
  for (const auto& raw : worlds) {
    const World w = with_constants_for(raw, vars);
    for (const auto& h : enumerate_assignments(vars, w, mode)) {
      ++result.checked;
      const FoBinding b = FoBinding::over(h.world);
      if (!is_true(eval_fo(f, b, h, policy))) {
        result.logical_truth = false;
        result.witness_world = h.world;
        result.witness_assignment = h;
        return result;
      }
    }
  }
  return result;
}

std::vector<World> monadic_worlds(const std::set<std::string>& predicates,
                                  std::size_t max_individuals) {
  std::vector<World> out;
  const std::vector<std::string> preds(predicates.begin(), predicates.end());
  for (std::size_t n = 1; n <= max_individuals; ++n) {
    const std::size_t cells = n * preds.size();
    if (cells >= 63) throw EvaluationError("too many worlds to enumerate");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
      World w;
      for (std::size_t i = 0; i < n; ++i) w.add_individual(individual_name(i));
      for (std::size_t p = 0; p < preds.size(); ++p) {
        w.add_relation(preds[p], 1);
        for (std::size_t i = 0; i < n; ++i) {
          if (bits >> (p * n + i) & 1u) w.add_fact(preds[p], {individual_name(i)});
        }
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace pm
