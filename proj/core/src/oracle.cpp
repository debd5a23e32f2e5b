#include "pm/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "pm/error.hpp"

namespace pm {

bool truth_table_eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::prop_var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw EvaluationError("no value for " + f.name());
      return it->second;
    }
    case Kind::negation:
      return !truth_table_eval(f.operand(), v);
    case Kind::disjunction:
      return truth_table_eval(f.left(), v) || truth_table_eval(f.right(), v);
    default:
      throw EvaluationError("truth tables cover propositional formulas only");
  }
}

TarskiModel TarskiModel::from_world(const World& w) {
  TarskiModel m;
  m.domain = w.individuals();
  for (const auto& [name, arity] : w.relations()) m.extensions[name];
  for (const auto& [relation, args] : w.facts()) {
    m.extensions[relation].insert(args);
  }
  return m;
}

bool tarski_eval(const Formula& f, const TarskiModel& m,
                 const Environment& env) {
  switch (f.kind()) {
    case Kind::prop_var: {
      auto it = m.prop_values.find(f.name());
      if (it == m.prop_values.end()) {
        throw EvaluationError("no value for " + f.name());
      }
      return it->second;
    }
    case Kind::pred_app: {
      auto ext = m.extensions.find(f.name());
      if (ext == m.extensions.end()) {
        throw EvaluationError("unknown predicate " + f.name());
      }
      auto val = env.find(f.variable());
      if (val == env.end()) {
        throw EvaluationError("unbound variable " + f.variable());
      }
      return ext->second.contains({val->second});
    }
    case Kind::negation:
      return !tarski_eval(f.operand(), m, env);
    case Kind::disjunction:
      return tarski_eval(f.left(), m, env) || tarski_eval(f.right(), m, env);
    case Kind::universal:
    case Kind::existential: {
      const bool universal = f.kind() == Kind::universal;
      Environment inner = env;
      for (const auto& d : m.domain) {
        inner[f.variable()] = d;
        const bool holds = tarski_eval(f.operand(), m, inner);
        if (universal && !holds) return false;
        if (!universal && holds) return true;
      }
      return universal;
    }
  }
  return false;
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars,
                                        const std::vector<std::string>& preds,
                                        std::size_t max_depth,
                                        std::size_t max_quantifiers) {
  std::vector<std::string> indvars;
  const std::size_t wanted =
      preds.empty() ? max_quantifiers : std::max<std::size_t>(1, max_quantifiers);
  for (std::size_t i = 0; i < wanted; ++i) {
    std::string v(1, static_cast<char>('x' + i % 3));
    if (i >= 3) v += std::to_string(i / 3);
    indvars.push_back(std::move(v));
  }

  // by_size[n][k]: exactly n operators, k of them quantifiers
  std::vector<std::vector<std::vector<Formula>>> by_size(
      max_depth + 1,
      std::vector<std::vector<Formula>>(max_quantifiers + 1));
  for (const auto& v : vars) by_size[0][0].push_back(Formula::prop_var(v));
  for (const auto& p : preds) {
    for (const auto& x : indvars) by_size[0][0].push_back(Formula::pred_app(p, x));
  }

  for (std::size_t n = 1; n <= max_depth; ++n) {
    for (std::size_t k = 0; k <= max_quantifiers; ++k) {
      auto& out = by_size[n][k];
      for (const auto& f : by_size[n - 1][k]) out.push_back(Formula::negation(f));
      if (k > 0) {
        for (const auto& f : by_size[n - 1][k - 1]) {
          for (const auto& x : indvars) {
            out.push_back(Formula::universal(x, f));
            out.push_back(Formula::existential(x, f));
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a <= k; ++a) {
          for (const auto& l : by_size[i][a]) {
            for (const auto& r : by_size[n - 1 - i][k - a]) {
              out.push_back(Formula::disjunction(l, r));
            }
          }
        }
      }
    }
  }

  std::vector<Formula> out;
  for (auto& level : by_size) {
    for (auto& group : level) {
      for (auto& f : group) out.push_back(std::move(f));
    }
  }
  return out;
}

Evaluators Evaluators::standard() {
  return {
      [](const Formula& f, const PropAssignment& h, TransversalPolicy p) {
        return eval_prop(f, h, p);
      },
      [](const Formula& f, const FoBinding& b, const PropAssignment& h,
         TransversalPolicy p, const BaseMode& m) {
        return eval_fo(f, b, h, p, m);
      }};
}

std::string describe_world(const World& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.individuals().size(); ++i) {
    if (i) out += ',';
    out += w.individuals()[i];
  }
  out += '}';
  for (const auto& [name, arity] : w.relations()) {
    out += ' ' + name + "={";
    bool first = true;
    for (const auto& [rel, args] : w.facts()) {
      if (rel != name) continue;
      if (!first) out += ',';
      first = false;
      if (args.size() == 1) {
        out += args[0];
      } else {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
          out += (i ? "," : "") + args[i];
        }
        out += ')';
      }
    }
    out += '}';
  }
  for (const auto& [name, value] : w.constants()) {
    out += ' ' + name + '=' + (value ? 'T' : 'F');
  }
  return out;
}

namespace {

std::vector<std::string> letters(const char* pool, std::size_t n) {
  std::vector<std::string> out;
  const std::string base(pool);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s(1, base[i % base.size()]);
    if (i >= base.size()) s += std::to_string(i / base.size());
    out.push_back(std::move(s));
  }
  return out;
}

// Independent of is_true: the valuation a sampled Meaning induces.
bool has_diagonal_member(const Meaning& m) {
  for (const auto& member : m.members()) {
    bool all = true;
    for (const auto& p : member) all = all && p.tag == Tag::diagonal;
    if (all) return true;
  }
  return false;
}

Valuation valuation_of(const PropAssignment& h) {
  Valuation v;
  for (const auto& [var, meaning] : h.values) {
    auto c = h.constants.find(var);
    v[var] = c != h.constants.end() ? h.world.constant_value(c->second)
                                    : has_diagonal_member(meaning);
  }
  return v;
}

class Recorder {
 public:
  Recorder(SweepReport& report, std::size_t limit)
      : report_(report), limit_(limit) {}

  void add(Disagreement d) {
    if (d.kind == "oracle") {
      ++report_.oracle_disagreements;
    } else if (d.kind == "policy") {
      ++report_.policy_mismatches;
    } else if (d.kind == "closure") {
      ++report_.closure_violations;
    } else {
      ++report_.errors;
    }
    if (report_.records.size() < limit_) report_.records.push_back(std::move(d));
  }

 private:
  SweepReport& report_;
  std::size_t limit_;
};

SweepReport propositional_sweep(const SweepConfig& config,
                                const Evaluators& ev) {
  SweepReport report;
  report.name = "propositional";
  Recorder rec(report, config.record_limit);

  const auto var_names = letters("pqr", config.prop_vars);
  const auto formulas =
      enumerate_formulas(var_names, {}, config.prop_depth, 0);
  report.formulas = formulas.size();

  const std::set<std::string> all_vars(var_names.begin(), var_names.end());
  const World base = world_for_variables(all_vars);

  // Assignments depend only on the variable set; cache per subset.
  std::map<std::set<std::string>, std::vector<PropAssignment>> cache;

  for (const auto& f : formulas) {
    const auto vars = propositional_variables(f);
    auto it = cache.find(vars);
    if (it == cache.end()) {
      it = cache.emplace(vars, enumerate_assignments(vars, base, config.mode))
               .first;
    }
    const std::string text = print(f);
    for (const auto& h : it->second) {
      const bool expected = truth_table_eval(f, valuation_of(h));
      std::optional<bool> first_truth;
      std::string first_policy;
      for (auto policy : config.policies) {
        ++report.checks;
        Disagreement d{"", text, describe(h), describe_world(h.world),
                       to_string(policy), expected, std::nullopt, ""};
        try {
          const Meaning m = ev.prop(f, h, policy);
          const bool got = is_true(m);
          d.got = got;
          if (got != expected) {
            d.kind = "oracle";
            rec.add(d);
          }
          if (!satisfies_invariants(m, h.world)) {
            d.kind = "closure";
            rec.add(d);
          }
          if (first_truth && *first_truth != got) {
            d.kind = "policy";
            d.policy = first_policy + "/" + to_string(policy);
            rec.add(d);
          }
          if (!first_truth) {
            first_truth = got;
            first_policy = to_string(policy);
          }
        } catch (const std::exception& e) {
          d.kind = "error";
          d.error = e.what();
          rec.add(d);
        }
      }
    }
  }
  return report;
}

SweepReport first_order_sweep(const SweepConfig& config, const Evaluators& ev) {
  SweepReport report;
  report.name = "first-order";
  Recorder rec(report, config.record_limit);

  const auto var_names = letters("pqr", config.fo_prop_vars);
  const auto pred_names = letters("STUVW", config.predicates);
  std::vector<Formula> formulas;
  for (auto& f : enumerate_formulas(var_names, pred_names, config.fo_depth,
                                    config.quantifiers)) {
    if (free_variables(f).empty()) formulas.push_back(std::move(f));
  }
  report.formulas = formulas.size();

  const std::set<std::string> all_vars(var_names.begin(), var_names.end());
  const auto worlds = monadic_worlds(
      std::set<std::string>(pred_names.begin(), pred_names.end()),
      config.max_individuals);

  struct Case {
    PropAssignment h;
    FoBinding binding;
    TarskiModel model;
    std::string world_text;
    std::string assignment_text;
  };
  // For every world: the canonical assignments over each subset of the
  // propositional variables a formula may use.
  std::vector<std::map<std::set<std::string>, std::vector<Case>>> cases(
      worlds.size());
  auto cases_for = [&](std::size_t wi, const std::set<std::string>& vars)
      -> const std::vector<Case>& {
    auto& slot = cases[wi];
    auto it = slot.find(vars);
    if (it != slot.end()) return it->second;
    std::vector<Case> out;
    const World w = with_constants_for(worlds[wi], all_vars);
    for (auto& h : enumerate_assignments(vars, w, AssignmentMode::canonical())) {
      TarskiModel model = TarskiModel::from_world(h.world);
      model.prop_values = valuation_of(h);
      FoBinding b = FoBinding::over(h.world);
      std::string wt = describe_world(h.world);
      std::string at = describe(h);
      out.push_back({std::move(h), std::move(b), std::move(model),
                     std::move(wt), std::move(at)});
    }
    return slot.emplace(vars, std::move(out)).first->second;
  };

  const BaseMode base = BaseMode::all();
  for (const auto& f : formulas) {
    const auto vars = propositional_variables(f);
    const std::string text = print(f);
    for (std::size_t wi = 0; wi < worlds.size(); ++wi) {
      for (const auto& c : cases_for(wi, vars)) {
        ++report.checks;
        const bool expected = tarski_eval(f, c.model);
        Disagreement d{"", text, c.assignment_text, c.world_text,
                       to_string(config.fo_policy), expected, std::nullopt, ""};
        try {
          const Meaning m = ev.fo(f, c.binding, c.h, config.fo_policy, base);
          const bool got = is_true(m);
          d.got = got;
          if (got != expected) {
            d.kind = "oracle";
            rec.add(d);
          }
          if (!satisfies_invariants(m, c.h.world)) {
            d.kind = "closure";
            rec.add(d);
          }
        } catch (const std::exception& e) {
          d.kind = "error";
          d.error = e.what();
          rec.add(d);
        }
      }
    }
  }
  return report;
}

nlohmann::json config_json(const SweepConfig& c) {
  nlohmann::json j;
  j["propositional"] = c.propositional;
  j["prop_vars"] = c.prop_vars;
  j["prop_depth"] = c.prop_depth;
  std::vector<std::string> policies;
  for (auto p : c.policies) policies.push_back(to_string(p));
  j["policies"] = policies;
  if (c.mode.kind == AssignmentMode::Kind::canonical) {
    j["mode"] = "canonical";
  } else {
    j["mode"] = "sampled";
    j["seed"] = c.mode.seed;
    j["count"] = c.mode.count;
    j["size_bound"] = c.mode.size_bound;
  }
  j["first_order"] = c.first_order;
  j["fo_depth"] = c.fo_depth;
  j["quantifiers"] = c.quantifiers;
  j["predicates"] = c.predicates;
  j["fo_prop_vars"] = c.fo_prop_vars;
  j["max_individuals"] = c.max_individuals;
  j["fo_policy"] = to_string(c.fo_policy);
  j["base_mode"] = "all";
  j["record_limit"] = c.record_limit;
  return j;
}

}  // namespace

std::size_t EquivalenceReport::total_disagreements() const {
  std::size_t n = 0;
  for (const auto& s : sweeps) n += s.total();
  return n;
}

std::optional<Disagreement> EquivalenceReport::minimal_counterexample() const {
  for (const auto& s : sweeps) {
    if (!s.records.empty()) return s.records.front();
  }
  return std::nullopt;
}

EquivalenceReport check_equivalence(const SweepConfig& config,
                                    const Evaluators& evaluators) {
  if (config.prop_vars == 0 && config.propositional) {
    throw EvaluationError("propositional sweep needs at least one variable");
  }
  if (config.policies.empty()) throw EvaluationError("no transversal policy");
  EquivalenceReport report{config, {}};
  if (config.propositional) {
    report.sweeps.push_back(propositional_sweep(config, evaluators));
  }
  if (config.first_order) {
    report.sweeps.push_back(first_order_sweep(config, evaluators));
  }
  return report;
}

nlohmann::json to_json(const EquivalenceReport& report) {
  nlohmann::json j;
  j["config"] = config_json(report.config);
  j["disagreements"] = report.total_disagreements();
  nlohmann::json sweeps = nlohmann::json::array();
  for (const auto& s : report.sweeps) {
    nlohmann::json js;
    js["name"] = s.name;
    js["formulas"] = s.formulas;
    js["checks"] = s.checks;
    js["oracle_disagreements"] = s.oracle_disagreements;
    js["policy_mismatches"] = s.policy_mismatches;
    js["closure_violations"] = s.closure_violations;
    js["errors"] = s.errors;
    nlohmann::json records = nlohmann::json::array();
    for (const auto& d : s.records) {
      nlohmann::json r;
      r["kind"] = d.kind;
      r["formula"] = d.formula;
      r["assignment"] = d.assignment;
      r["world"] = d.world;
      r["policy"] = d.policy;
      r["expected"] = d.expected;
      r["got"] = d.got ? nlohmann::json(*d.got) : nlohmann::json(nullptr);
      if (!d.error.empty()) r["error"] = d.error;
      records.push_back(std::move(r));
    }
    js["records"] = std::move(records);
    sweeps.push_back(std::move(js));
  }
  j["sweeps"] = std::move(sweeps);
  return j;
}

std::string to_text(const EquivalenceReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "mode: "
      << (c.mode.kind == AssignmentMode::Kind::canonical ? "canonical"
                                                         : "sampled")
      << " seed: " << c.mode.seed << '\n';
  for (const auto& s : report.sweeps) {
    out << s.name << ": formulas=" << s.formulas << " checks=" << s.checks
        << " oracle-disagreements=" << s.oracle_disagreements
        << " policy-mismatches=" << s.policy_mismatches
        << " closure-violations=" << s.closure_violations
        << " errors=" << s.errors << '\n';
  }
  if (auto d = report.minimal_counterexample()) {
    out << "first counterexample (" << d->kind << "): " << d->formula
        << " | " << d->assignment << " | " << d->world << " | policy "
        << d->policy << " | expected " << (d->expected ? "true" : "false")
        << " got "
        << (d->got ? (*d->got ? "true" : "false") : "error: " + d->error)
        << '\n';
  }
  out << report.total_disagreements() << " disagreements\n";
  return out.str();
}

}  // namespace pm
