#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pm/error.hpp"
#include "pm/fo_semantics.hpp"
#include "pm/oracle.hpp"
#include "pm/parse.hpp"
#include "pm/proof.hpp"
#include "pm/prop_semantics.hpp"

namespace pm::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string formula;
  std::string input_path;
  std::string world_path;
  std::string model_path;
  std::string out_path;
  std::string policy = "minimal";
  std::string base_mode = "all";
  std::string mode = "canonical";
  std::optional<std::uint64_t> seed;
  std::size_t count = 100;
  std::size_t size_bound = 3;
  bool json = false;

  // compare
  std::size_t vars = 3;
  std::size_t prop_depth = 5;
  std::size_t fo_depth = 4;
  std::size_t quantifiers = 2;
  std::size_t predicates = 2;
  std::size_t max_individuals = 3;
  std::size_t record_limit = 20;
  bool no_prop = false;
  bool no_fo = false;
};

AssignmentMode assignment_mode(const RunConfig& c) {
  if (c.mode == "canonical") return AssignmentMode::canonical();
  if (!c.seed) throw Error("--mode sampled requires --seed");
  if (c.count == 0 || c.size_bound == 0) {
    throw Error("--count and --size-bound must be positive");
  }
  return AssignmentMode::sampled(*c.seed, c.count, c.size_bound);
}

World world_or_default(const RunConfig& c, const Formula& f) {
  if (!c.world_path.empty()) return load_world(c.world_path);
  return world_for_variables(propositional_variables(f));
}

void emit(const RunConfig& c, const json& j, const std::string& text,
          std::ostream& out) {
  if (!c.out_path.empty()) {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) throw Error("cannot write " + c.out_path);
    file << j.dump(2) << '\n';
  }
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

std::string mode_header(const RunConfig& c) {
  if (c.mode == "canonical") return "mode: canonical\n";
  return "mode: sampled seed: " + std::to_string(*c.seed) +
         " count: " + std::to_string(c.count) +
         " size-bound: " + std::to_string(c.size_bound) + "\n";
}

json assignment_json(const PropAssignment& h) {
  json j;
  j["digest"] = describe(h);
  for (const auto& [var, meaning] : h.values) j["values"][var] = render(meaning);
  return j;
}

int cmd_parse(const RunConfig& c, std::ostream& out) {
  const Formula f = parse(c.formula);
  json j{{"formula", print(f)}, {"ast", print_tree(f)}};
  emit(c, j, "formula: " + print(f) + "\nast: " + print_tree(f) + "\n", out);
  return kOk;
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const Formula f = parse(c.formula);
  if (!is_propositional(f)) throw Error("eval takes a propositional formula");
  const auto policy = parse_policy(c.policy);
  const auto mode = assignment_mode(c);
  const World w = world_or_default(c, f);
  std::string text = mode_header(c) + "formula: " + print(f) + "\n";
  json rows = json::array();
  for (const auto& h : enumerate_assignments(propositional_variables(f), w, mode)) {
    const Meaning m = eval_prop(f, h, policy);
    const bool truth = is_true(m);
    text += describe(h) + "  " + render(m) + "  " + (truth ? "true" : "false") +
            "\n";
    rows.push_back({{"assignment", assignment_json(h)},
                    {"meaning", render(m)},
                    {"true", truth}});
  }
  json j{{"formula", print(f)}, {"policy", c.policy}, {"rows", rows}};
  emit(c, j, text, out);
  return kOk;
}

int cmd_taut(const RunConfig& c, std::ostream& out) {
  const Formula f = parse(c.formula);
  const auto policy = parse_policy(c.policy);
  const auto result = is_tautology(f, world_or_default(c, f), assignment_mode(c),
                                   policy);
  std::string text = mode_header(c) + to_string(result.verdict) + "\n";
  json j{{"formula", print(f)},
         {"verdict", to_string(result.verdict)},
         {"checked", result.checked}};
  if (result.verdict == Verdict::contingent) {
    text += "true under: " + describe(*result.true_witness) + "\n";
    text += "false under: " + describe(*result.false_witness) + "\n";
    j["true_witness"] = assignment_json(*result.true_witness);
    j["false_witness"] = assignment_json(*result.false_witness);
  }
  emit(c, j, text, out);
  return result.verdict == Verdict::tautology ? kOk : kNegative;
}

int cmd_fo_eval(const RunConfig& c, std::ostream& out) {
  const Formula f = parse(c.formula);
  if (c.model_path.empty()) throw Error("fo-eval requires --model");
  const World w = load_world(c.model_path);
  const auto policy = parse_policy(c.policy);
  const auto base = parse_base_mode(c.base_mode);
  // The model fixes the constants, so pick the canonical row it matches.
  const auto rows = enumerate_assignments(propositional_variables(f), w,
                                          AssignmentMode::canonical());
  auto h = std::find_if(rows.begin(), rows.end(),
                        [&](const PropAssignment& a) { return a.world == w; });
  if (h == rows.end()) throw Error("model does not fix the formula's constants");
  const Meaning m = eval_fo(f, FoBinding::over(w), *h, policy, base);
  const bool truth = is_true(m);
  json j{{"formula", print(f)},
         {"base_mode", to_string(base)},
         {"meaning", render(m)},
         {"true", truth}};
  emit(c, j,
       "formula: " + print(f) + "\nmeaning: " + render(m) +
           "\ntruth: " + (truth ? "true" : "false") + "\n",
       out);
  return kOk;
}

int cmd_fo_valid(const RunConfig& c, std::ostream& out) {
  const Formula f = parse(c.formula);
  const auto policy = parse_policy(c.policy);
  std::vector<World> worlds;
  if (!c.model_path.empty()) {
    worlds.push_back(load_world(c.model_path));
  } else {
    worlds = monadic_worlds(predicates(f), c.max_individuals);
  }
  const auto result = is_fo_logical_truth(f, worlds, assignment_mode(c), policy);
  std::string text = mode_header(c);
  json j{{"formula", print(f)},
         {"logical_truth", result.logical_truth},
         {"checked", result.checked}};
  if (result.logical_truth) {
    text += "logical truth\n";
  } else {
    text += "not a logical truth\nwitness world: " +
            describe_world(*result.witness_world) +
            "\nwitness assignment: " + describe(*result.witness_assignment) +
            "\n";
    j["witness_world"] = describe_world(*result.witness_world);
    j["witness_assignment"] = assignment_json(*result.witness_assignment);
  }
  emit(c, j, text, out);
  return result.logical_truth ? kOk : kNegative;
}

int cmd_compare(const RunConfig& c, bool policy_given, std::ostream& out) {
  SweepConfig config;
  config.propositional = !c.no_prop;
  config.first_order = !c.no_fo;
  config.prop_vars = c.vars;
  config.prop_depth = c.prop_depth;
  if (policy_given) config.policies = {parse_policy(c.policy)};
  config.mode = assignment_mode(c);
  config.fo_depth = c.fo_depth;
  config.quantifiers = c.quantifiers;
  config.predicates = c.predicates;
  config.max_individuals = c.max_individuals;
  if (policy_given) config.fo_policy = parse_policy(c.policy);
  config.record_limit = c.record_limit;
  const auto report = check_equivalence(config);
  emit(c, to_json(report), to_text(report), out);
  return report.total_disagreements() == 0 ? kOk : kNegative;
}

int cmd_check_proof(const RunConfig& c, std::ostream& out) {
  const ProofScript script = load_proof_script(c.input_path);
  const ProofVerdict v = check_proof(script);
  std::string text;
  json lines = json::array();
  for (const auto& l : v.lines) {
    text += l.label + " " + to_string(l.status);
    if (l.tautology) text += *l.tautology ? " tautology" : " NOT-A-TAUTOLOGY";
    if (!l.reason.empty()) text += " (" + l.reason + ")";
    text += '\n';
    json jl{{"label", l.label}, {"status", to_string(l.status)}};
    jl["tautology"] = l.tautology ? json(*l.tautology) : json(nullptr);
    if (!l.reason.empty()) jl["reason"] = l.reason;
    lines.push_back(std::move(jl));
  }
  text += v.valid ? "valid\n" : "invalid\n";
  if (v.soundness_alarm) text += "soundness alarm\n";
  json j{{"valid", v.valid},
         {"soundness_alarm", v.soundness_alarm},
         {"lines", lines}};
  emit(c, j, text, out);
  return v.valid && !v.soundness_alarm ? kOk : kNegative;
}

void add_output_flags(CLI::App* sub, RunConfig& c) {
  sub->add_flag("--json", c.json, "Print the structured report");
  sub->add_option("--out", c.out_path, "Also write the structured report here");
}

void add_assignment_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--policy", c.policy, "Transversal policy")
      ->check(CLI::IsMember({"minimal", "full"}));
  sub->add_option("--mode", c.mode, "Assignment enumeration")
      ->check(CLI::IsMember({"canonical", "sampled"}));
  sub->add_option("--seed", c.seed, "Seed for sampled mode");
  sub->add_option("--count", c.count, "Assignments drawn in sampled mode");
  sub->add_option("--size-bound", c.size_bound,
                  "Bound on members and member size in sampled mode");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Meaning-based semantics for Principia-style formulas", "pm"};
  app.require_subcommand(1);
  RunConfig c;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print a formula");
  parse_cmd->add_option("formula", c.formula)->required();
  add_output_flags(parse_cmd, c);

  auto* eval_cmd = app.add_subcommand("eval", "Print the Meaning under each assignment");
  eval_cmd->add_option("formula", c.formula)->required();
  eval_cmd->add_option("--world", c.world_path, "World file");
  add_assignment_flags(eval_cmd, c);
  add_output_flags(eval_cmd, c);

  auto* taut_cmd = app.add_subcommand("taut", "Decide tautology");
  taut_cmd->add_option("formula", c.formula)->required();
  taut_cmd->add_option("--world", c.world_path, "World file");
  add_assignment_flags(taut_cmd, c);
  add_output_flags(taut_cmd, c);

  auto* fo_eval_cmd = app.add_subcommand("fo-eval", "Evaluate in a model");
  fo_eval_cmd->add_option("formula", c.formula)->required();
  fo_eval_cmd->add_option("--model", c.model_path, "Model (world) file");
  fo_eval_cmd->add_option("--policy", c.policy)
      ->check(CLI::IsMember({"minimal", "full"}));
  fo_eval_cmd->add_option("--base-mode", c.base_mode, "all or any:<var>");
  add_output_flags(fo_eval_cmd, c);

  auto* fo_valid_cmd =
      app.add_subcommand("fo-valid", "Decide first-order logical truth");
  fo_valid_cmd->add_option("formula", c.formula)->required();
  fo_valid_cmd->add_option("--model", c.model_path, "Check one model only");
  fo_valid_cmd->add_option("--max-individuals", c.max_individuals,
                           "Largest domain swept");
  add_assignment_flags(fo_valid_cmd, c);
  add_output_flags(fo_valid_cmd, c);

  auto* compare_cmd =
      app.add_subcommand("compare", "Sweep against the classical oracles");
  compare_cmd->add_option("--vars", c.vars, "Propositional variables");
  compare_cmd->add_option("--prop-depth", c.prop_depth,
                          "Operators per propositional formula");
  compare_cmd->add_option("--fo-depth", c.fo_depth,
                          "Operators per first-order formula");
  compare_cmd->add_option("--quantifiers", c.quantifiers, "Quantifier bound");
  compare_cmd->add_option("--predicates", c.predicates, "Predicates");
  compare_cmd->add_option("--max-individuals", c.max_individuals,
                          "Largest domain swept");
  compare_cmd->add_option("--record-limit", c.record_limit,
                          "Disagreements listed per sweep");
  compare_cmd->add_flag("--no-prop", c.no_prop, "Skip the propositional sweep");
  compare_cmd->add_flag("--no-fo", c.no_fo, "Skip the first-order sweep");
  add_assignment_flags(compare_cmd, c);
  add_output_flags(compare_cmd, c);

  auto* proof_cmd = app.add_subcommand("check-proof", "Check a proof script");
  proof_cmd->add_option("script", c.input_path)->required();
  add_output_flags(proof_cmd, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pm: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(c, out);
    if (*eval_cmd) return cmd_eval(c, out);
    if (*taut_cmd) return cmd_taut(c, out);
    if (*fo_eval_cmd) return cmd_fo_eval(c, out);
    if (*fo_valid_cmd) return cmd_fo_valid(c, out);
    if (*compare_cmd) {
      return cmd_compare(c, compare_cmd->count("--policy") > 0, out);
    }
    if (*proof_cmd) return cmd_check_proof(c, out);
  } catch (const std::exception& e) {
    err << "pm: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pm::cli
