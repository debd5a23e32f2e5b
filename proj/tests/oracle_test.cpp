#include <gtest/gtest.h>

#include <set>

#include "pm/error.hpp"
#include "pm/oracle.hpp"
#include "pm/parse.hpp"

namespace pm {
namespace {

TEST(TruthTable, Examples) {
  for (bool p : {true, false}) {
    EXPECT_TRUE(truth_table_eval(parse("p v ~p"), {{"p", p}}));
    EXPECT_TRUE(truth_table_eval(parse("p .=>. p"), {{"p", p}}));
  }
  EXPECT_FALSE(truth_table_eval(parse("p v q"), {{"p", false}, {"q", false}}));
  EXPECT_TRUE(truth_table_eval(parse("p <=> q"), {{"p", false}, {"q", false}}));
  EXPECT_FALSE(truth_table_eval(parse("p . q"), {{"p", true}, {"q", false}}));
}

TEST(TruthTable, RejectsOutsideFragment) {
  EXPECT_THROW(truth_table_eval(parse("p"), {}), EvaluationError);
  EXPECT_THROW(truth_table_eval(parse("(x).S(x)"), {}), EvaluationError);
}

TarskiModel model_ab(std::set<std::vector<std::string>> s_ext) {
  TarskiModel m;
  m.domain = {"a", "b"};
  m.extensions["S"] = std::move(s_ext);
  return m;
}

TEST(Tarski, Examples) {
  EXPECT_TRUE(tarski_eval(parse("(x).S(x)"), model_ab({{"a"}, {"b"}})));
  EXPECT_FALSE(tarski_eval(parse("(Ex).S(x)"), model_ab({})));
  EXPECT_FALSE(tarski_eval(parse("(x).S(x)"), model_ab({{"a"}})));
}

TEST(Tarski, EnvironmentAndPropositionalValues) {
  TarskiModel m = model_ab({{"a"}});
  m.prop_values["p"] = false;
  EXPECT_TRUE(tarski_eval(parse("S(x)"), m, {{"x", "a"}}));
  EXPECT_FALSE(tarski_eval(parse("S(x) v p"), m, {{"x", "b"}}));
  EXPECT_THROW(tarski_eval(parse("S(y)"), m, {{"x", "a"}}), EvaluationError);
  EXPECT_THROW(tarski_eval(parse("q"), m), EvaluationError);
  EXPECT_THROW(tarski_eval(parse("(x).T(x)"), m), EvaluationError);
}

TEST(Tarski, FromWorld) {
  World w;
  w.add_individual("a");
  w.add_individual("b");
  w.add_relation("S", 1);
  w.add_fact("S", {"b"});
  const TarskiModel m = TarskiModel::from_world(w);
  EXPECT_EQ(m.domain, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.extensions.at("S"),
            (std::set<std::vector<std::string>>{{"b"}}));
  EXPECT_TRUE(m.prop_values.empty());
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_formulas({"p"}, {}, 0, 0), std::vector<Formula>{parse("p")});
  EXPECT_EQ(enumerate_formulas({"p"}, {}, 1, 0),
            (std::vector<Formula>{parse("p"), parse("~p"), parse("p v p")}));
}

// N(0) = v; N(n) = N(n-1) + sum over i + j = n - 1 of N(i) N(j).
std::vector<std::size_t> exact_counts(std::size_t vars, std::size_t depth) {
  std::vector<std::size_t> n(depth + 1);
  n[0] = vars;
  for (std::size_t k = 1; k <= depth; ++k) {
    n[k] = n[k - 1];
    for (std::size_t i = 0; i + 1 <= k; ++i) n[k] += n[i] * n[k - 1 - i];
  }
  return n;
}

TEST(Enumerate, PropositionalCountsMatchRecurrence) {
  const auto n = exact_counts(3, 5);
  std::size_t cumulative = 0;
  for (std::size_t d = 0; d <= 5; ++d) {
    cumulative += n[d];
    EXPECT_EQ(enumerate_formulas({"p", "q", "r"}, {}, d, 0).size(), cumulative);
  }
  EXPECT_EQ(cumulative, 82575u);
}

TEST(Enumerate, OrderedAndDuplicateFree) {
  const auto fs = enumerate_formulas({"p"}, {"S", "T"}, 3, 2);
  std::set<Formula> seen;
  std::size_t last_ops = 0;
  for (const auto& f : fs) {
    EXPECT_TRUE(seen.insert(f).second) << print(f);
    EXPECT_GE(f.operator_count(), last_ops);
    EXPECT_LE(f.operator_count(), 3u);
    EXPECT_LE(f.quantifier_count(), 2u);
    last_ops = f.operator_count();
  }
  EXPECT_TRUE(seen.contains(parse("(x)(y)(S(x) v T(y))")) ||
              seen.contains(parse("(x).(y).S(x)")));
}

// A propositional evaluator whose negation passes its operand through.
Meaning broken_eval(const Formula& f, const PropAssignment& h,
                    TransversalPolicy policy) {
  switch (f.kind()) {
    case Kind::negation:
      return broken_eval(f.operand(), h, policy);
    case Kind::disjunction:
      return unite(broken_eval(f.left(), h, policy),
                   broken_eval(f.right(), h, policy));
    default:
      return eval_prop(f, h, policy);
  }
}

SweepConfig small_config() {
  SweepConfig c;
  c.prop_vars = 2;
  c.prop_depth = 3;
  c.fo_depth = 3;
  c.max_individuals = 2;
  return c;
}

TEST(Equivalence, SmallSweepsAgree) {
  const EquivalenceReport r = check_equivalence(small_config());
  ASSERT_EQ(r.sweeps.size(), 2u);
  EXPECT_EQ(r.total_disagreements(), 0u);
  EXPECT_FALSE(r.minimal_counterexample());
  EXPECT_GT(r.sweeps[0].checks, 0u);
  EXPECT_GT(r.sweeps[1].checks, 0u);
}

TEST(Equivalence, CorruptedNegationIsCaught) {
  Evaluators ev = Evaluators::standard();
  ev.prop = broken_eval;
  SweepConfig c = small_config();
  c.first_order = false;
  const EquivalenceReport r = check_equivalence(c, ev);
  EXPECT_GT(r.total_disagreements(), 0u);
  const auto d = r.minimal_counterexample();
  ASSERT_TRUE(d);
  EXPECT_EQ(d->kind, "oracle");
  EXPECT_EQ(d->formula, "~p");
  EXPECT_EQ(d->assignment, "p=T");
  EXPECT_FALSE(d->expected);
  EXPECT_EQ(d->got, std::optional<bool>(true));
  EXPECT_LE(r.sweeps[0].records.size(), c.record_limit);
}

TEST(Equivalence, CorruptedQuantifierIsCaught) {
  Evaluators ev = Evaluators::standard();
  // Reads every universal as existential.
  ev.fo = [](const Formula& f, const FoBinding& b, const PropAssignment& h,
             TransversalPolicy policy, const BaseMode& mode) {
    std::function<Formula(const Formula&)> swap = [&](const Formula& g) {
      switch (g.kind()) {
        case Kind::universal:
          return Formula::existential(g.variable(), swap(g.operand()));
        case Kind::existential:
          return Formula::existential(g.variable(), swap(g.operand()));
        case Kind::negation:
          return Formula::negation(swap(g.operand()));
        case Kind::disjunction:
          return Formula::disjunction(swap(g.left()), swap(g.right()));
        default:
          return g;
      }
    };
    return eval_fo(swap(f), b, h, policy, mode);
  };
  SweepConfig c = small_config();
  c.propositional = false;
  const EquivalenceReport r = check_equivalence(c, ev);
  EXPECT_GT(r.sweeps[0].oracle_disagreements, 0u);
  ASSERT_TRUE(r.minimal_counterexample());
}

TEST(Equivalence, EvaluatorErrorsAreCounted) {
  Evaluators ev = Evaluators::standard();
  ev.prop = [](const Formula&, const PropAssignment&,
               TransversalPolicy) -> Meaning {
    throw EvaluationError("boom");
  };
  SweepConfig c = small_config();
  c.first_order = false;
  c.prop_depth = 1;
  const EquivalenceReport r = check_equivalence(c, ev);
  EXPECT_EQ(r.sweeps[0].errors, r.sweeps[0].checks);
  EXPECT_EQ(r.minimal_counterexample()->kind, "error");
}

TEST(Report, JsonIsStableAndComplete) {
  SweepConfig c = small_config();
  c.fo_depth = 2;
  const auto a = to_json(check_equivalence(c));
  const auto b = to_json(check_equivalence(c));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["disagreements"], 0);
  EXPECT_EQ(a["config"]["mode"], "canonical");
  EXPECT_EQ(a["sweeps"][0]["name"], "propositional");
  EXPECT_EQ(a["sweeps"][1]["name"], "first-order");
  EXPECT_TRUE(a["sweeps"][0]["records"].is_array());
}

TEST(Report, JsonRecordsCarryDisagreements) {
  Evaluators ev = Evaluators::standard();
  ev.prop = broken_eval;
  SweepConfig c = small_config();
  c.first_order = false;
  c.record_limit = 2;
  const auto j = to_json(check_equivalence(c, ev));
  ASSERT_EQ(j["sweeps"][0]["records"].size(), 2u);
  const auto& rec = j["sweeps"][0]["records"][0];
  EXPECT_EQ(rec["formula"], "~p");
  EXPECT_EQ(rec["expected"], false);
  EXPECT_EQ(rec["got"], true);
}

TEST(Report, TextSummary) {
  SweepConfig c = small_config();
  c.first_order = false;
  const std::string text = to_text(check_equivalence(c));
  EXPECT_EQ(text.rfind("mode: canonical seed: 0\n", 0), 0u);
  EXPECT_NE(text.find("\n0 disagreements\n"), std::string::npos);
}

TEST(Report, SampledModeIsDeterministic) {
  SweepConfig c = small_config();
  c.first_order = false;
  c.mode = AssignmentMode::sampled(42, 4, 2);
  const auto a = to_json(check_equivalence(c));
  EXPECT_EQ(a.dump(), to_json(check_equivalence(c)).dump());
  EXPECT_EQ(a["config"]["seed"], 42);
  EXPECT_EQ(a["disagreements"], 0);
}

TEST(DescribeWorld, Format) {
  World w;
  w.add_individual("a");
  w.add_individual("b");
  w.add_relation("S", 1);
  w.add_relation("T", 1);
  w.add_fact("S", {"a"});
  w.set_constant("P", true);
  EXPECT_EQ(describe_world(w), "{a,b} S={a} T={} P=T");
}

}  // namespace
}  // namespace pm
