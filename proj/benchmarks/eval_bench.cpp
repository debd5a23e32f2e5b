#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "pm/fo_semantics.hpp"
#include "pm/meaning.hpp"
#include "pm/oracle.hpp"
#include "pm/parse.hpp"
#include "pm/prop_semantics.hpp"

namespace {

void BM_Parse(benchmark::State& state) {
  const std::string text = "p v q .=>. q v p ..<=>.. ~(p . ~r) v (x). S(x) v p";
  for (auto _ : state) benchmark::DoNotOptimize(pm::parse(text));
}
BENCHMARK(BM_Parse);

void BM_EvalProp(benchmark::State& state) {
  const auto policy = static_cast<pm::TransversalPolicy>(state.range(0));
  const pm::Formula f = pm::parse("~(p v ~q) v ~(~r v (q . p))");
  const auto vars = pm::propositional_variables(f);
  const auto rows = pm::enumerate_assignments(
      vars, pm::world_for_variables(vars), pm::AssignmentMode::canonical());
  for (auto _ : state) {
    for (const auto& h : rows) benchmark::DoNotOptimize(pm::eval_prop(f, h, policy));
  }
}
BENCHMARK(BM_EvalProp)->Arg(0)->Arg(1);

void BM_MinimalTransversals(benchmark::State& state) {
  std::vector<pm::Member> family;
  const auto n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    pm::Member m;
    for (int j = 0; j < 3; ++j) {
      m.push_back({{"S", {std::string(1, static_cast<char>('a' + (i + j) % n))},
                    pm::Polarity::positive},
                   j % 2 ? pm::Tag::flipped : pm::Tag::diagonal});
    }
    family.push_back(pm::make_member(std::move(m)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pm::transversals(family, pm::TransversalPolicy::minimal));
  }
}
BENCHMARK(BM_MinimalTransversals)->Arg(4)->Arg(8)->Arg(12);

void BM_EvalFo(benchmark::State& state) {
  const pm::Formula f = pm::parse("(x).(Ey). S(x) v ~T(y) v p");
  const auto worlds = pm::monadic_worlds({"S", "T"},
                                         static_cast<std::size_t>(state.range(0)));
  std::vector<std::pair<pm::FoBinding, pm::PropAssignment>> cases;
  for (const auto& w : worlds) {
    const auto world = pm::with_constants_for(w, {"p"});
    for (const auto& h : pm::enumerate_assignments(
             {"p"}, world, pm::AssignmentMode::canonical())) {
      cases.emplace_back(pm::FoBinding::over(h.world), h);
    }
  }
  for (auto _ : state) {
    for (const auto& [b, h] : cases) {
      benchmark::DoNotOptimize(pm::eval_fo(f, b, h));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cases.size()));
}
BENCHMARK(BM_EvalFo)->Arg(1)->Arg(2)->Arg(3);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pm::enumerate_formulas(
        {"p", "q", "r"}, {}, static_cast<std::size_t>(state.range(0)), 0));
  }
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
