#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "pm/error.hpp"
#include "pm/parse.hpp"
#include "pm/proof.hpp"
#include "pm/prop_semantics.hpp"

namespace pm {
namespace {

namespace fs = std::filesystem;

std::vector<fs::path> scripts(const char* kind) {
  std::vector<fs::path> out;
  for (const auto& e :
       fs::directory_iterator(fs::path(PM_TEST_DATA) / "proofs" / kind)) {
    if (e.path().extension() == ".pm") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string expected_failure(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  const std::regex marker(R"(^#\s*expect-fail:\s*(\S+))");
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_search(line, m, marker)) return m[1];
  }
  return {};
}

TEST(AxiomInstance, Examples) {
  EXPECT_EQ(axiom_instance("Taut", {{"p", parse("q")}}), parse("q v q .=>. q"));
  EXPECT_EQ(axiom_instance("Add", {{"q", parse("p")}, {"p", parse("p")}}),
            parse("p .=>. p v p"));
}

TEST(AxiomInstance, SchemaShapes) {
  EXPECT_EQ(axiom_schema("Perm"), parse("(p v q) => (q v p)"));
  EXPECT_EQ(axiom_schema("Assoc"), parse("(p v (q v r)) => (q v (p v r))"));
  EXPECT_EQ(axiom_schema("Sum"), parse("(q => r) => ((p v q) => (p v r))"));
  EXPECT_EQ(axiom_names(),
            (std::vector<std::string>{"Taut", "Add", "Perm", "Assoc", "Sum"}));
}

TEST(AxiomInstance, Errors) {
  EXPECT_THROW(axiom_instance("Ident", {{"p", parse("p")}}), EvaluationError);
  EXPECT_THROW(axiom_instance("Add", {{"p", parse("p")}}), EvaluationError);
  EXPECT_THROW(axiom_instance("Taut", {{"p", parse("p")}, {"q", parse("p")}}),
               EvaluationError);
}

TEST(AxiomInstance, InstancesAreTautologies) {
  const std::vector<Formula> fillers{parse("p"), parse("~q"), parse("p v r"),
                                     parse("q => ~p")};
  for (const auto& name : axiom_names()) {
    const auto vars = propositional_variables(axiom_schema(name));
    for (const auto& a : fillers) {
      for (const auto& b : fillers) {
        std::map<std::string, Formula> subst;
        std::size_t i = 0;
        for (const auto& v : vars) subst.emplace(v, (i++ % 2) ? a : b);
        const Formula f = axiom_instance(name, subst);
        EXPECT_EQ(is_tautology(f, world_for_variables(propositional_variables(f)),
                               AssignmentMode::canonical())
                      .verdict,
                  Verdict::tautology)
            << name << ": " << print(f);
      }
    }
  }
}

TEST(ModusPonens, Examples) {
  EXPECT_EQ(apply_mp(parse("p .=>. q"), parse("p")), parse("q"));
  EXPECT_THROW(apply_mp(parse("p v q"), parse("p")), EvaluationError);
  EXPECT_EQ(apply_mp(parse("(p v p) .=>. p"), parse("p v p")), parse("p"));
  EXPECT_THROW(apply_mp(parse("p => q"), parse("q")), EvaluationError);
}

TEST(CheckProof, SingleAxiomLine) {
  const ProofVerdict v =
      check_proof(parse_proof_script("1 p v p .=>. p ; AX Taut p=p\n"));
  EXPECT_TRUE(v.valid);
  EXPECT_FALSE(v.soundness_alarm);
  ASSERT_EQ(v.lines.size(), 1u);
  EXPECT_EQ(v.lines[0].tautology, std::optional<bool>(true));
}

TEST(CheckProof, LaterLinesUncheckedAfterFailure) {
  const ProofVerdict v = check_proof(parse_proof_script(
      "a p v p .=>. p ; AX Taut p=p\n"
      "b q ; MP a a\n"
      "c p .=>. p v p ; AX Add p=p,q=p\n"));
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.first_failure, std::optional<std::size_t>(1));
  EXPECT_EQ(v.lines[0].status, LineStatus::valid);
  EXPECT_EQ(v.lines[1].status, LineStatus::invalid);
  EXPECT_FALSE(v.lines[1].reason.empty());
  EXPECT_EQ(v.lines[2].status, LineStatus::unchecked);
  EXPECT_FALSE(v.lines[2].tautology);
}

TEST(ScriptFormat, ParsesJustifications) {
  const ProofScript s = parse_proof_script(
      "# comment\n"
      "\n"
      "h1 q .=>. p => q ; AX Add p=~p,q=q\n"
      "h2 r .=>. p => r ; SUB h1 q=r\n"
      "h3 p ; MP h1 h2\n");
  ASSERT_EQ(s.lines.size(), 3u);
  EXPECT_EQ(s.lines[0].label, "h1");
  EXPECT_EQ(s.lines[0].source_line, 3u);
  EXPECT_EQ(s.lines[0].justification.kind, Justification::Kind::axiom);
  EXPECT_EQ(s.lines[0].justification.schema, "Add");
  EXPECT_EQ(s.lines[0].justification.mapping.at("p"), parse("~p"));
  EXPECT_EQ(s.lines[1].justification.kind, Justification::Kind::substitution);
  EXPECT_EQ(s.lines[1].justification.source, "h1");
  EXPECT_EQ(s.lines[2].justification.major, "h1");
  EXPECT_EQ(s.lines[2].justification.minor, "h2");
}

TEST(ScriptFormat, MappingFormulasMayUseConnectives) {
  const ProofScript s =
      parse_proof_script("1 p ; AX Sum p=q => r,q=~(p <=> q),r=p v q\n");
  EXPECT_EQ(s.lines[0].justification.mapping.at("p"), parse("q => r"));
  EXPECT_EQ(s.lines[0].justification.mapping.at("q"), parse("~(p <=> q)"));
}

struct BadScript {
  const char* text;
  std::size_t line;
};

class ScriptErrors : public ::testing::TestWithParam<BadScript> {};

TEST_P(ScriptErrors, ReportLine) {
  try {
    parse_proof_script(GetParam().text);
    FAIL() << "accepted " << GetParam().text;
  } catch (const ProofFormatError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, ScriptErrors,
    ::testing::Values(BadScript{"1 p v ~p AX Taut p=p\n", 1},
                      BadScript{"# c\n1 p ; XX 1\n", 2},
                      BadScript{"1 p ; MP 1\n", 1},
                      BadScript{"1 p ; AX Taut s=p\n", 1},
                      BadScript{"1 p ; AX Taut p\n", 1},
                      BadScript{"1 p ; SUB 1\n", 1},
                      BadScript{"1 p ; AX Taut p=p,p=q\n", 1},
                      BadScript{"1 p v ; AX Taut p=p\n", 1},
                      BadScript{"1 p ; AX\n", 1},
                      BadScript{"p ; AX Taut p=p\n", 1}));

TEST(Corpus, HasEnoughScripts) {
  EXPECT_GE(scripts("valid").size(), 5u);
  EXPECT_GE(scripts("faulty").size(), 5u);
}

TEST(Corpus, ValidScriptsCheckAndEveryLineIsATautology) {
  for (const auto& path : scripts("valid")) {
    const ProofVerdict v = check_proof(load_proof_script(path.string()));
    EXPECT_TRUE(v.valid) << path;
    EXPECT_FALSE(v.soundness_alarm) << path;
    for (const auto& line : v.lines) {
      EXPECT_EQ(line.status, LineStatus::valid) << path << " " << line.label;
      EXPECT_EQ(line.tautology, std::optional<bool>(true))
          << path << " " << line.label;
    }
  }
}

TEST(Corpus, FaultyScriptsFailAtTheMarkedLine) {
  for (const auto& path : scripts("faulty")) {
    const std::string label = expected_failure(path);
    ASSERT_FALSE(label.empty()) << path << " lacks an expect-fail marker";
    const ProofVerdict v = check_proof(load_proof_script(path.string()));
    EXPECT_FALSE(v.valid) << path;
    ASSERT_TRUE(v.first_failure) << path;
    EXPECT_EQ(v.lines[*v.first_failure].label, label) << path;
    for (std::size_t i = 0; i < v.lines.size(); ++i) {
      const LineStatus want = i < *v.first_failure    ? LineStatus::valid
                              : i == *v.first_failure ? LineStatus::invalid
                                                      : LineStatus::unchecked;
      EXPECT_EQ(v.lines[i].status, want) << path << " line " << i;
    }
  }
}

TEST(Corpus, LoadErrors) {
  EXPECT_THROW(load_proof_script("/nonexistent/script.pm"), Error);
}

TEST(LineStatusText, Names) {
  EXPECT_EQ(to_string(LineStatus::valid), "valid");
  EXPECT_EQ(to_string(LineStatus::invalid), "invalid");
  EXPECT_EQ(to_string(LineStatus::unchecked), "unchecked");
}

}  // namespace
}  // namespace pm
