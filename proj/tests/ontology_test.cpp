#include <gtest/gtest.h>

#include <algorithm>

#include "pm/error.hpp"
#include "pm/meaning.hpp"
#include "pm/ontology.hpp"

namespace pm {
namespace {

ElementaryComplex pos(const char* rel, std::vector<std::string> args) {
  return {rel, std::move(args), Polarity::positive};
}
ElementaryComplex neg(const char* rel, std::vector<std::string> args) {
  return {rel, std::move(args), Polarity::negative};
}

World unary_world(std::vector<std::string> individuals,
                  std::vector<std::string> s_facts) {
  World w;
  for (const auto& i : individuals) w.add_individual(i);
  w.add_relation("S", 1);
  for (const auto& f : s_facts) w.add_fact("S", {f});
  return w;
}

TEST(Render, ComplexesAndPairs) {
  EXPECT_EQ(render(pos("S", {"a"})), "S(a)+");
  EXPECT_EQ(render(neg("R", {"a", "b"})), "R(a,b)-");
  EXPECT_EQ(render(pos("P", {})), "P+");
  EXPECT_EQ(render(B1Pair{pos("S", {"a"}), Tag::diagonal}), "<S(a)+,=>");
  EXPECT_EQ(render(B1Pair{neg("S", {"b"}), Tag::flipped}), "<S(b)-,0>");
}

TEST(B0, SingleFact) {
  EXPECT_EQ(b0(unary_world({"a"}, {"a"})),
            std::vector<ElementaryComplex>{pos("S", {"a"})});
}

TEST(B0, UnaryWithMissingFact) {
  EXPECT_EQ(b0(unary_world({"a", "b"}, {"a"})),
            (std::vector<ElementaryComplex>{pos("S", {"a"}), neg("S", {"b"})}));
}

TEST(B0, BinaryRelation) {
  World w;
  w.add_individual("a");
  w.add_individual("b");
  w.add_relation("R", 2);
  w.add_fact("R", {"a", "b"});
  const auto got = b0(w);
  const std::vector<ElementaryComplex> want{
      neg("R", {"a", "a"}), pos("R", {"a", "b"}), neg("R", {"b", "a"}),
      neg("R", {"b", "b"})};
  EXPECT_EQ(got, want);
}

TEST(B0, ConstantsComeLast) {
  World w = unary_world({"a"}, {});
  w.set_constant("P", false);
  w.set_constant("Q", true);
  EXPECT_EQ(b0(w), (std::vector<ElementaryComplex>{
                       neg("S", {"a"}), neg("P", {}), pos("Q", {})}));
}

TEST(B0, ExactlyOnePolarityPerTuple) {
  World w;
  for (const char* i : {"a", "b", "c"}) w.add_individual(i);
  w.add_relation("R", 2);
  w.add_relation("S", 1);
  w.add_fact("R", {"a", "c"});
  w.add_fact("R", {"b", "b"});
  w.add_fact("S", {"c"});
  w.set_constant("P", true);
  const auto all = b0(w);
  EXPECT_EQ(all.size(), 9u + 3u + 1u);
  for (const auto& c : all) {
    EXPECT_TRUE(w.exists(c));
    EXPECT_FALSE(w.exists(nu(c))) << render(c);
    EXPECT_EQ(std::count(all.begin(), all.end(), nu(c)), 0);
  }
}

TEST(Nu, FlipsPolarity) {
  EXPECT_EQ(nu(pos("S", {"a"})), neg("S", {"a"}));
  EXPECT_EQ(nu(neg("S", {"a"})), pos("S", {"a"}));
  EXPECT_EQ(nu(pos("R", {"a", "b"})), neg("R", {"a", "b"}));
}

TEST(Phi, SwapsTag) {
  const B1Pair d{pos("S", {"a"}), Tag::diagonal};
  const B1Pair f{pos("S", {"a"}), Tag::flipped};
  EXPECT_EQ(phi(d), f);
  EXPECT_EQ(phi(f), d);
}

TEST(Involutions, NuAndPhi) {
  World w = unary_world({"a", "b"}, {"b"});
  w.set_constant("P", false);
  for (const auto& c : b0(w)) {
    EXPECT_EQ(nu(nu(c)), c);
    EXPECT_NE(nu(c), c);
    for (Tag t : {Tag::diagonal, Tag::flipped}) {
      const B1Pair p{c, t};
      EXPECT_EQ(phi(phi(p)), p);
      EXPECT_NE(phi(p), p);
    }
  }
}

TEST(CanonicalAtom, Examples) {
  World w = unary_world({"a", "b"}, {"a"});
  w.set_constant("P", false);
  EXPECT_EQ(canonical_atom_meaning(w, "S", {"a"}),
            (Meaning{{B1Pair{pos("S", {"a"}), Tag::diagonal}}}));
  EXPECT_EQ(canonical_atom_meaning(w, "S", {"b"}),
            (Meaning{{B1Pair{neg("S", {"b"}), Tag::flipped}}}));
  EXPECT_EQ(canonical_atom_meaning(w, "P", {}),
            (Meaning{{B1Pair{neg("P", {}), Tag::flipped}}}));
}

TEST(CanonicalAtom, SingletonGroundedAndTruthful) {
  World w;
  for (const char* i : {"a", "b"}) w.add_individual(i);
  w.add_relation("R", 2);
  w.add_fact("R", {"b", "a"});
  for (const char* x : {"a", "b"}) {
    for (const char* y : {"a", "b"}) {
      const Meaning m = canonical_atom_meaning(w, "R", {x, y});
      ASSERT_EQ(m.size(), 1u);
      ASSERT_EQ(m.members()[0].size(), 1u);
      EXPECT_TRUE(w.exists(m.members()[0][0].base));
      EXPECT_TRUE(satisfies_invariants(m, w));
      EXPECT_EQ(is_true(m), w.holds("R", {x, y}));
    }
  }
}

TEST(World, RejectsBadReferences) {
  World w = unary_world({"a"}, {});
  EXPECT_THROW(w.add_fact("S", {"b"}), WorldError);
  EXPECT_THROW(w.add_fact("T", {"a"}), WorldError);
  EXPECT_THROW(w.add_fact("S", {"a", "a"}), WorldError);
  EXPECT_THROW(w.holds("S", {"z"}), WorldError);
  EXPECT_THROW(w.add_relation("R", 0), WorldError);
  EXPECT_THROW(canonical_atom_meaning(w, "Q", {}), WorldError);
}

TEST(World, RemoveFact) {
  World w = unary_world({"a"}, {"a"});
  EXPECT_TRUE(w.holds("S", {"a"}));
  w.remove_fact("S", {"a"});
  EXPECT_FALSE(w.holds("S", {"a"}));
}

TEST(WorldText, ParsesDirectives) {
  const World w = parse_world(
      "# sample\n"
      "individual a\n"
      "individual b\n"
      "\n"
      "relation S/1\n"
      "relation R/2\n"
      "fact S(a)\n"
      "fact R(a, b)\n"
      "prop P false\n"
      "prop Q true\n");
  EXPECT_EQ(w.individuals(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(w.holds("S", {"a"}));
  EXPECT_FALSE(w.holds("S", {"b"}));
  EXPECT_TRUE(w.holds("R", {"a", "b"}));
  EXPECT_FALSE(w.constant_value("P"));
  EXPECT_TRUE(w.constant_value("Q"));
  EXPECT_EQ(parse_world(w.to_text()), w);
}

TEST(WorldText, Errors) {
  EXPECT_THROW(parse_world("individual a\nrelaton S/1\n"), WorldError);
  EXPECT_THROW(parse_world("relation S\n"), WorldError);
  EXPECT_THROW(parse_world("individual a\nrelation S/1\nfact S(b)\n"),
               WorldError);
  EXPECT_THROW(parse_world("prop P maybe\n"), WorldError);
  EXPECT_THROW(load_world("/nonexistent/world.txt"), Error);
}

TEST(WorldText, LoadsBundledWorld) {
  const World w = load_world(std::string(PM_TEST_DATA) + "/worlds/ab_sa.txt");
  EXPECT_EQ(w.individuals().size(), 2u);
  EXPECT_TRUE(w.holds("S", {"a"}));
  EXPECT_FALSE(w.holds("S", {"b"}));
}

}  // namespace
}  // namespace pm
