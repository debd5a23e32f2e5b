// Finite worlds of elementary complexes.
//
// A world fixes individuals, relations with their arities, the positive
// facts, and the truth values of propositional constants (0-ary relations).
// Every (relation, argument tuple) over the individuals yields exactly one
// existing complex: the positive one when it is a fact, the negative one
// otherwise.

#ifndef PM_ONTOLOGY_HPP
#define PM_ONTOLOGY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pm {

enum class Polarity : std::uint8_t { positive, negative };

struct ElementaryComplex {
  std::string relation;
  std::vector<std::string> args;
  Polarity polarity = Polarity::positive;

  friend auto operator<=>(const ElementaryComplex&,
                          const ElementaryComplex&) = default;
  friend bool operator==(const ElementaryComplex&,
                         const ElementaryComplex&) = default;
};

// "S(a)+", "R(a,b)-", "P+" for 0-ary.
std::string render(const ElementaryComplex& c);

// Opposite polarity, same relation and arguments.
ElementaryComplex nu(const ElementaryComplex& c);

// <x,x> is diagonal; <x,nu(x)>, written <x,0>, is flipped.
enum class Tag : std::uint8_t { diagonal, flipped };

struct B1Pair {
  ElementaryComplex base;
  Tag tag = Tag::diagonal;

  friend auto operator<=>(const B1Pair&, const B1Pair&) = default;
  friend bool operator==(const B1Pair&, const B1Pair&) = default;
};

// "<S(a)+,=>" or "<S(a)+,0>".
std::string render(const B1Pair& p);

// Swaps diagonal and flipped, keeping the base.
B1Pair phi(const B1Pair& p);

class World {
 public:
  void add_individual(const std::string& name);
  void add_relation(const std::string& name, int arity);
  // Relation and individuals must already be declared.
  void add_fact(const std::string& relation,
                const std::vector<std::string>& args);
  void remove_fact(const std::string& relation,
                   const std::vector<std::string>& args);
  void set_constant(const std::string& name, bool value);

  const std::vector<std::string>& individuals() const { return individuals_; }
  const std::map<std::string, int>& relations() const { return relations_; }
  const std::map<std::string, bool>& constants() const { return constants_; }
  const std::set<std::pair<std::string, std::vector<std::string>>>& facts()
      const {
    return facts_;
  }

  bool has_individual(const std::string& name) const;
  bool has_relation(const std::string& name) const;
  bool has_constant(const std::string& name) const;

  // Throws WorldError for unknown relations, individuals or wrong arity.
  bool holds(const std::string& relation,
             const std::vector<std::string>& args) const;
  bool constant_value(const std::string& name) const;

  // Whether `c` is one of the complexes that exist in this world.
  bool exists(const ElementaryComplex& c) const;

  // Line-oriented text form accepted by parse_world.
  std::string to_text() const;

  friend bool operator==(const World&, const World&) = default;

 private:
  void check_args(const std::string& relation,
                  const std::vector<std::string>& args) const;

  std::vector<std::string> individuals_;  // sorted, unique
  std::map<std::string, int> relations_;
  std::set<std::pair<std::string, std::vector<std::string>>> facts_;
  std::map<std::string, bool> constants_;
};

// Directives, one per line: "individual <name>", "relation <name>/<arity>",
// "fact <name>(<a>,<b>,...)", "prop <name> true|false". Blank lines and
// lines starting with '#' are skipped. Throws WorldError.
World parse_world(std::string_view text);
World load_world(const std::string& path);

// All existing complexes, relations first (in name order, argument tuples
// lexicographic), then propositional constants.
std::vector<ElementaryComplex> b0(const World& w);

class Meaning;

// {{<c,=>}} for the positive complex when the fact holds, otherwise
// {{<c',0>}} for the existing negative complex. A 0-ary relation name may
// also be a propositional constant.
Meaning canonical_atom_meaning(const World& w, const std::string& relation,
                               const std::vector<std::string>& args);

}  // namespace pm

#endif  // PM_ONTOLOGY_HPP
