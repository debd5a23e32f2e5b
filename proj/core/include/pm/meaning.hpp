// Meanings: finite sets of non-empty finite sets of B1 pairs, and the set
// operations the interpretation functions are built from.

#ifndef PM_MEANING_HPP
#define PM_MEANING_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pm/ontology.hpp"

namespace pm {

// A member of a Meaning: sorted, duplicate-free, non-empty.
using Member = std::vector<B1Pair>;

Member make_member(std::vector<B1Pair> pairs);

// Canonically ordered set of members. Equality is set equality.
class Meaning {
 public:
  Meaning() = default;
  // Normalizes: sorts and de-duplicates pairs and members. Throws
  // EvaluationError if the result would be empty or hold an empty member.
  explicit Meaning(std::vector<Member> members);
  Meaning(std::initializer_list<std::initializer_list<B1Pair>> members);

  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const Meaning&, const Meaning&) = default;
  friend auto operator<=>(const Meaning&, const Meaning&) = default;

 private:
  std::vector<Member> members_;
};

// Members sorted, e.g. {{<S(a)+,=>,<S(b)-,0>},{<P+,0>}}.
std::string render(const Meaning& m);

// Union of the member families.
Meaning unite(const Meaning& a, const Meaning& b);

bool is_all_diagonal(const Member& m);

// True iff some member consists only of diagonal pairs.
bool is_true(const Meaning& m);

// Meaning invariants against a world: non-empty, no empty member, every base
// complex exists in the world.
bool satisfies_invariants(const Meaning& m, const World& w);

// Whether `individual` is a constituent of some complex in the union of m.
bool occurs_in(const Meaning& m, const std::string& individual);

enum class TransversalPolicy : std::uint8_t { minimal, full };

std::string to_string(TransversalPolicy p);
TransversalPolicy parse_policy(const std::string& text);

// Sets hitting every member of `family`, restricted to subsets of the
// family's union. `minimal` keeps only inclusion-minimal ones. The full policy
// enumerates the union's power set and throws EvaluationError above 24 pairs.
std::vector<Member> transversals(const std::vector<Member>& family,
                                 TransversalPolicy policy);

// Pointwise phi over every member.
std::vector<Member> upsilon(const std::vector<Member>& sets);

// The negation case of the interpretation function: upsilon of the
// transversals when there are two or more members, otherwise {{phi(z)}} for
// each z of the single member.
Meaning negate(const Meaning& m, TransversalPolicy policy);

}  // namespace pm

#endif  // PM_MEANING_HPP
