#include "pm/meaning.hpp"

#include <algorithm>
#include <cstdint>

#include "pm/error.hpp"

namespace pm {

Member make_member(std::vector<B1Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

Meaning::Meaning(std::vector<Member> members) {
  if (members.empty()) throw EvaluationError("a meaning needs a member");
  for (auto& m : members) {
    m = make_member(std::move(m));
    if (m.empty()) throw EvaluationError("a meaning member cannot be empty");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

Meaning::Meaning(std::initializer_list<std::initializer_list<B1Pair>> members)
    : Meaning([&] {
        std::vector<Member> v;
        for (const auto& m : members) v.emplace_back(m);
        return v;
      }()) {}

std::string render(const Meaning& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.members().size(); ++i) {
    if (i) out += ',';
    out += '{';
    const Member& member = m.members()[i];
    for (std::size_t j = 0; j < member.size(); ++j) {
      if (j) out += ',';
      out += render(member[j]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

Meaning unite(const Meaning& a, const Meaning& b) {
  std::vector<Member> members = a.members();
  members.insert(members.end(), b.members().begin(), b.members().end());
  return Meaning(std::move(members));
}

bool is_all_diagonal(const Member& m) {
  return std::all_of(m.begin(), m.end(),
                     [](const B1Pair& p) { return p.tag == Tag::diagonal; });
}

bool is_true(const Meaning& m) {
  return std::any_of(m.members().begin(), m.members().end(), is_all_diagonal);
}

bool satisfies_invariants(const Meaning& m, const World& w) {
  if (m.members().empty()) return false;
  for (const auto& member : m.members()) {
    if (member.empty()) return false;
    for (const auto& pair : member) {
      if (!w.exists(pair.base)) return false;
    }
  }
  return true;
}

bool occurs_in(const Meaning& m, const std::string& individual) {
  for (const auto& member : m.members()) {
    for (const auto& pair : member) {
      const auto& args = pair.base.args;
      if (std::find(args.begin(), args.end(), individual) != args.end()) {
        return true;
      }
    }
  }
  return false;
}

std::string to_string(TransversalPolicy p) {
  return p == TransversalPolicy::minimal ? "minimal" : "full";
}

TransversalPolicy parse_policy(const std::string& text) {
  if (text == "minimal") return TransversalPolicy::minimal;
  if (text == "full") return TransversalPolicy::full;
  throw EvaluationError("unknown transversal policy '" + text + "'");
}

namespace {

using IndexSet = std::vector<std::uint32_t>;  // sorted

bool intersects(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

// Drops duplicates and every set that strictly contains another.
void keep_minimal(std::vector<IndexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> kept;
  for (auto& s : sets) {
    const bool dominated = std::any_of(
        kept.begin(), kept.end(), [&](const IndexSet& k) {
          return std::includes(s.begin(), s.end(), k.begin(), k.end());
        });
    if (!dominated) kept.push_back(std::move(s));
  }
  sets = std::move(kept);
}

// Berge's incremental construction: extend each partial transversal that
// misses the next edge by one element of that edge, then re-minimize.
std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& edges) {
  std::vector<IndexSet> current{IndexSet{}};
  for (const auto& edge : edges) {
    std::vector<IndexSet> next;
    for (const auto& t : current) {
      if (intersects(t, edge)) {
        next.push_back(t);
        continue;
      }
      for (std::uint32_t e : edge) {
        IndexSet grown = t;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), e), e);
        next.push_back(std::move(grown));
      }
    }
    keep_minimal(next);
    current = std::move(next);
  }
  return current;
}

constexpr std::size_t kFullPolicyLimit = 24;

std::vector<IndexSet> all_transversals(const std::vector<IndexSet>& edges,
                                       std::size_t universe) {
  if (universe > kFullPolicyLimit) {
    throw EvaluationError("full transversal policy is limited to unions of " +
                          std::to_string(kFullPolicyLimit) + " pairs");
  }
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : edges) {
    std::uint32_t mask = 0;
    for (auto i : e) mask |= 1u << i;
    edge_masks.push_back(mask);
  }
  std::vector<IndexSet> out;
  const std::uint32_t limit = 1u << universe;
  for (std::uint32_t s = 1; s < limit; ++s) {
    const bool hits = std::all_of(edge_masks.begin(), edge_masks.end(),
                                  [s](std::uint32_t m) { return (s & m) != 0; });
    if (!hits) continue;
    IndexSet set;
    for (std::uint32_t i = 0; i < universe; ++i) {
      if (s & (1u << i)) set.push_back(i);
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

std::vector<Member> transversals(const std::vector<Member>& family,
                                 TransversalPolicy policy) {
  std::vector<B1Pair> universe;
  for (const auto& m : family) universe.insert(universe.end(), m.begin(), m.end());
  universe = make_member(std::move(universe));

  std::vector<IndexSet> edges;
  edges.reserve(family.size());
  for (const auto& m : family) {
    IndexSet e;
    for (const auto& p : m) {
      auto it = std::lower_bound(universe.begin(), universe.end(), p);
      e.push_back(static_cast<std::uint32_t>(it - universe.begin()));
    }
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }

  const std::vector<IndexSet> found =
      policy == TransversalPolicy::minimal
          ? minimal_transversals(edges)
          : all_transversals(edges, universe.size());

  std::vector<Member> out;
  out.reserve(found.size());
  for (const auto& s : found) {
    Member m;
    m.reserve(s.size());
    for (auto i : s) m.push_back(universe[i]);
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Member> upsilon(const std::vector<Member>& sets) {
  std::vector<Member> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<B1Pair> flipped;
    flipped.reserve(s.size());
    for (const auto& p : s) flipped.push_back(phi(p));
    out.push_back(make_member(std::move(flipped)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Meaning negate(const Meaning& m, TransversalPolicy policy) {
  if (m.size() >= 2) return Meaning(upsilon(transversals(m.members(), policy)));
  if (m.size() == 0) throw EvaluationError("cannot negate an empty meaning");
  std::vector<Member> out;
  for (const auto& z : m.members().front()) out.push_back(Member{phi(z)});
  return Meaning(std::move(out));
}

}  // namespace pm
