#include "pm/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pm/error.hpp"
#include "pm/meaning.hpp"

namespace pm {

std::string render(const ElementaryComplex& c) {
  std::string out = c.relation;
  if (!c.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i) out += ',';
      out += c.args[i];
    }
    out += ')';
  }
  out += c.polarity == Polarity::positive ? '+' : '-';
  return out;
}

ElementaryComplex nu(const ElementaryComplex& c) {
  ElementaryComplex out = c;
  out.polarity = c.polarity == Polarity::positive ? Polarity::negative
                                                  : Polarity::positive;
  return out;
}

std::string render(const B1Pair& p) {
  return "<" + render(p.base) + (p.tag == Tag::diagonal ? ",=>" : ",0>");
}

B1Pair phi(const B1Pair& p) {
  return {p.base, p.tag == Tag::diagonal ? Tag::flipped : Tag::diagonal};
}

void World::add_individual(const std::string& name) {
  auto it = std::lower_bound(individuals_.begin(), individuals_.end(), name);
  if (it != individuals_.end() && *it == name) {
    throw WorldError("duplicate individual " + name);
  }
  individuals_.insert(it, name);
}

void World::add_relation(const std::string& name, int arity) {
  if (arity < 1) throw WorldError("relation " + name + " needs arity >= 1");
  if (relations_.contains(name) || constants_.contains(name)) {
    throw WorldError("duplicate relation " + name);
  }
  relations_.emplace(name, arity);
}

void World::check_args(const std::string& relation,
                       const std::vector<std::string>& args) const {
  auto it = relations_.find(relation);
  if (it == relations_.end()) throw WorldError("unknown relation " + relation);
  if (static_cast<int>(args.size()) != it->second) {
    throw WorldError("relation " + relation + " expects " +
                     std::to_string(it->second) + " arguments");
  }
  for (const auto& a : args) {
    if (!has_individual(a)) throw WorldError("unknown individual " + a);
  }
}

void World::add_fact(const std::string& relation,
                     const std::vector<std::string>& args) {
  check_args(relation, args);
  facts_.emplace(relation, args);
}

void World::remove_fact(const std::string& relation,
                        const std::vector<std::string>& args) {
  check_args(relation, args);
  facts_.erase({relation, args});
}

void World::set_constant(const std::string& name, bool value) {
  if (relations_.contains(name)) {
    throw WorldError(name + " is already a relation");
  }
  constants_[name] = value;
}

bool World::has_individual(const std::string& name) const {
  return std::binary_search(individuals_.begin(), individuals_.end(), name);
}

bool World::has_relation(const std::string& name) const {
  return relations_.contains(name);
}

bool World::has_constant(const std::string& name) const {
  return constants_.contains(name);
}

bool World::holds(const std::string& relation,
                  const std::vector<std::string>& args) const {
  check_args(relation, args);
  return facts_.contains({relation, args});
}

bool World::constant_value(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) {
    throw WorldError("unknown propositional constant " + name);
  }
  return it->second;
}

bool World::exists(const ElementaryComplex& c) const {
  const bool positive = c.polarity == Polarity::positive;
  if (c.args.empty()) {
    auto it = constants_.find(c.relation);
    return it != constants_.end() && it->second == positive;
  }
  auto rel = relations_.find(c.relation);
  if (rel == relations_.end() ||
      rel->second != static_cast<int>(c.args.size())) {
    return false;
  }
  for (const auto& a : c.args) {
    if (!has_individual(a)) return false;
  }
  return facts_.contains({c.relation, c.args}) == positive;
}

std::string World::to_text() const {
  std::ostringstream out;
  for (const auto& i : individuals_) out << "individual " << i << '\n';
  for (const auto& [name, arity] : relations_) {
    out << "relation " << name << '/' << arity << '\n';
  }
  for (const auto& [rel, args] : facts_) {
    out << "fact " << rel << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      out << (i ? "," : "") << args[i];
    }
    out << ")\n";
  }
  for (const auto& [name, value] : constants_) {
    out << "prop " << name << ' ' << (value ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw WorldError("world line " + std::to_string(line) + ": " + message);
}

}  // namespace

World parse_world(std::string_view text) {
  World w;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t space = line.find_first_of(" \t");
    const std::string directive = line.substr(0, space);
    const std::string rest =
        space == std::string::npos ? std::string() : trim(line.substr(space));
    try {
      if (directive == "individual") {
        if (!is_identifier(rest)) fail(line_no, "bad individual name");
        w.add_individual(rest);
      } else if (directive == "relation") {
        const std::size_t slash = rest.find('/');
        if (slash == std::string::npos) fail(line_no, "expected <name>/<arity>");
        const std::string name = trim(rest.substr(0, slash));
        const std::string arity = trim(rest.substr(slash + 1));
        if (!is_identifier(name) || arity.empty() ||
            !std::all_of(arity.begin(), arity.end(),
                         [](char c) { return std::isdigit(
                                          static_cast<unsigned char>(c)); })) {
          fail(line_no, "expected <name>/<arity>");
        }
        w.add_relation(name, std::stoi(arity));
      } else if (directive == "fact") {
        const std::size_t open = rest.find('(');
        if (open == std::string::npos || rest.back() != ')') {
          fail(line_no, "expected <name>(<args>)");
        }
        const std::string name = trim(rest.substr(0, open));
        std::vector<std::string> args;
        std::istringstream arg_stream(
            rest.substr(open + 1, rest.size() - open - 2));
        std::string arg;
        while (std::getline(arg_stream, arg, ',')) args.push_back(trim(arg));
        w.add_fact(name, args);
      } else if (directive == "prop") {
        std::istringstream parts(rest);
        std::string name, value, extra;
        parts >> name >> value;
        if (!is_identifier(name) || (value != "true" && value != "false") ||
            (parts >> extra)) {
          fail(line_no, "expected prop <name> true|false");
        }
        w.set_constant(name, value == "true");
      } else {
        fail(line_no, "unknown directive '" + directive + "'");
      }
    } catch (const WorldError& e) {
      const std::string what = e.what();
      if (what.rfind("world line", 0) == 0) throw;
      fail(line_no, what);
    }
  }
  return w;
}

World load_world(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorldError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_world(buf.str());
}

std::vector<ElementaryComplex> b0(const World& w) {
  std::vector<ElementaryComplex> out;
  const auto& inds = w.individuals();
  for (const auto& [name, arity] : w.relations()) {
    if (inds.empty()) continue;
    std::vector<std::size_t> index(static_cast<std::size_t>(arity), 0);
    while (true) {
      std::vector<std::string> args;
      args.reserve(index.size());
      for (std::size_t i : index) args.push_back(inds[i]);
      const bool positive = w.facts().contains({name, args});
      out.push_back({name, std::move(args),
                     positive ? Polarity::positive : Polarity::negative});
      // odometer over argument tuples
      std::size_t k = index.size();
      while (k > 0 && ++index[k - 1] == inds.size()) index[--k] = 0;
      if (k == 0) break;
    }
  }
  for (const auto& [name, value] : w.constants()) {
    out.push_back({name, {}, value ? Polarity::positive : Polarity::negative});
  }
  return out;
}

Meaning canonical_atom_meaning(const World& w, const std::string& relation,
                               const std::vector<std::string>& args) {
  bool fact = false;
  if (args.empty() && w.has_constant(relation)) {
    fact = w.constant_value(relation);
  } else {
    fact = w.holds(relation, args);
  }
  if (fact) return Meaning{{B1Pair{{relation, args, Polarity::positive},
                                   Tag::diagonal}}};
  return Meaning{{B1Pair{{relation, args, Polarity::negative}, Tag::flipped}}};
}

}  // namespace pm
