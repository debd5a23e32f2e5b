#include "pm/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pm/error.hpp"

namespace pm {
namespace {

enum class Tok {
  prop,     // text = name
  pred,     // text = predicate, var = argument
  negate,
  forall,   // var = bound variable
  exists,   // var = bound variable
  lparen,
  rparen,
  dots,     // count = run length
  vel,
  implies,
  iff,
  end,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  std::string var;
  int count = 0;
};

bool is_indvar_start(char c) { return c >= 'x' && c <= 'z'; }
bool is_propvar_start(char c) { return c >= 'p' && c <= 'r'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (at_end()) {
        out.push_back({Tok::end, pos_, {}, {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  // Length of an indvar starting `ahead` characters from pos_, or 0.
  std::size_t indvar_length(std::size_t ahead) const {
    if (!is_indvar_start(peek(ahead))) return 0;
    std::size_t n = 1;
    while (is_digit(peek(ahead + n))) ++n;
    return n;
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      // "(x)" and "(Ex)" are quantifiers; anything else opens a group.
      if (std::size_t n = indvar_length(1); n > 0 && peek(1 + n) == ')') {
        Token t{Tok::forall, start, {}, std::string(text_.substr(pos_ + 1, n))};
        pos_ += n + 2;
        return t;
      }
      if (peek(1) == 'E') {
        if (std::size_t n = indvar_length(2); n > 0 && peek(2 + n) == ')') {
          Token t{Tok::exists, start, {},
                  std::string(text_.substr(pos_ + 2, n))};
          pos_ += n + 3;
          return t;
        }
      }
      ++pos_;
      return {Tok::lparen, start, {}, {}};
    }
    if (c == ')') {
      ++pos_;
      return {Tok::rparen, start, {}, {}};
    }
    if (c == '~') {
      ++pos_;
      return {Tok::negate, start, {}, {}};
    }
    if (c == '.') {
      Token t{Tok::dots, start, {}, {}};
      while (peek() == '.') {
        ++pos_;
        ++t.count;
      }
      return t;
    }
    if (c == 'v') {
      ++pos_;
      return {Tok::vel, start, {}, {}};
    }
    if (c == '=' && peek(1) == '>') {
      pos_ += 2;
      return {Tok::implies, start, {}, {}};
    }
    if (c == '<' && peek(1) == '=' && peek(2) == '>') {
      pos_ += 3;
      return {Tok::iff, start, {}, {}};
    }
    if (is_propvar_start(c)) {
      ++pos_;
      while (is_digit(peek())) ++pos_;
      return {Tok::prop, start, std::string(text_.substr(start, pos_ - start)),
              {}};
    }
    if (std::isupper(static_cast<unsigned char>(c))) return predicate(start);
    throw SyntaxError(std::string("unknown symbol '") + c + "'", start);
  }

  Token predicate(std::size_t start) {
    while (is_alnum(peek())) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    if (peek() != '(') {
      throw SyntaxError("predicate " + name + " needs an argument", pos_);
    }
    ++pos_;
    skip_space();
    const std::size_t arg_pos = pos_;
    const std::size_t n = indvar_length(0);
    if (n == 0) {
      throw SyntaxError("expected individual variable", arg_pos);
    }
    std::string var(text_.substr(pos_, n));
    pos_ += n;
    skip_space();
    if (peek() == ',') {
      throw SyntaxError("non-monadic application of predicate " + name, pos_);
    }
    if (peek() != ')') {
      throw SyntaxError("expected ')' after predicate argument", pos_);
    }
    ++pos_;
    return {Tok::pred, start, std::move(name), std::move(var)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

enum class OpClass { conjunction = 0, vel = 1, implies = 2, iff = 3 };

struct Operator {
  OpClass cls;
  int rank;
  std::size_t pos;

  // Larger keys bind more loosely.
  std::pair<int, int> key() const { return {rank, static_cast<int>(cls)}; }
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = sequence();
    if (peek().kind != Tok::end) {
      if (peek().kind == Tok::rparen) {
        throw SyntaxError("unbalanced ')'", peek().pos);
      }
      throw SyntaxError("unexpected token", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(index_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& take() {
    const Token& t = tokens_[index_];
    if (index_ + 1 < tokens_.size()) ++index_;
    return t;
  }

  static bool starts_unit(Tok k) {
    return k == Tok::prop || k == Tok::pred || k == Tok::negate ||
           k == Tok::forall || k == Tok::exists || k == Tok::lparen;
  }
  static bool is_connective(Tok k) {
    return k == Tok::vel || k == Tok::implies || k == Tok::iff;
  }
  static OpClass class_of(Tok k) {
    switch (k) {
      case Tok::vel:
        return OpClass::vel;
      case Tok::implies:
        return OpClass::implies;
      default:
        return OpClass::iff;
    }
  }

  // Operands joined by operators, up to (not including) ')', end of input,
  // or a dotted operator of rank >= stop_rank, which ends a dotted
  // quantifier's scope.
  Formula sequence(int stop_rank = kNoStop) {
    std::vector<Formula> operands;
    std::vector<Operator> ops;
    while (true) {
      operands.push_back(unit());
      const Token& t = peek();
      if (t.kind == Tok::end || t.kind == Tok::rparen) break;
      if (t.kind == Tok::dots && t.count >= stop_rank) break;
      if (is_connective(t.kind) && peek(1).kind == Tok::dots &&
          peek(1).count >= stop_rank) {
        break;
      }
      if (t.kind == Tok::dots) {
        const Token dots = take();
        const Token& after = peek();
        if (is_connective(after.kind)) {
          const Token conn = take();
          int rank = dots.count;
          if (peek().kind == Tok::dots) {
            const Token right = take();
            if (right.count != dots.count) {
              throw SyntaxError("unbalanced dots around connective", right.pos);
            }
          }
          ops.push_back({class_of(conn.kind), rank, conn.pos});
        } else if (starts_unit(after.kind)) {
          ops.push_back({OpClass::conjunction, dots.count, dots.pos});
        } else {
          throw SyntaxError("dots without a following operand", dots.pos);
        }
        continue;
      }
      if (is_connective(t.kind)) {
        const Token conn = take();
        int rank = 0;
        if (peek().kind == Tok::dots) rank = take().count;
        ops.push_back({class_of(conn.kind), rank, conn.pos});
        continue;
      }
      throw SyntaxError("expected connective or dots", t.pos);
    }
    return combine(operands, ops, 0, operands.size());
  }

  // Builds the tree for operands [lo, hi) joined by ops [lo, hi - 1).
  static Formula combine(const std::vector<Formula>& operands,
                         const std::vector<Operator>& ops, std::size_t lo,
                         std::size_t hi) {
    if (hi - lo == 1) return operands[lo];
    std::size_t split = lo;
    for (std::size_t i = lo; i + 1 < hi; ++i) {
      const auto k = ops[i].key();
      const auto best = ops[split].key();
      if (k > best) {
        split = i;
      } else if (k == best && i != split &&
                 ops[i].cls != OpClass::implies) {
        split = i;  // left grouping: the last of equals is principal
      }
    }
    Formula left = combine(operands, ops, lo, split + 1);
    Formula right = combine(operands, ops, split + 1, hi);
    switch (ops[split].cls) {
      case OpClass::conjunction:
        return Formula::conjunction(std::move(left), std::move(right));
      case OpClass::vel:
        return Formula::disjunction(std::move(left), std::move(right));
      case OpClass::implies:
        return Formula::implication(std::move(left), std::move(right));
      case OpClass::iff:
        return Formula::equivalence(std::move(left), std::move(right));
    }
    return left;
  }

  // One unary formula.
  Formula unit() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::prop:
        return Formula::prop_var(take().text);
      case Tok::pred: {
        const Token& p = take();
        return Formula::pred_app(p.text, p.var);
      }
      case Tok::negate:
        take();
        if (peek().kind == Tok::dots) {
          throw SyntaxError("dots cannot follow '~'", peek().pos);
        }
        return Formula::negation(unit());
      case Tok::forall:
      case Tok::exists: {
        const Token q = take();
        Formula body = [&] {
          if (peek().kind == Tok::dots) return sequence(take().count);
          return unit();
        }();
        return q.kind == Tok::forall
                   ? Formula::universal(q.var, std::move(body))
                   : Formula::existential(q.var, std::move(body));
      }
      case Tok::lparen: {
        const Token open = take();
        Formula inner = sequence();
        if (peek().kind != Tok::rparen) {
          throw SyntaxError("unbalanced '('", open.pos);
        }
        take();
        return inner;
      }
      case Tok::dots:
        throw SyntaxError("dots without a preceding operand", t.pos);
      case Tok::rparen:
      case Tok::end:
        throw SyntaxError("expected formula", t.pos);
      default:
        throw SyntaxError("expected formula, found connective", t.pos);
    }
  }

  static constexpr int kNoStop = 1 << 30;

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).parse_all();
}

}  // namespace pm
