#include "condw/logic.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "condw/error.hpp"
#include "condw/kernels.hpp"

namespace condw {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  return !s.empty() && is_ident_start(s.front()) && std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> symbols, std::size_t max_variables) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw AlphabetError("signature must declare at least one variable");
  const std::size_t cap = std::min(max_variables, kHardMaxVariables);
  if (symbols_.size() > cap) {
    throw AlphabetError("signature has " + std::to_string(symbols_.size()) + " variables; at most " +
                        std::to_string(cap) + " can be enumerated");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (!is_identifier(s)) throw AlphabetError("invalid variable name '" + s + "'");
    if (s == "true" || s == "false") throw AlphabetError("'" + s + "' is reserved");
    if (!seen.insert(s).second) throw AlphabetError("duplicate variable '" + s + "'");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::string world_label(const Alphabet& alphabet, World w) {
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i > 0) out += ' ';
    if (!w.holds(i)) out += '!';
    out += alphabet.symbol(i);
  }
  return out;
}

// --- WorldSet ---------------------------------------------------------------

WorldSet::WorldSet(std::size_t variables)
    : variables_(variables), words_(std::max<std::size_t>(1, (std::size_t{1} << variables) / 64), 0) {}

WorldSet WorldSet::all(std::size_t variables) {
  WorldSet s(variables);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.mask_tail();
  return s;
}

void WorldSet::mask_tail() {
  if (variables_ < 6) words_[0] &= (std::uint64_t{1} << (std::size_t{1} << variables_)) - 1;
}

std::uint64_t WorldSet::count() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool WorldSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<World> WorldSet::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return World(static_cast<std::uint32_t>(k * 64 + std::countr_zero(words_[k])));
  }
  return std::nullopt;
}

bool WorldSet::intersects(const WorldSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & other.words_[k]) return true;
  }
  return false;
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

WorldSet WorldSet::complement() const {
  WorldSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.mask_tail();
  return out;
}

WorldSet& WorldSet::operator&=(const WorldSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

WorldSet& WorldSet::operator-=(const WorldSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

std::vector<World> WorldSet::to_vector() const {
  std::vector<World> out;
  out.reserve(count());
  for_each([&](World w) { out.push_back(w); });
  return out;
}

// --- Formula ----------------------------------------------------------------

Formula Formula::top() { return Formula(Kind::Top, 0, {}); }
Formula Formula::bot() { return Formula(Kind::Bot, 0, {}); }
Formula Formula::var(std::size_t index) { return Formula(Kind::Var, index, {}); }
Formula Formula::negation(Formula child) { return Formula(Kind::Not, 0, {std::move(child)}); }

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty()) return top();
  if (children.size() == 1) return std::move(children.front());
  return Formula(Kind::And, 0, std::move(children));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty()) return bot();
  if (children.size() == 1) return std::move(children.front());
  return Formula(Kind::Or, 0, std::move(children));
}

Formula Formula::conjunction(Formula a, Formula b) {
  std::vector<Formula> c;
  c.push_back(std::move(a));
  c.push_back(std::move(b));
  return conjunction(std::move(c));
}

Formula Formula::disjunction(Formula a, Formula b) {
  std::vector<Formula> c;
  c.push_back(std::move(a));
  c.push_back(std::move(b));
  return disjunction(std::move(c));
}

std::size_t Formula::arity() const {
  if (kind_ == Kind::Var) return variable_ + 1;
  std::size_t a = 0;
  for (const auto& c : children_) a = std::max(a, c.arity());
  return a;
}

bool Formula::eval(World w) const {
  switch (kind_) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Var: return w.holds(variable_);
    case Kind::Not: return !children_.front().eval(w);
    case Kind::And:
      return std::all_of(children_.begin(), children_.end(), [w](const Formula& c) { return c.eval(w); });
    case Kind::Or:
      return std::any_of(children_.begin(), children_.end(), [w](const Formula& c) { return c.eval(w); });
  }
  return false;
}

// --- Parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Formula parse() {
    Formula f = parse_or();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    std::vector<Formula> parts;
    parts.push_back(parse_and());
    while (accept('|')) parts.push_back(parse_and());
    return Formula::disjunction(std::move(parts));
  }

  Formula parse_and() {
    std::vector<Formula> parts;
    parts.push_back(parse_not());
    while (accept('&')) parts.push_back(parse_not());
    return Formula::conjunction(std::move(parts));
  }

  Formula parse_not() {
    if (accept('!')) return Formula::negation(parse_not());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected formula", pos_);
    if (accept('(')) {
      Formula f = parse_or();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (!is_ident_start(text_[pos_])) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "true") return Formula::top();
    if (name == "false") return Formula::bot();
    auto index = alphabet_.index_of(name);
    if (!index) throw UnknownSymbolError(std::string(name), start);
    return Formula::var(*index);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
  }
}

void print(const Formula& f, const Alphabet& alphabet, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    print(c, alphabet, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Top: out += "true"; return;
    case Formula::Kind::Bot: out += "false"; return;
    case Formula::Kind::Var: out += alphabet.symbol(f.variable()); return;
    case Formula::Kind::Not:
      out += '!';
      child(f.children().front(), precedence(f.children().front().kind()) < 3);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      // Nested n-ary nodes of the same or weaker kind need parentheses or
      // they would be flattened by the parser.
      const int self = precedence(f.kind());
      const char* sep = f.kind() == Formula::Kind::And ? " & " : " | ";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += sep;
        first = false;
        child(c, precedence(c.kind()) <= self);
      }
      return;
    }
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).parse(); }

std::string to_string(const Formula& f, const Alphabet& alphabet) {
  std::string out;
  print(f, alphabet, out);
  return out;
}

WorldSet worlds_of(const Formula& f, const Alphabet& alphabet) {
  if (f.arity() > alphabet.size()) throw Error("formula refers to variables outside the alphabet");
  return kernels::formula_worlds(f, alphabet.size());
}

bool is_contradiction(const Formula& f, const Alphabet& alphabet) { return worlds_of(f, alphabet).empty(); }

}  // namespace condw
