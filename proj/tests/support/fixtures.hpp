#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "condw/knowledge_base.hpp"
#include "condw/logic.hpp"

namespace condw::testing {

/// Conditionals are given as (consequent, antecedent) text pairs.
inline KnowledgeBase make_kb(std::vector<std::string> signature,
                             const std::vector<std::pair<std::string, std::string>>& conditionals) {
  Alphabet alphabet(std::move(signature));
  std::vector<ConditionalDecl> decls;
  for (const auto& [b, a] : conditionals) {
    decls.push_back(ConditionalDecl{parse_formula(b, alphabet), parse_formula(a, alphabet)});
  }
  return KnowledgeBase(std::move(alphabet), std::move(decls));
}

/// r1 = (f|b), r2 = (!f|p), r3 = (!f|b&p), r4 = (b|p).
inline KnowledgeBase birds() {
  return make_kb({"p", "b", "f"}, {{"f", "b"}, {"!f", "p"}, {"!f", "b & p"}, {"b", "p"}});
}

/// r1 = (b|a), r2 = (b&c|a).
inline KnowledgeBase rstar() { return make_kb({"a", "b", "c"}, {{"b", "a"}, {"b & c", "a"}}); }

inline KnowledgeBase birds_star() {
  return make_kb({"p", "b", "f", "w", "a", "r"}, {{"f", "b"}, {"!f", "p"}, {"b", "p"}, {"w", "b"}, {"a", "f"}});
}

/// World from a literal list such as "p !b f"; every symbol must appear.
inline World world(const Alphabet& alphabet, const std::string& literals) {
  std::istringstream in(literals);
  std::string lit;
  std::uint32_t bits = 0;
  std::size_t seen = 0;
  while (in >> lit) {
    const bool negated = lit.front() == '!';
    const auto index = alphabet.index_of(negated ? lit.substr(1) : lit);
    if (!index) throw std::invalid_argument("unknown literal " + lit);
    if (!negated) bits |= std::uint32_t{1} << *index;
    ++seen;
  }
  if (seen != alphabet.size()) throw std::invalid_argument("incomplete world " + literals);
  return World(bits);
}

inline World world(const KnowledgeBase& kb, const std::string& literals) { return world(kb.alphabet(), literals); }

inline WorldSet worlds(const KnowledgeBase& kb, const std::string& formula) {
  return worlds_of(parse_formula(formula, kb.alphabet()), kb.alphabet());
}

inline Formula formula(const KnowledgeBase& kb, const std::string& text) { return parse_formula(text, kb.alphabet()); }

}  // namespace condw::testing
