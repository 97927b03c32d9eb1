#pragma once

#include <random>
#include <string>
#include <vector>

#include "condw/knowledge_base.hpp"
#include "condw/logic.hpp"
#include "oracles.hpp"

namespace condw::testing {

inline Formula random_formula(std::mt19937_64& rng, std::size_t variables, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  std::uniform_int_distribution<std::size_t> var(0, variables - 1);
  switch (pick(rng)) {
    case 0: return Formula::var(var(rng));
    case 1: return Formula::negation(Formula::var(var(rng)));
    case 2: return Formula::negation(random_formula(rng, variables, depth - 1));
    case 3:
    case 4: return Formula::conjunction(random_formula(rng, variables, depth - 1), random_formula(rng, variables, depth - 1));
    default: return Formula::disjunction(random_formula(rng, variables, depth - 1), random_formula(rng, variables, depth - 1));
  }
}

inline Alphabet letters(std::size_t m) {
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < m; ++i) symbols.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(symbols);
}

/// Random knowledge base with the given numbers of variables and
/// conditionals. Antecedents are satisfiable; consistency is not guaranteed.
inline KnowledgeBase random_kb(std::mt19937_64& rng, std::size_t variables, std::size_t conditionals) {
  const Alphabet alphabet = letters(variables);
  std::vector<ConditionalDecl> decls;
  while (decls.size() < conditionals) {
    Formula antecedent = random_formula(rng, variables, 2);
    if (is_contradiction(antecedent, alphabet)) continue;
    decls.push_back(ConditionalDecl{random_formula(rng, variables, 2), std::move(antecedent)});
  }
  return KnowledgeBase(alphabet, std::move(decls));
}

/// Random consistent knowledge base with 1..max_variables variables and
/// 0..max_conditionals conditionals. The size is drawn first so rejection
/// does not skew the sample towards small bases.
inline KnowledgeBase random_consistent_kb(std::mt19937_64& rng, std::size_t max_variables,
                                          std::size_t max_conditionals) {
  std::uniform_int_distribution<std::size_t> m_dist(1, max_variables);
  std::uniform_int_distribution<std::size_t> n_dist(0, max_conditionals);
  for (;;) {
    const std::size_t m = m_dist(rng);
    const std::size_t n = n_dist(rng);
    for (int attempt = 0; attempt < 200; ++attempt) {
      KnowledgeBase kb = random_kb(rng, m, n);
      if (is_consistent(kb)) return kb;
    }
  }
}

/// Random subset of the worlds of `variables` variables.
inline WorldSet random_world_set(std::mt19937_64& rng, std::size_t variables) {
  WorldSet s(variables);
  std::bernoulli_distribution coin(0.5);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << variables); ++w) {
    if (coin(rng)) s.insert(World(static_cast<std::uint32_t>(w)));
  }
  return s;
}

/// A pool of premise/conclusion world sets: ⊤, ⊥, every literal, every
/// conjunction and disjunction of two literals over distinct variables, and
/// `extra` random sets.
inline std::vector<WorldSet> query_pool(std::mt19937_64& rng, std::size_t variables, std::size_t extra) {
  std::vector<Formula> literals;
  for (std::size_t v = 0; v < variables; ++v) {
    literals.push_back(Formula::var(v));
    literals.push_back(Formula::negation(Formula::var(v)));
  }
  std::vector<WorldSet> pool{WorldSet::all(variables), WorldSet::none(variables)};
  for (const auto& l : literals) pool.push_back(oracle::worlds(l, variables));
  for (std::size_t i = 0; i < literals.size(); ++i) {
    for (std::size_t j = i + 1; j < literals.size(); ++j) {
      if (i / 2 == j / 2) continue;  // same variable
      pool.push_back(oracle::worlds(Formula::conjunction(literals[i], literals[j]), variables));
      pool.push_back(oracle::worlds(Formula::disjunction(literals[i], literals[j]), variables));
    }
  }
  for (std::size_t k = 0; k < extra; ++k) pool.push_back(random_world_set(rng, variables));
  return pool;
}

}  // namespace condw::testing
