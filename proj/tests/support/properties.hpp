#pragma once

// Theorem-level checks over one knowledge base, shared by the unit tests and
// the acceptance runner. Each check is tallied by name so callers can report
// counts and violations.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "condw/c_representation.hpp"
#include "condw/ranking.hpp"
#include "condw/system_w.hpp"
#include "oracles.hpp"
#include "random_kb.hpp"

namespace condw::testing {

struct Tally {
  struct Entry {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
  };
  std::map<std::string, Entry> entries;

  void record(const std::string& name, bool ok, const std::string& context = {}) {
    Entry& e = entries[name];
    ++e.checks;
    if (!ok && e.violations++ == 0) e.first_violation = context;
  }

  std::uint64_t violations() const {
    std::uint64_t total = 0;
    for (const auto& [_, e] : entries) total += e.violations;
    return total;
  }
};

struct PropertyOptions {
  std::size_t extra_sets = 4;
  std::size_t axiom_samples = 400;
  std::uint64_t cr_bound = 3;
  bool check_c = true;
};

inline std::string set_label(const WorldSet& s) {
  std::string out = "{";
  s.for_each([&](World w) { out += (out.size() > 1 ? "," : "") + std::to_string(w.index()); });
  return out + "}";
}

/// <ʷ is a strict partial order, treats worlds with equal signatures alike,
/// and contains both the κ^Z order and the σ order.
inline void check_structure(const KnowledgeBase& kb, Tally& tally) {
  const PreferredStructure ps(kb);
  const RankingFunction z = system_z_ranking(kb, ps.partition());
  const auto layers = *oracle::partition(kb);
  const std::uint32_t count = static_cast<std::uint32_t>(std::uint64_t{1} << kb.alphabet().size());
  std::vector<std::uint8_t> less(std::size_t{count} * count);
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) less[a * count + b] = ps.less(World(a), World(b));
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    tally.record("w: irreflexive", !less[a * count + a]);
    for (std::uint32_t b = 0; b < count; ++b) {
      const bool ab = less[a * count + b];
      const std::string ctx = std::to_string(a) + "," + std::to_string(b);
      tally.record("w: matches definition", ab == oracle::w_less(kb, layers, World(a), World(b)), ctx);
      if (ab) tally.record("w: antisymmetric", !less[b * count + a], ctx);
      if (z.rank(World(a)) < z.rank(World(b))) tally.record("w: contains kappa_Z order", ab, ctx);
      if (oracle::sigma_less(kb, World(a), World(b))) tally.record("w: contains sigma order", ab, ctx);
      if (kb.falsified_by(World(a)) == kb.falsified_by(World(b))) {
        bool same = true;
        for (std::uint32_t c = 0; c < count; ++c) {
          same = same && less[c * count + a] == less[c * count + b] && less[a * count + c] == less[b * count + c];
        }
        tally.record("w: equal signatures are interchangeable", same, ctx);
      }
      if (!ab) continue;
      for (std::uint32_t c = 0; c < count; ++c) {
        if (less[b * count + c]) tally.record("w: transitive", less[a * count + c], ctx + "," + std::to_string(c));
      }
    }
  }
}

/// Z ⊆ W, σ ⊆ W and c ⊆ W (at the exact bound) over every pair of the pool.
inline void check_containment(const KnowledgeBase& kb, const std::vector<WorldSet>& pool, Tally& tally,
                              const PropertyOptions& options) {
  const PreferredStructure ps(kb);
  const RankingFunction z = system_z_ranking(kb, ps.partition());
  for (const WorldSet& a : pool) {
    for (const WorldSet& b : pool) {
      const std::string ctx = set_label(a) + " |~ " + set_label(b);
      const bool w = w_infer(ps, a, b);
      const bool zi = kappa_entails(z, a, b);
      const bool si = sigma_infer(kb, a, b);
      if (zi) tally.record("Z within W", w, ctx);
      if (si) tally.record("sigma within W", w, ctx);
      if (options.check_c && !w) tally.record("c within W", !c_infer(kb, a, b).entailed, ctx);
    }
  }
}

/// satisfies_cr agrees with accepting κ_η for every η ∈ {0..bound}^n.
inline void check_cr(const KnowledgeBase& kb, Tally& tally, const PropertyOptions& options) {
  oracle::for_each_impact_vector(kb.size(), options.cr_bound, [&](const std::vector<std::uint64_t>& eta) {
    tally.record("CR sound and complete", satisfies_cr(kb, eta) == oracle::accepts_all(kb, oracle::impact_ranks(kb, eta)));
  });
}

/// Reflexivity, left logical equivalence, right weakening, cut, cautious
/// monotony and or for system W on sampled triples.
inline void check_system_p(const KnowledgeBase& kb, const std::vector<WorldSet>& pool, std::mt19937_64& rng,
                           Tally& tally, const PropertyOptions& options) {
  const PreferredStructure ps(kb);
  const std::size_t m = kb.alphabet().size();
  auto infer = [&](const WorldSet& a, const WorldSet& b) { return w_infer(ps, a, b); };
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (const WorldSet& a : pool) tally.record("P: reflexivity", infer(a, a), set_label(a));
  for (std::size_t s = 0; s < options.axiom_samples; ++s) {
    const WorldSet& a = pool[pick(rng)];
    const WorldSet& b = pool[pick(rng)];
    const WorldSet& c = pool[pick(rng)];
    const std::string ctx = set_label(a) + " " + set_label(b) + " " + set_label(c);
    const bool ab = infer(a, b);
    const bool ac = infer(a, c);
    if (ab && b.is_subset_of(c)) tally.record("P: right weakening", ac, ctx);
    if (ab && infer(a & b, c)) tally.record("P: cut", ac, ctx);
    if (ab && ac) tally.record("P: cautious monotony", infer(a & b, c), ctx);
    if (ac && infer(b, c)) tally.record("P: or", infer(a | b, c), ctx);
  }
  // Left logical equivalence on syntactically different, equivalent premises.
  for (std::size_t s = 0; s < options.axiom_samples / 8; ++s) {
    const Formula f = random_formula(rng, m, 2);
    const Formula g = random_formula(rng, m, 2);
    const Formula f2 = Formula::conjunction(Formula::negation(Formula::negation(f)), Formula::disjunction(f, f));
    const WorldSet fs = worlds_of(f, kb.alphabet());
    const WorldSet f2s = worlds_of(f2, kb.alphabet());
    const WorldSet gs = worlds_of(g, kb.alphabet());
    tally.record("P: left logical equivalence", w_infer(kb, f, g) == w_infer(kb, f2, g) && fs == f2s && infer(fs, gs) == infer(f2s, gs));
  }
}

/// Library verdicts for W and σ equal the brute-force definitions.
inline void check_against_oracle(const KnowledgeBase& kb, const std::vector<WorldSet>& pool, Tally& tally) {
  const PreferredStructure ps(kb);
  const auto layers = *oracle::partition(kb);
  for (const WorldSet& a : pool) {
    for (const WorldSet& b : pool) {
      const std::string ctx = set_label(a) + " |~ " + set_label(b);
      tally.record("W matches definition", w_infer(ps, a, b) == oracle::w_entails(kb, layers, a, b), ctx);
      tally.record("sigma matches definition", sigma_infer(kb, a, b) == oracle::sigma_entails(kb, a, b), ctx);
    }
  }
}

inline void check_all(const KnowledgeBase& kb, std::mt19937_64& rng, Tally& tally, const PropertyOptions& options) {
  const std::vector<WorldSet> pool = query_pool(rng, kb.alphabet().size(), options.extra_sets);
  check_structure(kb, tally);
  check_containment(kb, pool, tally, options);
  check_cr(kb, tally, options);
  check_system_p(kb, pool, rng, tally, options);
}

}  // namespace condw::testing
