#pragma once

#include <span>
#include <vector>

#include "condw/knowledge_base.hpp"
#include "condw/logic.hpp"
#include "condw/rank.hpp"

namespace condw {

/// Ordinal conditional function κ stored densely over all 2^m worlds.
class RankingFunction {
 public:
  /// Throws Error unless `ranks` has a power-of-two length and some world
  /// has rank 0.
  explicit RankingFunction(std::vector<Rank> ranks);

  /// κ ≡ 0.
  static RankingFunction uniform(std::size_t variables);

  std::size_t variables() const { return variables_; }
  Rank rank(World w) const { return ranks_[w.index()]; }
  /// κ(Ω_A) = min over the set; ∞ for the empty set.
  Rank rank(const WorldSet& worlds) const;
  std::span<const Rank> ranks() const { return ranks_; }

  friend bool operator==(const RankingFunction&, const RankingFunction&) = default;

 private:
  std::size_t variables_ = 0;
  std::vector<Rank> ranks_;
};

Rank rank_of_formula(const RankingFunction& kappa, const Formula& a, const Alphabet& alphabet);

/// κ ⊨ (B|A) iff κ(AB) < κ(A¬B).
bool accepts(const RankingFunction& kappa, const Conditional& c);
bool accepts_all(const RankingFunction& kappa, const KnowledgeBase& kb);

/// A |~κ B over the world sets Ω_A and Ω_B: Ω_A empty, or κ(AB) < κ(A¬B).
bool kappa_entails(const RankingFunction& kappa, const WorldSet& premise, const WorldSet& conclusion);
bool kappa_entails(const RankingFunction& kappa, const Formula& premise, const Formula& conclusion,
                   const Alphabet& alphabet);

/// κ^Z: 0 for worlds falsifying nothing, else 1 + the highest layer index
/// among the falsified conditionals.
RankingFunction system_z_ranking(const KnowledgeBase& kb, const OrderedPartition& partition);
RankingFunction system_z_ranking(const KnowledgeBase& kb);

bool z_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion);
bool z_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion);

}  // namespace condw
