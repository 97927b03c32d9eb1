#pragma once

// The preferred structure on worlds, system W inference and σ-structural
// inference.

#include <cstdint>
#include <span>
#include <vector>

#include "condw/knowledge_base.hpp"

namespace condw {

/// Largest alphabet for which the relation is materialized or reduced.
inline constexpr std::size_t kMaxStructureVariables = 12;

/// ξ^j(ω) for each layer j, and ξ(ω).
struct FalsificationProfile {
  std::vector<ConditionalSet> per_layer;
  ConditionalSet total;

  friend bool operator==(const FalsificationProfile&, const FalsificationProfile&) = default;
};

/// <ʷ_R on falsification signatures: at the highest layer where the two
/// signatures differ, `a`'s part is a proper subset of `b`'s.
inline bool layered_less(ConditionalSet a, ConditionalSet b, std::span<const ConditionalSet> layers) {
  for (std::size_t j = layers.size(); j-- > 0;) {
    const ConditionalSet la = a & layers[j];
    const ConditionalSet lb = b & layers[j];
    if (la != lb) return la.is_proper_subset_of(lb);
  }
  return false;
}

/// <ʷ_R for one knowledge base. Holds a reference to `kb`, which must
/// outlive it.
class PreferredStructure {
 public:
  /// Throws InconsistentKnowledgeBase.
  explicit PreferredStructure(const KnowledgeBase& kb);
  PreferredStructure(const KnowledgeBase& kb, OrderedPartition partition);

  const KnowledgeBase& knowledge_base() const { return *kb_; }
  const OrderedPartition& partition() const { return partition_; }

  FalsificationProfile profile(World w) const;

  bool less(World a, World b) const { return less(kb_->falsified_by(a), kb_->falsified_by(b)); }
  bool less(ConditionalSet a, ConditionalSet b) const { return layered_less(a, b, partition_.layers()); }

  /// Row-major 2^m × 2^m matrix of the relation. Throws AlphabetError above
  /// kMaxStructureVariables.
  std::vector<std::uint8_t> materialize() const;

 private:
  const KnowledgeBase* kb_;
  OrderedPartition partition_;
};

FalsificationProfile xi(const PreferredStructure& structure, World w);
FalsificationProfile xi(const KnowledgeBase& kb, World w);

bool preferred_less(const PreferredStructure& structure, World a, World b);

/// A |~ʷ B: every A¬B-world is <ʷ-dominated by some AB-world.
bool w_infer(const PreferredStructure& structure, const WorldSet& premise, const WorldSet& conclusion);
bool w_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion);
bool w_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion);

/// ξ(a) ⊊ ξ(b). Needs no partition, so inconsistent knowledge bases are fine.
bool sigma_less(const KnowledgeBase& kb, World a, World b);

bool sigma_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion);
bool sigma_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion);

struct Edge {
  World from;
  World to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Covering pairs of <ʷ_R (its transitive reduction), sorted. Throws
/// AlphabetError above kMaxStructureVariables.
std::vector<Edge> covering_edges(const PreferredStructure& structure);

}  // namespace condw
