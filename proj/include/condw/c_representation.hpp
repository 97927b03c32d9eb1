#pragma once

// c-representations: the constraint system CR(R), bounded enumeration of its
// solutions, and skeptical c-inference over them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "condw/knowledge_base.hpp"
#include "condw/ranking.hpp"

namespace condw {

/// Default ceiling on the number of candidate impact vectors a single
/// enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Impacts η = (η_1, ..., η_n) together with the per-impact ceiling that was
/// used to enumerate them.
struct ImpactVector {
  std::vector<std::uint64_t> impacts;
  std::uint64_t bound = 0;

  friend bool operator==(const ImpactVector&, const ImpactVector&) = default;
};

struct CRepresentation {
  ImpactVector impacts;
  RankingFunction ranking;
};

/// CR(R) with worlds grouped by falsification signature: the minima over
/// Ω_{A_iB_i} and Ω_{A_i¬B_i} only depend on which conditionals a world
/// falsifies, so each distinct signature is kept once.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(const KnowledgeBase& kb);

  std::size_t size() const { return lower_bounds_.size(); }
  /// Distinct ξ(ω) over all worlds, ascending.
  std::span<const ConditionalSet> signatures() const { return signatures_; }
  std::size_t signature_index(ConditionalSet s) const;
  /// Indices into signatures() of the worlds verifying / falsifying r_i.
  std::span<const std::uint32_t> verifying(std::size_t i) const { return verifying_[i]; }
  std::span<const std::uint32_t> falsifying(std::size_t i) const { return falsifying_[i]; }
  /// 1 where some world falsifies r_i and nothing else, which forces η_i ≥ 1.
  std::span<const std::uint64_t> lower_bounds() const { return lower_bounds_; }

  /// Signature indices of the worlds in `worlds`, deduplicated.
  std::vector<std::uint32_t> signatures_of(const KnowledgeBase& kb, const WorldSet& worlds) const;

  /// η_i > min_{ω⊨A_iB_i} Σ_{j≠i, ω⊨A_j¬B_j} η_j − min_{ω⊨A_i¬B_i} Σ_{j≠i, ω⊨A_j¬B_j} η_j for all i.
  /// `weights` must hold Σ η over each signature (see fill_weights).
  bool satisfied_by(std::span<const std::uint64_t> impacts, std::span<const std::int64_t> weights) const;
  bool satisfied_by(std::span<const std::uint64_t> impacts) const;

  void fill_weights(std::span<const std::uint64_t> impacts, std::span<std::int64_t> weights) const;

 private:
  std::vector<ConditionalSet> signatures_;
  std::vector<std::vector<std::uint32_t>> verifying_;
  std::vector<std::vector<std::uint32_t>> falsifying_;
  std::vector<std::uint64_t> lower_bounds_;
};

/// Throws DimensionMismatch when `impacts` does not have one entry per
/// conditional.
bool satisfies_cr(const KnowledgeBase& kb, std::span<const std::uint64_t> impacts);

/// κ_η(ω) = Σ_{ω⊨A_i¬B_i} η_i. Throws if no world gets rank 0, which cannot
/// happen for a consistent knowledge base.
RankingFunction impact_ranking(const KnowledgeBase& kb, std::span<const std::uint64_t> impacts);

/// max(1, 2^{n-1}): the per-impact ceiling treated as exact for skeptical
/// c-inference over n conditionals.
std::uint64_t exact_bound(std::size_t conditionals);

/// (bound+1)^n, saturating at UINT64_MAX.
std::uint64_t candidate_count(std::size_t conditionals, std::uint64_t bound);

/// Visits every solution of CR(R) in {0..bound}^n in lexicographic order
/// (η_1 most significant) until `visit` returns false. Throws BudgetExceeded
/// when (bound+1)^n > budget and InconsistentKnowledgeBase for an
/// inconsistent knowledge base.
void enumerate_c_representations(const KnowledgeBase& kb, std::uint64_t bound,
                                 const std::function<bool(const CRepresentation&)>& visit,
                                 std::uint64_t budget = kDefaultBudget);

std::vector<CRepresentation> c_representations(const KnowledgeBase& kb, std::uint64_t bound,
                                               std::uint64_t budget = kDefaultBudget);

struct CInference {
  bool entailed = false;
  std::uint64_t bound = 0;
  /// True when `bound` equals exact_bound(n).
  bool exact = false;
  /// Lexicographically first solution whose κ_η does not entail the query.
  std::optional<ImpactVector> counterexample;
};

/// Skeptical c-inference up to `bound` (default: exact_bound(n)). Lowering
/// the bound can only turn false verdicts into true ones.
CInference c_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion,
                   std::optional<std::uint64_t> bound = std::nullopt, std::uint64_t budget = kDefaultBudget);
CInference c_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion,
                   std::optional<std::uint64_t> bound = std::nullopt, std::uint64_t budget = kDefaultBudget);

/// Smallest η with η_i = 1 + Σ of the impacts of all conditionals in lower
/// layers than r_i. Always a solution of CR(R).
ImpactVector construct_layered_solution(const KnowledgeBase& kb, const OrderedPartition& partition);
ImpactVector construct_layered_solution(const KnowledgeBase& kb);

}  // namespace condw
