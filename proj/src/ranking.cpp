#include "condw/ranking.hpp"

#include <algorithm>
#include <bit>

#include "condw/error.hpp"
#include "condw/kernels.hpp"

namespace condw {

RankingFunction::RankingFunction(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty() || !std::has_single_bit(ranks_.size())) {
    throw Error("ranking function needs one rank per world (a power of two)");
  }
  if (std::find(ranks_.begin(), ranks_.end(), Rank(0)) == ranks_.end()) {
    throw Error("ranking function is not normalized: no world has rank 0");
  }
  variables_ = static_cast<std::size_t>(std::countr_zero(ranks_.size()));
}

RankingFunction RankingFunction::uniform(std::size_t variables) {
  return RankingFunction(std::vector<Rank>(std::size_t{1} << variables, Rank(0)));
}

Rank RankingFunction::rank(const WorldSet& worlds) const {
  Rank best = Rank::infinity();
  worlds.for_each([&](World w) { best = std::min(best, ranks_[w.index()]); });
  return best;
}

Rank rank_of_formula(const RankingFunction& kappa, const Formula& a, const Alphabet& alphabet) {
  return kappa.rank(worlds_of(a, alphabet));
}

bool accepts(const RankingFunction& kappa, const Conditional& c) {
  return kappa.rank(c.verifying()) < kappa.rank(c.falsifying());
}

bool accepts_all(const RankingFunction& kappa, const KnowledgeBase& kb) {
  return std::all_of(kb.conditionals().begin(), kb.conditionals().end(),
                     [&](const Conditional& c) { return accepts(kappa, c); });
}

bool kappa_entails(const RankingFunction& kappa, const WorldSet& premise, const WorldSet& conclusion) {
  if (premise.empty()) return true;
  return kappa.rank(premise & conclusion) < kappa.rank(premise - conclusion);
}

bool kappa_entails(const RankingFunction& kappa, const Formula& premise, const Formula& conclusion,
                   const Alphabet& alphabet) {
  return kappa_entails(kappa, worlds_of(premise, alphabet), worlds_of(conclusion, alphabet));
}

RankingFunction system_z_ranking(const KnowledgeBase& kb, const OrderedPartition& partition) {
  return RankingFunction(kernels::z_ranks(kb.falsification_signatures(), partition.layer_map()));
}

RankingFunction system_z_ranking(const KnowledgeBase& kb) { return system_z_ranking(kb, z_partition(kb)); }

bool z_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion) {
  return kappa_entails(system_z_ranking(kb), premise, conclusion);
}

bool z_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion) {
  return z_infer(kb, worlds_of(premise, kb.alphabet()), worlds_of(conclusion, kb.alphabet()));
}

}  // namespace condw
