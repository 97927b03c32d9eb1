#include "condw/c_representation.hpp"

#include <algorithm>
#include <limits>

#include "condw/error.hpp"
#include "condw/kernels.hpp"

namespace condw {

ConstraintSystem::ConstraintSystem(const KnowledgeBase& kb)
    : verifying_(kb.size()), falsifying_(kb.size()), lower_bounds_(kb.size(), 0) {
  const auto all = kb.falsification_signatures();
  signatures_.assign(all.begin(), all.end());
  std::sort(signatures_.begin(), signatures_.end());
  signatures_.erase(std::unique(signatures_.begin(), signatures_.end()), signatures_.end());

  for (std::size_t i = 0; i < kb.size(); ++i) {
    verifying_[i] = signatures_of(kb, kb[i].verifying());
    falsifying_[i] = signatures_of(kb, kb[i].falsifying());
    for (auto s : falsifying_[i]) {
      if (signatures_[s] == ConditionalSet::single(i)) lower_bounds_[i] = 1;
    }
  }
}

std::size_t ConstraintSystem::signature_index(ConditionalSet s) const {
  auto it = std::lower_bound(signatures_.begin(), signatures_.end(), s);
  if (it == signatures_.end() || *it != s) throw Error("signature does not occur in any world");
  return static_cast<std::size_t>(it - signatures_.begin());
}

std::vector<std::uint32_t> ConstraintSystem::signatures_of(const KnowledgeBase& kb, const WorldSet& worlds) const {
  std::vector<std::uint32_t> out;
  worlds.for_each([&](World w) { out.push_back(static_cast<std::uint32_t>(signature_index(kb.falsified_by(w)))); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ConstraintSystem::fill_weights(std::span<const std::uint64_t> impacts, std::span<std::int64_t> weights) const {
  for (std::size_t s = 0; s < signatures_.size(); ++s) {
    std::int64_t sum = 0;
    signatures_[s].for_each([&](std::size_t i) { sum += static_cast<std::int64_t>(impacts[i]); });
    weights[s] = sum;
  }
}

bool ConstraintSystem::satisfied_by(std::span<const std::uint64_t> impacts, std::span<const std::int64_t> weights) const {
  constexpr auto kNone = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < size(); ++i) {
    const auto eta = static_cast<std::int64_t>(impacts[i]);
    // Verifying worlds never falsify r_i, so their weight already excludes η_i.
    std::int64_t min_verifying = kNone;
    for (auto s : verifying_[i]) min_verifying = std::min(min_verifying, weights[s]);
    std::int64_t min_falsifying = kNone;
    for (auto s : falsifying_[i]) min_falsifying = std::min(min_falsifying, weights[s] - eta);
    if (min_verifying == kNone) return false;
    if (min_falsifying == kNone) continue;
    if (!(eta > min_verifying - min_falsifying)) return false;
  }
  return true;
}

bool ConstraintSystem::satisfied_by(std::span<const std::uint64_t> impacts) const {
  std::vector<std::int64_t> weights(signatures_.size());
  fill_weights(impacts, weights);
  return satisfied_by(impacts, weights);
}

bool satisfies_cr(const KnowledgeBase& kb, std::span<const std::uint64_t> impacts) {
  if (impacts.size() != kb.size()) {
    throw DimensionMismatch("impact vector has " + std::to_string(impacts.size()) + " entries; knowledge base has " +
                            std::to_string(kb.size()) + " conditionals");
  }
  return ConstraintSystem(kb).satisfied_by(impacts);
}

RankingFunction impact_ranking(const KnowledgeBase& kb, std::span<const std::uint64_t> impacts) {
  if (impacts.size() != kb.size()) throw DimensionMismatch("impact vector does not match knowledge base");
  const auto signatures = kb.falsification_signatures();
  std::vector<Rank> ranks(signatures.size());
  for (std::size_t w = 0; w < signatures.size(); ++w) {
    Rank r(0);
    signatures[w].for_each([&](std::size_t i) { r += Rank(impacts[i]); });
    ranks[w] = r;
  }
  return RankingFunction(std::move(ranks));
}

std::uint64_t exact_bound(std::size_t conditionals) {
  if (conditionals <= 1) return 1;
  if (conditionals > 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (conditionals - 1);
}

std::uint64_t candidate_count(std::size_t conditionals, std::uint64_t bound) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (bound == kMax) return conditionals == 0 ? 1 : kMax;
  const std::uint64_t base = bound + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < conditionals; ++i) {
    if (total > kMax / base) return kMax;
    total *= base;
  }
  return total;
}

namespace {

void check_search(const KnowledgeBase& kb, std::uint64_t bound, std::uint64_t budget) {
  z_partition(kb);  // throws InconsistentKnowledgeBase
  const std::uint64_t total = candidate_count(kb.size(), bound);
  if (total > budget) throw BudgetExceeded(total, budget);
}

}  // namespace

void enumerate_c_representations(const KnowledgeBase& kb, std::uint64_t bound,
                                 const std::function<bool(const CRepresentation&)>& visit, std::uint64_t budget) {
  check_search(kb, bound, budget);
  const ConstraintSystem system(kb);
  const std::uint64_t total = candidate_count(kb.size(), bound);
  std::vector<std::int64_t> weights(system.signatures().size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto impacts = kernels::decode_impacts(idx, kb.size(), bound);
    if (!std::equal(impacts.begin(), impacts.end(), system.lower_bounds().begin(),
                    [](std::uint64_t eta, std::uint64_t lb) { return eta >= lb; })) {
      continue;
    }
    system.fill_weights(impacts, weights);
    if (!system.satisfied_by(impacts, weights)) continue;
    RankingFunction ranking = impact_ranking(kb, impacts);
    if (!visit(CRepresentation{ImpactVector{std::move(impacts), bound}, std::move(ranking)})) return;
  }
}

std::vector<CRepresentation> c_representations(const KnowledgeBase& kb, std::uint64_t bound, std::uint64_t budget) {
  std::vector<CRepresentation> out;
  enumerate_c_representations(
      kb, bound,
      [&](const CRepresentation& c) {
        out.push_back(c);
        return true;
      },
      budget);
  return out;
}

CInference c_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion,
                   std::optional<std::uint64_t> bound, std::uint64_t budget) {
  const std::uint64_t exact = exact_bound(kb.size());
  CInference result;
  result.bound = bound.value_or(exact);
  result.exact = result.bound == exact;
  if (result.bound == 0) throw Error("impact bound must be at least 1");
  check_search(kb, result.bound, budget);

  const WorldSet falsifying = premise - conclusion;
  if (falsifying.empty()) {
    result.entailed = true;
    return result;
  }
  const ConstraintSystem system(kb);
  const auto ab = system.signatures_of(kb, premise & conclusion);
  const auto anb = system.signatures_of(kb, falsifying);
  if (auto idx = kernels::first_counterexample(system, ab, anb, result.bound)) {
    result.entailed = false;
    result.counterexample = ImpactVector{kernels::decode_impacts(*idx, kb.size(), result.bound), result.bound};
  } else {
    result.entailed = true;
  }
  return result;
}

CInference c_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion,
                   std::optional<std::uint64_t> bound, std::uint64_t budget) {
  return c_infer(kb, worlds_of(premise, kb.alphabet()), worlds_of(conclusion, kb.alphabet()), bound, budget);
}

ImpactVector construct_layered_solution(const KnowledgeBase& kb, const OrderedPartition& partition) {
  ImpactVector out{std::vector<std::uint64_t>(kb.size(), 0), 0};
  std::uint64_t lower_sum = 0;
  for (const ConditionalSet layer : partition.layers()) {
    const std::uint64_t eta = lower_sum + 1;
    layer.for_each([&](std::size_t i) { out.impacts[i] = eta; });
    lower_sum += eta * layer.size();
  }
  out.bound = out.impacts.empty() ? 0 : *std::max_element(out.impacts.begin(), out.impacts.end());
  return out;
}

ImpactVector construct_layered_solution(const KnowledgeBase& kb) {
  return construct_layered_solution(kb, z_partition(kb));
}

}  // namespace condw
