#include "condw/system_w.hpp"

#include <algorithm>

#include "condw/error.hpp"
#include "condw/kernels.hpp"

namespace condw {

namespace {

std::vector<ConditionalSet> distinct_signatures(const KnowledgeBase& kb, const WorldSet& worlds) {
  std::vector<ConditionalSet> out;
  worlds.for_each([&](World w) { out.push_back(kb.falsified_by(w)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_materializable(const KnowledgeBase& kb) {
  if (kb.alphabet().size() > kMaxStructureVariables) {
    throw AlphabetError("preferred structure over " + std::to_string(kb.alphabet().size()) +
                        " variables is too large to materialize (limit " + std::to_string(kMaxStructureVariables) +
                        ")");
  }
}

}  // namespace

PreferredStructure::PreferredStructure(const KnowledgeBase& kb) : PreferredStructure(kb, z_partition(kb)) {}

PreferredStructure::PreferredStructure(const KnowledgeBase& kb, OrderedPartition partition)
    : kb_(&kb), partition_(std::move(partition)) {}

FalsificationProfile PreferredStructure::profile(World w) const {
  FalsificationProfile p;
  p.total = kb_->falsified_by(w);
  for (const ConditionalSet layer : partition_.layers()) p.per_layer.push_back(p.total & layer);
  return p;
}

std::vector<std::uint8_t> PreferredStructure::materialize() const {
  check_materializable(*kb_);
  const std::uint64_t n = kb_->alphabet().world_count();
  std::vector<std::uint8_t> out(n * n, 0);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      out[a * n + b] = less(World(static_cast<std::uint32_t>(a)), World(static_cast<std::uint32_t>(b))) ? 1 : 0;
    }
  }
  return out;
}

FalsificationProfile xi(const PreferredStructure& structure, World w) { return structure.profile(w); }

FalsificationProfile xi(const KnowledgeBase& kb, World w) { return PreferredStructure(kb).profile(w); }

bool preferred_less(const PreferredStructure& structure, World a, World b) { return structure.less(a, b); }

bool w_infer(const PreferredStructure& structure, const WorldSet& premise, const WorldSet& conclusion) {
  const KnowledgeBase& kb = structure.knowledge_base();
  const WorldSet falsifying = premise - conclusion;
  if (falsifying.empty()) return true;
  // Worlds with equal signatures are interchangeable on both sides.
  const auto candidates = distinct_signatures(kb, premise & conclusion);
  const auto targets = distinct_signatures(kb, falsifying);
  return kernels::dominates_all(candidates, targets, structure.partition().layers());
}

bool w_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion) {
  return w_infer(PreferredStructure(kb), premise, conclusion);
}

bool w_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion) {
  return w_infer(kb, worlds_of(premise, kb.alphabet()), worlds_of(conclusion, kb.alphabet()));
}

bool sigma_less(const KnowledgeBase& kb, World a, World b) {
  return kb.falsified_by(a).is_proper_subset_of(kb.falsified_by(b));
}

bool sigma_infer(const KnowledgeBase& kb, const WorldSet& premise, const WorldSet& conclusion) {
  const WorldSet falsifying = premise - conclusion;
  if (falsifying.empty()) return true;
  return kernels::subset_dominates_all(distinct_signatures(kb, premise & conclusion),
                                       distinct_signatures(kb, falsifying));
}

bool sigma_infer(const KnowledgeBase& kb, const Formula& premise, const Formula& conclusion) {
  return sigma_infer(kb, worlds_of(premise, kb.alphabet()), worlds_of(conclusion, kb.alphabet()));
}

std::vector<Edge> covering_edges(const PreferredStructure& structure) {
  const KnowledgeBase& kb = structure.knowledge_base();
  check_materializable(kb);
  const auto sigs = distinct_signatures(kb, WorldSet::all(kb.alphabet().size()));
  const std::size_t s = sigs.size();
  const std::size_t words = (s + 63) / 64;

  // above[a] = {b : sigs[a] <ʷ sigs[b]} as a bit row.
  std::vector<std::uint64_t> above(s * words, 0);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      if (structure.less(sigs[a], sigs[b])) above[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
  std::vector<std::uint64_t> cover(above);
  const auto rows = static_cast<std::int64_t>(s);
#pragma omp parallel for schedule(dynamic, 8) if (rows >= 256)
  for (std::int64_t a = 0; a < rows; ++a) {
    for (std::size_t c = 0; c < s; ++c) {
      if (!((above[a * words + c / 64] >> (c % 64)) & 1U)) continue;
      for (std::size_t k = 0; k < words; ++k) cover[a * words + k] &= ~above[c * words + k];
    }
  }

  std::vector<std::vector<World>> members(s);
  for (std::uint64_t w = 0; w < kb.alphabet().world_count(); ++w) {
    const World world(static_cast<std::uint32_t>(w));
    members[static_cast<std::size_t>(std::lower_bound(sigs.begin(), sigs.end(), kb.falsified_by(world)) - sigs.begin())]
        .push_back(world);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      if (!((cover[a * words + b / 64] >> (b % 64)) & 1U)) continue;
      for (World from : members[a]) {
        for (World to : members[b]) edges.push_back(Edge{from, to});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace condw
