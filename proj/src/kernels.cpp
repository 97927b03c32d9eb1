#include "condw/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "condw/c_representation.hpp"
#include "condw/knowledge_base.hpp"

namespace condw::kernels {

namespace {

// Below this many 64-bit words a parallel region costs more than it saves.
constexpr std::int64_t kParallelWords = 1024;
constexpr std::int64_t kParallelItems = 4096;
constexpr std::uint64_t kSearchChunk = 4096;

constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

WorldSet variable_worlds(std::size_t var, std::size_t variables) {
  WorldSet s(variables);
  auto words = s.words();
  const auto n = static_cast<std::int64_t>(words.size());
  if (var < 6) {
    std::fill(words.begin(), words.end(), kLowPatterns[var]);
    s &= WorldSet::all(variables);
    return s;
  }
  const std::size_t shift = var - 6;
#pragma omp parallel for if (n >= kParallelWords)
  for (std::int64_t k = 0; k < n; ++k) {
    words[k] = ((static_cast<std::uint64_t>(k) >> shift) & 1U) ? ~std::uint64_t{0} : 0;
  }
  return s;
}

template <typename Op>
void combine(WorldSet& dst, const WorldSet& src, Op op) {
  auto d = dst.words();
  auto s = src.words();
  const auto n = static_cast<std::int64_t>(d.size());
#pragma omp parallel for if (n >= kParallelWords)
  for (std::int64_t k = 0; k < n; ++k) d[k] = op(d[k], s[k]);
}

std::int64_t min_weight(std::span<const std::uint32_t> indices, std::span<const std::int64_t> weights) {
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (auto s : indices) m = std::min(m, weights[s]);
  return m;
}

bool meets_lower_bounds(std::span<const std::uint64_t> impacts, std::span<const std::uint64_t> lower) {
  for (std::size_t i = 0; i < impacts.size(); ++i) {
    if (impacts[i] < lower[i]) return false;
  }
  return true;
}

void increment(std::span<std::uint64_t> impacts, std::uint64_t bound) {
  for (std::size_t i = impacts.size(); i-- > 0;) {
    if (impacts[i] < bound) {
      ++impacts[i];
      return;
    }
    impacts[i] = 0;
  }
}

}  // namespace

std::vector<std::uint64_t> decode_impacts(std::uint64_t index, std::size_t conditionals, std::uint64_t bound) {
  std::vector<std::uint64_t> impacts(conditionals, 0);
  const std::uint64_t base = bound + 1;
  for (std::size_t i = conditionals; i-- > 0;) {
    impacts[i] = index % base;
    index /= base;
  }
  return impacts;
}

WorldSet formula_worlds(const Formula& f, std::size_t variables) {
  switch (f.kind()) {
    case Formula::Kind::Top: return WorldSet::all(variables);
    case Formula::Kind::Bot: return WorldSet::none(variables);
    case Formula::Kind::Var: return variable_worlds(f.variable(), variables);
    case Formula::Kind::Not: {
      WorldSet s = formula_worlds(f.children().front(), variables);
      combine(s, WorldSet::all(variables), [](std::uint64_t a, std::uint64_t all) { return ~a & all; });
      return s;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const bool conj = f.kind() == Formula::Kind::And;
      auto children = f.children();
      WorldSet acc = formula_worlds(children.front(), variables);
      for (std::size_t i = 1; i < children.size(); ++i) {
        const WorldSet next = formula_worlds(children[i], variables);
        if (conj) {
          combine(acc, next, [](std::uint64_t a, std::uint64_t b) { return a & b; });
        } else {
          combine(acc, next, [](std::uint64_t a, std::uint64_t b) { return a | b; });
        }
      }
      return acc;
    }
  }
  return WorldSet::none(variables);
}

std::vector<ConditionalSet> falsification_signatures(std::span<const Conditional> conditionals,
                                                     std::size_t variables) {
  const std::uint64_t worlds = std::uint64_t{1} << variables;
  std::vector<ConditionalSet> out(worlds);
  const auto words = static_cast<std::int64_t>(std::max<std::uint64_t>(1, worlds / 64));
#pragma omp parallel for if (words >= kParallelWords)
  for (std::int64_t k = 0; k < words; ++k) {
    for (std::size_t i = 0; i < conditionals.size(); ++i) {
      for (std::uint64_t rest = conditionals[i].falsifying().words()[k]; rest != 0; rest &= rest - 1) {
        out[static_cast<std::size_t>(k) * 64 + std::countr_zero(rest)].insert(i);
      }
    }
  }
  return out;
}

std::vector<Rank> z_ranks(std::span<const ConditionalSet> signatures, std::span<const std::size_t> layer_of) {
  std::vector<Rank> out(signatures.size());
  const auto n = static_cast<std::int64_t>(signatures.size());
#pragma omp parallel for if (n >= kParallelItems)
  for (std::int64_t w = 0; w < n; ++w) {
    const ConditionalSet s = signatures[w];
    if (s.empty()) continue;
    std::size_t top = 0;
    s.for_each([&](std::size_t i) { top = std::max(top, layer_of[i]); });
    out[w] = Rank(top + 1);
  }
  return out;
}

bool dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets,
                   std::span<const ConditionalSet> layers) {
  const auto n = static_cast<std::int64_t>(targets.size());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16) if (n * static_cast<std::int64_t>(candidates.size()) >= kParallelItems)
  for (std::int64_t t = 0; t < n; ++t) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](ConditionalSet c) {
      for (std::size_t j = layers.size(); j-- > 0;) {
        const ConditionalSet a = c & layers[j];
        const ConditionalSet b = targets[t] & layers[j];
        if (a != b) return a.is_proper_subset_of(b);
      }
      return false;
    });
    if (!dominated) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

bool subset_dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets) {
  const auto n = static_cast<std::int64_t>(targets.size());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16) if (n * static_cast<std::int64_t>(candidates.size()) >= kParallelItems)
  for (std::int64_t t = 0; t < n; ++t) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](ConditionalSet c) { return c.is_proper_subset_of(targets[t]); });
    if (!dominated) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

std::optional<std::uint64_t> first_counterexample(const ConstraintSystem& system,
                                                  std::span<const std::uint32_t> verifying,
                                                  std::span<const std::uint32_t> falsifying, std::uint64_t bound) {
  const std::size_t n = system.size();
  const std::uint64_t total = candidate_count(n, bound);
  const std::uint64_t chunks = (total + kSearchChunk - 1) / kSearchChunk;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

#pragma omp parallel if (chunks > 1)
  {
    std::vector<std::int64_t> weights(system.signatures().size());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const std::uint64_t start = static_cast<std::uint64_t>(c) * kSearchChunk;
      if (start >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(total, start + kSearchChunk);
      std::vector<std::uint64_t> impacts = decode_impacts(start, n, bound);
      for (std::uint64_t idx = start; idx < end; ++idx, increment(impacts, bound)) {
        if (!meets_lower_bounds(impacts, system.lower_bounds())) continue;
        system.fill_weights(impacts, weights);
        if (min_weight(verifying, weights) < min_weight(falsifying, weights)) continue;
        if (!system.satisfied_by(impacts, weights)) continue;
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        break;
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return found;
}

// --- serial references -------------------------------------------------------

namespace serial {

WorldSet formula_worlds(const Formula& f, std::size_t variables) {
  WorldSet out(variables);
  const std::uint64_t worlds = std::uint64_t{1} << variables;
  for (std::uint64_t w = 0; w < worlds; ++w) {
    if (f.eval(World(static_cast<std::uint32_t>(w)))) out.insert(World(static_cast<std::uint32_t>(w)));
  }
  return out;
}

std::vector<ConditionalSet> falsification_signatures(std::span<const Conditional> conditionals,
                                                     std::size_t variables) {
  const std::uint64_t worlds = std::uint64_t{1} << variables;
  std::vector<ConditionalSet> out(worlds);
  for (std::uint64_t w = 0; w < worlds; ++w) {
    for (std::size_t i = 0; i < conditionals.size(); ++i) {
      if (conditionals[i].falsifying().contains(World(static_cast<std::uint32_t>(w)))) out[w].insert(i);
    }
  }
  return out;
}

std::vector<Rank> z_ranks(std::span<const ConditionalSet> signatures, std::span<const std::size_t> layer_of) {
  std::vector<Rank> out;
  out.reserve(signatures.size());
  for (const ConditionalSet s : signatures) {
    Rank r(0);
    for (std::size_t i = 0; i < layer_of.size(); ++i) {
      if (s.contains(i)) r = std::max(r, Rank(layer_of[i] + 1));
    }
    out.push_back(r);
  }
  return out;
}

bool dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets,
                   std::span<const ConditionalSet> layers) {
  for (const ConditionalSet t : targets) {
    bool dominated = false;
    for (const ConditionalSet c : candidates) {
      // Search for the index m of the definition directly.
      for (std::size_t m = 0; m < layers.size() && !dominated; ++m) {
        bool above_equal = true;
        for (std::size_t i = m + 1; i < layers.size(); ++i) above_equal = above_equal && (c & layers[i]) == (t & layers[i]);
        dominated = above_equal && (c & layers[m]).is_proper_subset_of(t & layers[m]);
      }
      if (dominated) break;
    }
    if (!dominated) return false;
  }
  return true;
}

bool subset_dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets) {
  for (const ConditionalSet t : targets) {
    bool dominated = false;
    for (const ConditionalSet c : candidates) dominated = dominated || c.is_proper_subset_of(t);
    if (!dominated) return false;
  }
  return true;
}

std::optional<std::uint64_t> first_counterexample(const ConstraintSystem& system,
                                                  std::span<const std::uint32_t> verifying,
                                                  std::span<const std::uint32_t> falsifying, std::uint64_t bound) {
  const std::uint64_t total = candidate_count(system.size(), bound);
  std::vector<std::int64_t> weights(system.signatures().size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto impacts = decode_impacts(idx, system.size(), bound);
    if (!system.satisfied_by(impacts)) continue;
    system.fill_weights(impacts, weights);
    if (min_weight(verifying, weights) >= min_weight(falsifying, weights)) return idx;
  }
  return std::nullopt;
}

}  // namespace serial
}  // namespace condw::kernels
