#pragma once

// Data-parallel inner loops. Every kernel has a plain serial counterpart in
// `kernels::serial` that must produce identical results; the library calls
// the OpenMP versions, tests and benchmarks compare the two.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "condw/conditional_set.hpp"
#include "condw/logic.hpp"
#include "condw/rank.hpp"

namespace condw {

class Conditional;
class ConstraintSystem;

namespace kernels {

/// Ω_f via bitwise set algebra over the characteristic vectors of the
/// variables.
WorldSet formula_worlds(const Formula& f, std::size_t variables);

/// ξ(ω) for every world.
std::vector<ConditionalSet> falsification_signatures(std::span<const Conditional> conditionals,
                                                     std::size_t variables);

/// κ^Z from per-world signatures and the layer index of each conditional.
std::vector<Rank> z_ranks(std::span<const ConditionalSet> signatures, std::span<const std::size_t> layer_of);

/// ∀t ∈ targets ∃c ∈ candidates: c <ʷ t.
bool dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets,
                   std::span<const ConditionalSet> layers);

/// ∀t ∈ targets ∃c ∈ candidates: c ⊊ t.
bool subset_dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets);

/// Lexicographic index (η_1 most significant digit, base bound+1) of the
/// first CR(R) solution whose minimum weight over `verifying` signatures is
/// not below the minimum over `falsifying` signatures.
std::optional<std::uint64_t> first_counterexample(const ConstraintSystem& system,
                                                  std::span<const std::uint32_t> verifying,
                                                  std::span<const std::uint32_t> falsifying, std::uint64_t bound);

std::vector<std::uint64_t> decode_impacts(std::uint64_t index, std::size_t conditionals, std::uint64_t bound);

namespace serial {

WorldSet formula_worlds(const Formula& f, std::size_t variables);
std::vector<ConditionalSet> falsification_signatures(std::span<const Conditional> conditionals,
                                                     std::size_t variables);
std::vector<Rank> z_ranks(std::span<const ConditionalSet> signatures, std::span<const std::size_t> layer_of);
bool dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets,
                   std::span<const ConditionalSet> layers);
bool subset_dominates_all(std::span<const ConditionalSet> candidates, std::span<const ConditionalSet> targets);
std::optional<std::uint64_t> first_counterexample(const ConstraintSystem& system,
                                                  std::span<const std::uint32_t> verifying,
                                                  std::span<const std::uint32_t> falsifying, std::uint64_t bound);

}  // namespace serial
}  // namespace kernels
}  // namespace condw
