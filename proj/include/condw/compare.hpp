#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condw/c_representation.hpp"
#include "condw/knowledge_base.hpp"

namespace condw {

enum class Mode { Z, C, Sigma, W };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view name);

struct NamedQuery {
  std::string name;
  Formula premise;
  Formula conclusion;
};

struct ComparisonRow {
  std::string name;
  std::string premise;
  std::string conclusion;
  bool z = false;
  CInference c;
  bool sigma = false;
  bool w = false;
  /// Modes that entail the query while system W does not. Always empty for
  /// a correct implementation.
  std::vector<Mode> violations;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::uint64_t bound = 0;
  bool exact = false;
};

/// Evaluates every query under all four relations. Throws
/// InconsistentKnowledgeBase and BudgetExceeded.
ComparisonReport compare_relations(const KnowledgeBase& kb, std::span<const NamedQuery> queries,
                                   std::optional<std::uint64_t> bound = std::nullopt,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace condw
