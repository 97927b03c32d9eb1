#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "condw/compare.hpp"
#include "condw/knowledge_base.hpp"
#include "condw/ranking.hpp"
#include "condw/system_w.hpp"

namespace condw::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kNotInferred = 1, kUsageError = 2, kBudgetExceeded = 3 };

nlohmann::json partition_json(const KnowledgeBase& kb, const OrderedPartition& partition,
                              const RankingFunction& kappa_z);
std::string partition_text(const KnowledgeBase& kb, const OrderedPartition& partition,
                           const RankingFunction& kappa_z);
std::string inconsistency_text(const KnowledgeBase& kb, ConditionalSet residue);

nlohmann::json comparison_json(const KnowledgeBase& kb, const ComparisonReport& report);
std::string comparison_text(const ComparisonReport& report);

std::string structure_text(const KnowledgeBase& kb, const std::vector<Edge>& edges);
std::string structure_dot(const KnowledgeBase& kb, const std::vector<Edge>& edges);

/// Enumeration budget from CONDW_BUDGET, or kDefaultBudget when unset.
/// Throws Error on a malformed value.
std::uint64_t budget_from_environment();

/// Entry point of the `condw` tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condw::cli
