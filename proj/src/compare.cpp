#include "condw/compare.hpp"

#include "condw/error.hpp"
#include "condw/ranking.hpp"
#include "condw/system_w.hpp"

namespace condw {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Z: return "z";
    case Mode::C: return "c";
    case Mode::Sigma: return "sigma";
    case Mode::W: return "w";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::Z, Mode::C, Mode::Sigma, Mode::W}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

ComparisonReport compare_relations(const KnowledgeBase& kb, std::span<const NamedQuery> queries,
                                   std::optional<std::uint64_t> bound, std::uint64_t budget) {
  const OrderedPartition partition = z_partition(kb);
  const RankingFunction kappa_z = system_z_ranking(kb, partition);
  const PreferredStructure structure(kb, partition);

  ComparisonReport report;
  report.bound = bound.value_or(exact_bound(kb.size()));
  report.exact = report.bound == exact_bound(kb.size());
  if (report.bound == 0) throw Error("impact bound must be at least 1");
  if (const auto total = candidate_count(kb.size(), report.bound); total > budget) throw BudgetExceeded(total, budget);

  const Alphabet& alphabet = kb.alphabet();
  for (const auto& q : queries) {
    const WorldSet a = worlds_of(q.premise, alphabet);
    const WorldSet b = worlds_of(q.conclusion, alphabet);
    ComparisonRow row;
    row.name = q.name;
    row.premise = to_string(q.premise, alphabet);
    row.conclusion = to_string(q.conclusion, alphabet);
    row.z = kappa_entails(kappa_z, a, b);
    row.c = c_infer(kb, a, b, report.bound, budget);
    row.sigma = sigma_infer(kb, a, b);
    row.w = w_infer(structure, a, b);
    if (!row.w) {
      if (row.z) row.violations.push_back(Mode::Z);
      if (row.c.entailed && row.c.exact) row.violations.push_back(Mode::C);
      if (row.sigma) row.violations.push_back(Mode::Sigma);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace condw
