#include "condw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"

#include "condw/c_representation.hpp"
#include "condw/error.hpp"
#include "condw/kb_file.hpp"

namespace condw::cli {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string impacts_text(const ImpactVector& eta) {
  std::vector<std::string> parts;
  for (auto v : eta.impacts) parts.push_back(std::to_string(v));
  return "(" + join(parts, ", ") + ")";
}

std::string layer_text(const KnowledgeBase& kb, ConditionalSet layer) {
  std::vector<std::string> parts;
  layer.for_each([&](std::size_t i) { parts.push_back(kb.describe(i)); });
  return "{" + join(parts, ", ") + "}";
}

nlohmann::json rank_json(Rank r) { return r.is_infinite() ? nlohmann::json("inf") : nlohmann::json(r.value()); }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

nlohmann::json partition_json(const KnowledgeBase& kb, const OrderedPartition& partition,
                              const RankingFunction& kappa_z) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["signature"] = kb.alphabet().symbols();
  nlohmann::json layers = nlohmann::json::array();
  for (const ConditionalSet layer : partition.layers()) {
    nlohmann::json members = nlohmann::json::array();
    layer.for_each([&](std::size_t i) { members.push_back({{"index", i + 1}, {"conditional", kb.describe(i)}}); });
    layers.push_back(std::move(members));
  }
  j["layers"] = std::move(layers);
  nlohmann::json ranks = nlohmann::json::array();
  for (std::uint64_t w = 0; w < kb.alphabet().world_count(); ++w) {
    const World world(static_cast<std::uint32_t>(w));
    ranks.push_back({{"world", world_label(kb.alphabet(), world)}, {"rank", rank_json(kappa_z.rank(world))}});
  }
  j["kappa_z"] = std::move(ranks);
  return j;
}

std::string partition_text(const KnowledgeBase& kb, const OrderedPartition& partition,
                           const RankingFunction& kappa_z) {
  std::ostringstream out;
  if (partition.layer_count() == 0) out << "R_0 = {}\n";
  for (std::size_t j = 0; j < partition.layer_count(); ++j) {
    out << "R_" << j << " = " << layer_text(kb, partition.layer(j)) << "\n";
  }
  out << "\nworld";
  std::size_t width = 5;
  for (std::uint64_t w = 0; w < kb.alphabet().world_count(); ++w) {
    width = std::max(width, world_label(kb.alphabet(), World(static_cast<std::uint32_t>(w))).size());
  }
  out << std::string(width - 5 + 2, ' ') << "kappa_Z\n";
  for (std::uint64_t w = 0; w < kb.alphabet().world_count(); ++w) {
    const World world(static_cast<std::uint32_t>(w));
    out << pad(world_label(kb.alphabet(), world), width + 2) << kappa_z.rank(world) << "\n";
  }
  return out.str();
}

std::string inconsistency_text(const KnowledgeBase& kb, ConditionalSet residue) {
  std::ostringstream out;
  out << "error: knowledge base is inconsistent; no conditional of the residue is tolerated by it:\n";
  residue.for_each([&](std::size_t i) { out << "  r" << i + 1 << " = " << kb.describe(i) << "\n"; });
  return out.str();
}

nlohmann::json comparison_json(const KnowledgeBase& kb, const ComparisonReport& report) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["bound"] = report.bound;
  j["exact_bound"] = report.exact;
  j["conditionals"] = kb.size();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row;
    row["name"] = r.name;
    row["premise"] = r.premise;
    row["conclusion"] = r.conclusion;
    row["z"] = r.z;
    row["c"] = r.c.entailed;
    row["c_counterexample"] = r.c.counterexample ? nlohmann::json(r.c.counterexample->impacts) : nlohmann::json();
    row["sigma"] = r.sigma;
    row["w"] = r.w;
    nlohmann::json violations = nlohmann::json::array();
    for (Mode m : r.violations) violations.push_back(std::string(mode_name(m)));
    row["violations"] = std::move(violations);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string comparison_text(const ComparisonReport& report) {
  const std::vector<std::string> header = {"query", "premise", "conclusion", "Z", "c", "sigma", "W", "flags"};
  std::vector<std::vector<std::string>> table;
  auto verdict = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const auto& r : report.rows) {
    std::vector<std::string> flags;
    for (Mode m : r.violations) flags.push_back(std::string(mode_name(m)) + "-not-in-W");
    table.push_back({r.name, r.premise, r.conclusion, verdict(r.z), verdict(r.c.entailed), verdict(r.sigma),
                     verdict(r.w), flags.empty() ? "-" : join(flags, ",")});
  }
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& row : table) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += (c + 1 < row.size() ? pad(row[c], widths[c] + 2) : row[c]);
    out << line << "\n";
  };
  emit(header);
  for (const auto& row : table) emit(row);
  out << "\nc-inference bound " << report.bound << (report.exact ? " (exact)" : " (approximate; lower than 2^(n-1))")
      << "\n";
  return out.str();
}

std::string structure_text(const KnowledgeBase& kb, const std::vector<Edge>& edges) {
  std::ostringstream out;
  for (const Edge& e : edges) {
    out << world_label(kb.alphabet(), e.from) << " -> " << world_label(kb.alphabet(), e.to) << "\n";
  }
  return out.str();
}

std::string structure_dot(const KnowledgeBase& kb, const std::vector<Edge>& edges) {
  std::ostringstream out;
  out << "digraph preferred_structure {\n  rankdir=BT;\n";
  for (std::uint64_t w = 0; w < kb.alphabet().world_count(); ++w) {
    out << "  w" << w << " [label=\"" << world_label(kb.alphabet(), World(static_cast<std::uint32_t>(w))) << "\"];\n";
  }
  for (const Edge& e : edges) out << "  w" << e.from.index() << " -> w" << e.to.index() << ";\n";
  out << "}\n";
  return out.str();
}

std::uint64_t budget_from_environment() {
  const char* raw = std::getenv("CONDW_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw Error("CONDW_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

namespace {

struct Options {
  std::string file;
  std::string queries;
  std::string mode;
  std::string premise;
  std::string conclusion;
  std::optional<std::uint64_t> bound;
  bool json = false;
  bool dot = false;
};

int cmd_partition(const Options& opt, std::ostream& out, std::ostream& err) {
  const KbDocument doc = parse_kb_document(read_text_file(opt.file));
  const KnowledgeBase kb = doc.knowledge_base();
  try {
    const OrderedPartition partition = z_partition(kb);
    const RankingFunction kappa_z = system_z_ranking(kb, partition);
    out << (opt.json ? dump(partition_json(kb, partition, kappa_z)) : partition_text(kb, partition, kappa_z));
    return kOk;
  } catch (const InconsistentKnowledgeBase& e) {
    err << inconsistency_text(kb, e.residue());
    return kUsageError;
  }
}

int cmd_infer(const Options& opt, std::ostream& out, std::ostream& err) {
  const KbDocument doc = parse_kb_document(read_text_file(opt.file));
  const KnowledgeBase kb = doc.knowledge_base();
  const Mode mode = *parse_mode(opt.mode);
  auto formula = [&](const std::string& text, const char* what) {
    try {
      return parse_formula(text, kb.alphabet());
    } catch (const ParseError& e) {
      throw Error(std::string(what) + ": " + e.what());
    }
  };
  const Formula premise = formula(opt.premise, "premise");
  const Formula conclusion = formula(opt.conclusion, "conclusion");

  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["mode"] = std::string(mode_name(mode));
  j["premise"] = to_string(premise, kb.alphabet());
  j["conclusion"] = to_string(conclusion, kb.alphabet());

  bool entailed = false;
  std::string detail;
  try {
    switch (mode) {
      case Mode::Z: entailed = z_infer(kb, premise, conclusion); break;
      case Mode::W: entailed = w_infer(kb, premise, conclusion); break;
      case Mode::Sigma:
        if (!is_consistent(kb)) err << "warning: knowledge base is inconsistent\n";
        entailed = sigma_infer(kb, premise, conclusion);
        break;
      case Mode::C: {
        const CInference c = c_infer(kb, premise, conclusion, opt.bound, budget_from_environment());
        entailed = c.entailed;
        j["bound"] = c.bound;
        j["exact_bound"] = c.exact;
        j["counterexample"] = c.counterexample ? nlohmann::json(c.counterexample->impacts) : nlohmann::json();
        detail = "bound: " + std::to_string(c.bound) +
                 (c.exact ? " (exact)" : " (approximate; exact bound is " + std::to_string(exact_bound(kb.size())) + ")") +
                 "\n";
        if (c.counterexample) detail += "counterexample: eta = " + impacts_text(*c.counterexample) + "\n";
        break;
      }
    }
  } catch (const InconsistentKnowledgeBase& e) {
    err << inconsistency_text(kb, e.residue());
    return kUsageError;
  }
  j["entailed"] = entailed;
  if (opt.json) {
    out << dump(j);
  } else {
    out << (entailed ? "true" : "false") << "\n" << detail;
  }
  return entailed ? kOk : kNotInferred;
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream& err) {
  const KbDocument doc = parse_kb_document(read_text_file(opt.file));
  const KnowledgeBase kb = doc.knowledge_base();
  const std::vector<NamedQuery> queries =
      opt.queries.empty() ? doc.queries : parse_queries(read_text_file(opt.queries), kb.alphabet());
  try {
    const ComparisonReport report = compare_relations(kb, queries, opt.bound, budget_from_environment());
    out << (opt.json ? dump(comparison_json(kb, report)) : comparison_text(report));
    return kOk;
  } catch (const InconsistentKnowledgeBase& e) {
    err << inconsistency_text(kb, e.residue());
    return kUsageError;
  }
}

int cmd_structure(const Options& opt, std::ostream& out, std::ostream& err) {
  const KbDocument doc = parse_kb_document(read_text_file(opt.file));
  const KnowledgeBase kb = doc.knowledge_base();
  try {
    const PreferredStructure structure(kb);
    const auto edges = covering_edges(structure);
    out << (opt.dot ? structure_dot(kb, edges) : structure_text(kb, edges));
    return kOk;
  } catch (const InconsistentKnowledgeBase& e) {
    err << inconsistency_text(kb, e.residue());
    return kUsageError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonmonotonic inference over conditional knowledge bases", "condw"};
  app.require_subcommand(1);
  Options opt;

  auto* partition = app.add_subcommand("partition", "Tolerance partition and system Z ranking");
  partition->add_option("FILE", opt.file, "knowledge base file")->required();
  partition->add_flag("--json", opt.json, "machine-readable output");

  auto* infer = app.add_subcommand("infer", "Decide whether the premise entails the conclusion");
  infer->add_option("FILE", opt.file, "knowledge base file")->required();
  infer->add_option("--mode", opt.mode, "inference relation")
      ->required()
      ->check(CLI::IsMember({"z", "w", "sigma", "c"}));
  infer->add_option("--premise", opt.premise, "premise formula A")->required();
  infer->add_option("--conclusion", opt.conclusion, "conclusion formula B")->required();
  infer->add_option("--bound", opt.bound, "per-impact bound for mode c (default 2^(n-1))")
      ->check(CLI::PositiveNumber);
  infer->add_flag("--json", opt.json, "machine-readable output");

  auto* compare = app.add_subcommand("compare", "Tabulate all four relations over a set of queries");
  compare->add_option("FILE", opt.file, "knowledge base file")->required();
  compare->add_option("QUERIES", opt.queries, "queries file (default: queries in FILE)");
  compare->add_option("--bound", opt.bound, "per-impact bound for c-inference")->check(CLI::PositiveNumber);
  compare->add_flag("--json", opt.json, "machine-readable output");

  auto* structure = app.add_subcommand("structure", "Transitive reduction of the preferred structure");
  structure->add_option("FILE", opt.file, "knowledge base file")->required();
  structure->add_flag("--dot", opt.dot, "Graphviz output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*partition) return cmd_partition(opt, out, err);
    if (*infer) return cmd_infer(opt, out, err);
    if (*compare) return cmd_compare(opt, out, err);
    return cmd_structure(opt, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("condw");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace condw::cli
