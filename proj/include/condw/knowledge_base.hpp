#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "condw/conditional_set.hpp"
#include "condw/logic.hpp"

namespace condw {

enum class Evaluation { Verified, Falsified, NotApplicable };

/// Source form of a conditional (B|A) before it is bound to a knowledge base.
struct ConditionalDecl {
  Formula consequent;
  Formula antecedent;
};

/// A conditional (B|A) with its verifying worlds Ω_{AB} and falsifying worlds
/// Ω_{A¬B} cached.
class Conditional {
 public:
  Conditional(std::size_t index, Formula consequent, Formula antecedent, const Alphabet& alphabet);

  /// 1-based position in the knowledge base.
  std::size_t index() const { return index_; }
  const Formula& consequent() const { return consequent_; }
  const Formula& antecedent() const { return antecedent_; }
  const WorldSet& verifying() const { return verifying_; }
  const WorldSet& falsifying() const { return falsifying_; }

  Evaluation evaluate(World w) const {
    if (verifying_.contains(w)) return Evaluation::Verified;
    if (falsifying_.contains(w)) return Evaluation::Falsified;
    return Evaluation::NotApplicable;
  }

 private:
  std::size_t index_;
  Formula consequent_;
  Formula antecedent_;
  WorldSet verifying_;
  WorldSet falsifying_;
};

/// Indexed set of conditionals over one alphabet. Immutable; the set of
/// conditionals falsified by each world is computed once on construction.
class KnowledgeBase {
 public:
  /// Throws Error when a conditional has an unsatisfiable antecedent or there
  /// are more than kMaxConditionals conditionals.
  KnowledgeBase(Alphabet alphabet, std::vector<ConditionalDecl> conditionals);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return conditionals_.size(); }
  bool empty() const { return conditionals_.empty(); }
  const std::vector<Conditional>& conditionals() const { return conditionals_; }
  /// 0-based access.
  const Conditional& operator[](std::size_t i) const { return conditionals_[i]; }
  ConditionalSet all() const { return ConditionalSet::first(conditionals_.size()); }

  /// ξ(ω): the conditionals falsified by `w`.
  ConditionalSet falsified_by(World w) const { return falsified_[w.index()]; }
  std::span<const ConditionalSet> falsification_signatures() const { return falsified_; }

  /// Worlds falsifying at least one conditional of `subset`.
  WorldSet falsifying_any(ConditionalSet subset) const;

  std::string describe(std::size_t i) const;

 private:
  Alphabet alphabet_;
  std::vector<Conditional> conditionals_;
  std::vector<ConditionalSet> falsified_;
};

Evaluation eval_conditional(const Conditional& c, World w);

/// A world verifying `c` while falsifying nothing in `subset`, if any; the
/// least such world in enumeration order.
std::optional<World> tolerates(const KnowledgeBase& kb, ConditionalSet subset, const Conditional& c);

/// The inclusion-maximal ordered tolerance partition (R_0, ..., R_k).
class OrderedPartition {
 public:
  OrderedPartition(std::vector<ConditionalSet> layers, std::size_t conditionals);

  std::span<const ConditionalSet> layers() const { return layers_; }
  std::size_t layer_count() const { return layers_.size(); }
  ConditionalSet layer(std::size_t j) const { return layers_[j]; }
  /// Z(r_i) for the 0-based conditional position i.
  std::size_t layer_of(std::size_t i) const { return layer_of_[i]; }
  std::span<const std::size_t> layer_map() const { return layer_of_; }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<ConditionalSet> layers_;
  std::vector<std::size_t> layer_of_;
};

/// Repeatedly splits off every conditional tolerated by the remainder.
/// Throws InconsistentKnowledgeBase with the stuck remainder.
OrderedPartition z_partition(const KnowledgeBase& kb);

bool is_consistent(const KnowledgeBase& kb);

/// Re-checks both partition properties: each layer is tolerated by the union
/// of itself and later layers, and no conditional of a later layer is.
bool is_valid_partition(const KnowledgeBase& kb, const OrderedPartition& partition);

}  // namespace condw
