#include "condw/knowledge_base.hpp"

#include "condw/error.hpp"
#include "condw/kernels.hpp"

namespace condw {

Conditional::Conditional(std::size_t index, Formula consequent, Formula antecedent, const Alphabet& alphabet)
    : index_(index), consequent_(std::move(consequent)), antecedent_(std::move(antecedent)) {
  const WorldSet a = worlds_of(antecedent_, alphabet);
  const WorldSet b = worlds_of(consequent_, alphabet);
  verifying_ = a & b;
  falsifying_ = a - b;
}

KnowledgeBase::KnowledgeBase(Alphabet alphabet, std::vector<ConditionalDecl> conditionals)
    : alphabet_(std::move(alphabet)) {
  if (conditionals.size() > kMaxConditionals) {
    throw Error("knowledge base has " + std::to_string(conditionals.size()) + " conditionals; at most " +
                std::to_string(kMaxConditionals) + " are supported");
  }
  conditionals_.reserve(conditionals.size());
  for (auto& decl : conditionals) {
    const std::size_t index = conditionals_.size() + 1;
    Conditional c(index, std::move(decl.consequent), std::move(decl.antecedent), alphabet_);
    if (c.verifying().empty() && c.falsifying().empty()) {
      throw Error("conditional " + std::to_string(index) + " has an unsatisfiable antecedent");
    }
    conditionals_.push_back(std::move(c));
  }
  falsified_ = kernels::falsification_signatures(conditionals_, alphabet_.size());
}

WorldSet KnowledgeBase::falsifying_any(ConditionalSet subset) const {
  WorldSet out(alphabet_.size());
  subset.for_each([&](std::size_t i) { out |= conditionals_[i].falsifying(); });
  return out;
}

std::string KnowledgeBase::describe(std::size_t i) const {
  const auto& c = conditionals_[i];
  return "(" + to_string(c.consequent(), alphabet_) + " | " + to_string(c.antecedent(), alphabet_) + ")";
}

Evaluation eval_conditional(const Conditional& c, World w) { return c.evaluate(w); }

std::optional<World> tolerates(const KnowledgeBase& kb, ConditionalSet subset, const Conditional& c) {
  return (c.verifying() - kb.falsifying_any(subset)).first();
}

OrderedPartition::OrderedPartition(std::vector<ConditionalSet> layers, std::size_t conditionals)
    : layers_(std::move(layers)), layer_of_(conditionals, 0) {
  ConditionalSet seen;
  for (std::size_t j = 0; j < layers_.size(); ++j) {
    if (layers_[j].empty()) throw Error("partition layer " + std::to_string(j) + " is empty");
    if (!(layers_[j] & seen).empty()) throw Error("partition layers overlap");
    seen |= layers_[j];
    layers_[j].for_each([&](std::size_t i) { layer_of_[i] = j; });
  }
  if (seen != ConditionalSet::first(conditionals)) throw Error("partition does not cover the knowledge base");
}

namespace {

// Conditionals of `remainder` tolerated by `remainder`: those verified by
// some world that falsifies nothing in the remainder.
ConditionalSet tolerated_part(const KnowledgeBase& kb, ConditionalSet remainder) {
  const WorldSet clean = kb.falsifying_any(remainder).complement();
  ConditionalSet out;
  remainder.for_each([&](std::size_t i) {
    if (kb[i].verifying().intersects(clean)) out.insert(i);
  });
  return out;
}

}  // namespace

OrderedPartition z_partition(const KnowledgeBase& kb) {
  std::vector<ConditionalSet> layers;
  ConditionalSet remainder = kb.all();
  while (!remainder.empty()) {
    const ConditionalSet layer = tolerated_part(kb, remainder);
    if (layer.empty()) throw InconsistentKnowledgeBase(remainder);
    layers.push_back(layer);
    remainder = remainder - layer;
  }
  return OrderedPartition(std::move(layers), kb.size());
}

bool is_consistent(const KnowledgeBase& kb) {
  try {
    z_partition(kb);
    return true;
  } catch (const InconsistentKnowledgeBase&) {
    return false;
  }
}

bool is_valid_partition(const KnowledgeBase& kb, const OrderedPartition& partition) {
  const auto layers = partition.layers();
  for (std::size_t j = 0; j < layers.size(); ++j) {
    ConditionalSet rest;
    for (std::size_t l = j; l < layers.size(); ++l) rest |= layers[l];
    bool ok = true;
    rest.for_each([&](std::size_t i) {
      const bool tolerated = tolerates(kb, rest, kb[i]).has_value();
      if (tolerated != layers[j].contains(i)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace condw
