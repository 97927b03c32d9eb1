#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "condw/error.hpp"
#include "condw/knowledge_base.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_kb.hpp"

using namespace condw;
using namespace condw::testing;

namespace {

// Column order used in the printed tables: pbf, pbf̄, pb̄f, pb̄f̄, p̄bf, p̄bf̄, p̄b̄f, p̄b̄f̄.
const char* const kBirdColumns[] = {"p b f",  "p b !f",  "p !b f",  "p !b !f",
                                    "!p b f", "!p b !f", "!p !b f", "!p !b !f"};

Evaluation code(char c) {
  switch (c) {
    case 'v': return Evaluation::Verified;
    case 'f': return Evaluation::Falsified;
    default: return Evaluation::NotApplicable;
  }
}

ConditionalSet indices(std::initializer_list<std::size_t> one_based) {
  ConditionalSet s;
  for (auto i : one_based) s.insert(i - 1);
  return s;
}

}  // namespace

TEST(Conditional, BirdsVerificationTable) {
  const KnowledgeBase kb = birds();
  const char* const rows[] = {"vf--vf--", "fvfv----", "fv------", "vvff----"};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t col = 0; col < 8; ++col) {
      EXPECT_EQ(eval_conditional(kb[i], world(kb, kBirdColumns[col])), code(rows[i][col]))
          << "r" << i + 1 << " at " << kBirdColumns[col];
    }
  }
}

TEST(Conditional, RStarVerificationTable) {
  const KnowledgeBase kb = rstar();
  const char* const columns[] = {"a b c", "a b !c", "a !b c", "a !b !c", "!a b c", "!a b !c", "!a !b c", "!a !b !c"};
  const char* const rows[] = {"vvff----", "vfff----"};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t col = 0; col < 8; ++col) {
      EXPECT_EQ(eval_conditional(kb[i], world(kb, columns[col])), code(rows[i][col]));
    }
  }
}

TEST(Conditional, VerifyingAndFalsifyingSplitAntecedent) {
  const KnowledgeBase kb = birds();
  for (const Conditional& c : kb.conditionals()) {
    EXPECT_FALSE(c.verifying().intersects(c.falsifying()));
    EXPECT_EQ(c.verifying() | c.falsifying(), worlds_of(c.antecedent(), kb.alphabet()));
  }
  EXPECT_EQ(kb[0].index(), 1U);
  EXPECT_EQ(kb[3].index(), 4U);
  EXPECT_EQ(kb.describe(2), "(!f | b & p)");
}

TEST(KnowledgeBase, RejectsUnsatisfiableAntecedent) {
  EXPECT_THROW(make_kb({"p"}, {{"p", "p & !p"}}), Error);
}

TEST(KnowledgeBase, FalsificationSignatures) {
  const KnowledgeBase kb = birds();
  EXPECT_EQ(kb.falsified_by(world(kb, "p b f")), indices({2, 3}));
  EXPECT_EQ(kb.falsified_by(world(kb, "!p b f")), ConditionalSet{});
  EXPECT_EQ(kb.falsified_by(world(kb, "p !b f")), indices({2, 4}));
  EXPECT_EQ(kb.falsifying_any(indices({1})), worlds(kb, "b & !f"));
}

TEST(Tolerates, Examples) {
  const KnowledgeBase kb = birds();
  const auto w = tolerates(kb, kb.all(), kb[0]);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, world(kb, "!p b f"));

  const auto any = tolerates(kb, ConditionalSet{}, kb[0]);
  ASSERT_TRUE(any);
  EXPECT_TRUE(worlds(kb, "b & f").contains(*any));

  // Against all of R_birds the only p f̄ candidates falsify r1 or r4.
  EXPECT_FALSE(tolerates(kb, kb.all(), kb[1]));
  const auto upper = tolerates(kb, indices({2, 3, 4}), kb[1]);
  ASSERT_TRUE(upper);
  EXPECT_EQ(*upper, world(kb, "p b !f"));
}

TEST(ZPartition, Birds) {
  const KnowledgeBase kb = birds();
  const OrderedPartition op = z_partition(kb);
  ASSERT_EQ(op.layer_count(), 2U);
  EXPECT_EQ(op.layer(0), indices({1}));
  EXPECT_EQ(op.layer(1), indices({2, 3, 4}));
  EXPECT_EQ(op.layer_of(0), 0U);
  EXPECT_EQ(op.layer_of(3), 1U);
  EXPECT_TRUE(is_valid_partition(kb, op));
}

TEST(ZPartition, RStarSingleLayer) {
  const OrderedPartition op = z_partition(rstar());
  ASSERT_EQ(op.layer_count(), 1U);
  EXPECT_EQ(op.layer(0), indices({1, 2}));
}

TEST(ZPartition, Inconsistent) {
  const KnowledgeBase kb = make_kb({"b", "f"}, {{"f", "b"}, {"!f", "b"}});
  EXPECT_FALSE(is_consistent(kb));
  try {
    z_partition(kb);
    FAIL() << "no error";
  } catch (const InconsistentKnowledgeBase& e) {
    EXPECT_EQ(e.residue(), indices({1, 2}));
  }
}

TEST(ZPartition, EmptyKnowledgeBase) {
  const KnowledgeBase kb = make_kb({"p"}, {});
  EXPECT_TRUE(is_consistent(kb));
  EXPECT_EQ(z_partition(kb).layer_count(), 0U);
}

TEST(ZPartition, Consistency) {
  EXPECT_TRUE(is_consistent(birds()));
  EXPECT_TRUE(is_consistent(birds_star()));
}

TEST(ZPartition, DuplicatesShareLayer) {
  const KnowledgeBase kb = make_kb({"b", "f"}, {{"f", "b"}, {"f", "b"}});
  const OrderedPartition op = z_partition(kb);
  ASSERT_EQ(op.layer_count(), 1U);
  EXPECT_EQ(op.layer(0), indices({1, 2}));
}

TEST(OrderedPartition, ValidationRejectsBadLayers) {
  const KnowledgeBase kb = birds();
  EXPECT_THROW(OrderedPartition({indices({1}), indices({2, 3})}, 4), Error);
  EXPECT_THROW(OrderedPartition({indices({1, 2}), indices({2, 3, 4})}, 4), Error);
  EXPECT_THROW(OrderedPartition({indices({1}), ConditionalSet{}, indices({2, 3, 4})}, 4), Error);
  // A partition whose first layer is not maximal.
  const KnowledgeBase two = make_kb({"a", "b"}, {{"a", "true"}, {"b", "true"}});
  EXPECT_FALSE(is_valid_partition(two, OrderedPartition({indices({1}), indices({2})}, 2)));
  // A layer not tolerated by the rest.
  EXPECT_FALSE(is_valid_partition(kb, OrderedPartition({indices({1, 2, 3, 4})}, 4)));
}

TEST(ZPartitionProperty, MatchesOracleAndRevalidates) {
  std::mt19937_64 rng(11);
  int consistent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> m(1, 5);
    std::uniform_int_distribution<std::size_t> n(0, 6);
    const KnowledgeBase kb = random_kb(rng, m(rng), n(rng));
    const auto expected = oracle::partition(kb);
    ASSERT_EQ(is_consistent(kb), expected.has_value());
    if (!expected) {
      EXPECT_THROW(z_partition(kb), InconsistentKnowledgeBase);
      continue;
    }
    ++consistent;
    const OrderedPartition op = z_partition(kb);
    EXPECT_TRUE(is_valid_partition(kb, op));
    ASSERT_EQ(op.layer_count(), expected->size());
    for (std::size_t j = 0; j < op.layer_count(); ++j) {
      for (std::size_t i = 0; i < kb.size(); ++i) {
        EXPECT_EQ(op.layer(j).contains(i), expected->at(j).count(i) == 1);
      }
    }
  }
  EXPECT_GT(consistent, 50);
}

TEST(ZPartitionProperty, IndependentOfOrder) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const KnowledgeBase kb = random_consistent_kb(rng, 5, 6);
    std::vector<std::size_t> perm(kb.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ConditionalDecl> decls;
    for (std::size_t i : perm) decls.push_back(ConditionalDecl{kb[i].consequent(), kb[i].antecedent()});
    const KnowledgeBase shuffled(kb.alphabet(), std::move(decls));
    const OrderedPartition a = z_partition(kb);
    const OrderedPartition b = z_partition(shuffled);
    const OrderedPartition again = z_partition(kb);
    ASSERT_EQ(a.layer_count(), b.layer_count());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      EXPECT_EQ(b.layer_of(k), a.layer_of(perm[k]));
      EXPECT_EQ(again.layer_of(k), a.layer_of(k));
    }
  }
}

TEST(TolerancesProperty, MatchesExhaustiveScan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> m(1, 5);
    std::uniform_int_distribution<std::size_t> n(1, 5);
    const KnowledgeBase kb = random_kb(rng, m(rng), n(rng));
    const ConditionalSet subset = ConditionalSet::from_bits(rng() & kb.all().bits());
    oracle::IndexSet s;
    subset.for_each([&](std::size_t i) { s.insert(i); });
    for (std::size_t i = 0; i < kb.size(); ++i) {
      const auto got = tolerates(kb, subset, kb[i]);
      const auto want = oracle::tolerated(kb, s, i);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) {
        EXPECT_TRUE(oracle::verifies(kb[i], *got));
        EXPECT_TRUE((kb.falsified_by(*got) & subset).empty());
      }
    }
  }
}
