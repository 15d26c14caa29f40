#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smallclass/smallclass.hpp"

using namespace smallclass;

namespace {

std::vector<GroupTable> sample_groups() {
  std::vector<GroupTable> out;
  for (const auto& g : builtin_groups(48)) out.push_back(g.table);
  return out;
}

ElementSet random_subset(const GroupTable& g, std::mt19937& rng, std::size_t k) {
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  ElementSet s(g.order());
  for (std::size_t i = 0; i < k; ++i) s.insert(pick(rng));
  return s;
}

}  // namespace

TEST(Properties, SubgroupGenerationMatchesClosure) {
  std::mt19937 rng(20261016);
  for (const auto& g : sample_groups()) {
    for (int trial = 0; trial < 4; ++trial) {
      auto s = random_subset(g, rng, 1 + trial % 3);
      EXPECT_EQ(oracle::to_set(subgroup_generated(g, s)), oracle::closure(g, oracle::to_set(s)))
          << g.name();
    }
  }
}

TEST(Properties, CentralizerMatchesScan) {
  std::mt19937 rng(7);
  for (const auto& g : sample_groups()) {
    auto s = random_subset(g, rng, 2);
    EXPECT_EQ(oracle::to_set(centralizer(g, s, Subgroup::whole(g))),
              oracle::centralizer(g, oracle::to_set(s), oracle::all(g)))
        << g.name();
  }
}

TEST(Properties, NormalClosureIsSmallestNormalSupergroup) {
  std::mt19937 rng(11);
  for (const auto& g : sample_groups()) {
    auto s = random_subset(g, rng, 1);
    auto n = oracle::to_set(normal_closure(g, s));
    EXPECT_TRUE(oracle::is_normal(g, n)) << g.name();
    EXPECT_EQ(oracle::closure(g, n), n);
    oracle::Set seed = oracle::to_set(s);
    for (auto x : seed) {
      EXPECT_TRUE(n.count(x));
    }
  }
}

TEST(Properties, ClassInvariants) {
  for (const auto& g : sample_groups()) {
    auto cp = conjugacy_classes(g);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cp.count(); ++i) {
      total += cp.size[i];
      EXPECT_EQ(g.order() % cp.size[i], 0U) << g.name();
      if (i > 0) EXPECT_LE(cp.size[i - 1], cp.size[i]);
    }
    EXPECT_EQ(total, g.order());
    auto sizes = cp.size;
    EXPECT_EQ(sizes, oracle::class_sizes(g)) << g.name();
  }
}

TEST(Properties, MIsNormalAndContainsCenter) {
  for (const auto& g : sample_groups()) {
    GroupStructure st(g);
    auto m = oracle::to_set(st.m());
    EXPECT_TRUE(oracle::is_normal(g, m)) << g.name();
    for (auto z : st.center()) EXPECT_TRUE(m.count(z)) << g.name();
    EXPECT_TRUE(st.small().is_subset_of(st.m().elements()));
  }
}

TEST(Properties, CommutatorSetsLieInDerivedSubgroup) {
  for (const auto& g : sample_groups()) {
    auto all = oracle::all(g);
    auto derived = oracle::commutator_subgroup(g, all, all);
    EXPECT_EQ(oracle::to_set(commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g))),
              derived)
        << g.name();
    for (ElementId x = 0; x < g.order(); x += 3)
      for (auto c : commutator_set(g, x, Subgroup::whole(g))) EXPECT_TRUE(derived.count(c));
  }
}

TEST(Properties, FittingIsNilpotentNormalAndContainsCenter) {
  for (const auto& g : sample_groups()) {
    GroupStructure st(g);
    auto f = oracle::to_set(st.fitting());
    EXPECT_TRUE(oracle::is_normal(g, f)) << g.name();
    EXPECT_GE(oracle::nilpotency_class(g, f), 0) << g.name();
    EXPECT_TRUE(st.center().is_subset_of(st.fitting())) << g.name();
  }
}
