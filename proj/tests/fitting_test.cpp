#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smallclass/smallclass.hpp"
#include "test_util.hpp"

using namespace smallclass;

TEST(FittingSubgroup, Examples) {
  auto d4 = make_dihedral(4);
  EXPECT_EQ(fitting_subgroup(d4).order(), 8U);
  auto s4 = make_symmetric(4);
  EXPECT_EQ(fitting_subgroup(s4).elements(),
            testutil::labels(s4, {"()", "(0,1)(2,3)", "(0,2)(1,3)", "(0,3)(1,2)"}));
  auto s3 = make_symmetric(3);
  EXPECT_EQ(fitting_subgroup(s3).order(), 3U);
  auto a5 = make_alternating(5);
  EXPECT_TRUE(fitting_subgroup(a5).is_trivial());
}

TEST(FittingOracle, AgreesOnExamples) {
  for (auto spec : {"cyclic:1", "sym:4", "sym:3", "alt:4", "product:sym:3,sym:3",
                    "product:dihedral:4,cyclic:3", "affine:7,6", "alt:5", "product:sym:4,cyclic:2"}) {
    auto g = build_group(spec);
    EXPECT_EQ(fitting_subgroup(g), fitting_oracle(g, 64)) << spec;
  }
}

TEST(FittingOracle, CapEnforced) {
  auto c30 = make_cyclic(30);
  try {
    fitting_oracle(c30);
    FAIL() << "expected OracleCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OracleCapExceeded);
  }
  EXPECT_EQ(fitting_oracle(c30, 30).order(), 30U);
}

TEST(EnumerateNormalSubgroups, Examples) {
  auto one = make_cyclic(1);
  auto n1 = enumerate_normal_subgroups(one);
  ASSERT_EQ(n1.size(), 1U);
  EXPECT_TRUE(n1[0].is_trivial());

  auto s4 = make_symmetric(4);
  auto ns = enumerate_normal_subgroups(s4);
  std::vector<std::size_t> orders;
  for (const auto& n : ns) orders.push_back(n.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12, 24}));

  auto q8 = make_dicyclic(2);
  auto nq = enumerate_normal_subgroups(q8);
  orders.clear();
  for (const auto& n : nq) orders.push_back(n.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 4, 4, 4, 8}));
}

// Join-closure enumeration equals subset-of-classes enumeration.
TEST(EnumerateNormalSubgroups, MatchesClassUnionBruteForce) {
  for (auto spec : {"sym:4", "dicyclic:2", "dihedral:6", "product:sym:3,sym:3", "alt:5",
                    "elemab:2,3", "heisenberg:3", "affine:5,4", "product:dihedral:4,cyclic:2"}) {
    auto g = build_group(spec);
    auto found = enumerate_normal_subgroups(g, 64);
    std::set<oracle::Set> got, want;
    for (const auto& n : found) got.insert(oracle::to_set(n));
    for (const auto& n : oracle::normal_subgroups(g)) want.insert(n);
    EXPECT_EQ(got, want) << spec;
    EXPECT_EQ(found.size(), got.size()) << spec;
    for (std::size_t i = 1; i < found.size(); ++i) EXPECT_LE(found[i - 1].order(), found[i].order());
  }
}

TEST(FittingProperties, NilpotentNormalContainsCenter) {
  for (auto spec : {"sym:5", "dicyclic:6", "affine:13,4", "product:alt:4,cyclic:3",
                    "product:sym:3,dihedral:5", "dihedral:12"}) {
    auto g = build_group(spec);
    auto f = fitting_subgroup(g);
    EXPECT_TRUE(is_nilpotent(g, f)) << spec;
    EXPECT_TRUE(is_normal_subgroup(g, f.elements())) << spec;
    EXPECT_TRUE(center(g).is_subset_of(f)) << spec;
  }
}
