#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smallclass/smallclass.hpp"

using namespace smallclass;

namespace {

void expect_valid(const GroupTable& g) {
  std::vector<ElementId> t;
  for (ElementId a = 0; a < g.order(); ++a)
    for (auto v : g.row(a)) t.push_back(v);
  EXPECT_NO_THROW(build_from_cayley(g.order(), std::span<const ElementId>(t), g.name()));
}

}  // namespace

TEST(Families, OrdersAndNames) {
  EXPECT_EQ(make_cyclic(7).order(), 7U);
  EXPECT_EQ(make_dihedral(5).order(), 10U);
  EXPECT_EQ(make_dihedral(4).name(), "D4");
  EXPECT_EQ(make_dicyclic(3).order(), 12U);
  EXPECT_EQ(make_symmetric(5).order(), 120U);
  EXPECT_EQ(make_alternating(5).order(), 60U);
  EXPECT_EQ(make_alternating(1).order(), 1U);
  EXPECT_EQ(make_elementary_abelian(2, 4).order(), 16U);
  EXPECT_EQ(make_heisenberg(3).order(), 27U);
  EXPECT_EQ(make_affine(7, 3).order(), 21U);
  EXPECT_EQ(make_affine(5, 4).name(), "F20");
}

TEST(Families, AllTablesValidate) {
  for (const auto& g : {make_cyclic(12), make_dihedral(6), make_dicyclic(2), make_dicyclic(5),
                        make_symmetric(4), make_alternating(5), make_elementary_abelian(3, 2),
                        make_heisenberg(5), make_affine(11, 5),
                        direct_product(make_symmetric(3), make_cyclic(2))})
    expect_valid(g);
}

TEST(Families, QuaternionClassSizes) {
  auto q8 = make_dicyclic(2);
  EXPECT_EQ(oracle::class_sizes(q8), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(q8.mul(4, 4), 2U);
  EXPECT_EQ(oracle::centralizer(q8, oracle::all(q8), oracle::all(q8)), (oracle::Set{0, 2}));
}

TEST(Families, DihedralCenter) {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto d = make_dihedral(n);
    auto z = oracle::centralizer(d, oracle::all(d), oracle::all(d));
    EXPECT_EQ(z.size(), n % 2 == 0 ? 2U : 1U) << n;
  }
}

TEST(Families, DicyclicHasUniqueInvolution) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto g = make_dicyclic(n);
    std::size_t involutions = 0;
    for (ElementId x = 1; x < g.order(); ++x) involutions += g.mul(x, x) == 0;
    EXPECT_EQ(involutions, 1U) << n;
  }
}

TEST(Families, HeisenbergIsExtraspecial) {
  auto h = make_heisenberg(3);
  auto all = oracle::all(h);
  EXPECT_EQ(oracle::centralizer(h, all, all).size(), 3U);
  EXPECT_EQ(oracle::commutator_subgroup(h, all, all).size(), 3U);
  for (ElementId x = 0; x < h.order(); ++x) EXPECT_EQ(h.mul(h.mul(x, x), x), 0U);
}

TEST(Families, AffineIsFrobenius) {
  auto f = make_affine(5, 4);
  EXPECT_EQ(oracle::class_sizes(f), (std::vector<std::size_t>{1, 4, 5, 5, 5}));
}

TEST(Families, DirectProduct) {
  auto g = direct_product(make_symmetric(3), make_cyclic(2));
  EXPECT_EQ(g.order(), 12U);
  EXPECT_EQ(g.name(), "S3xC2");
  EXPECT_EQ(oracle::class_sizes(g), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3}));
}

TEST(Families, ParameterErrors) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { make_cyclic(0); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { make_symmetric(8); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { make_heisenberg(2); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { make_affine(7, 4); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { make_elementary_abelian(4, 2); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { make_cyclic(3000); }), ErrorKind::OrderCapExceeded);
  EXPECT_EQ(kind_of([] { make_symmetric(6, BuildOptions{100}); }), ErrorKind::OrderCapExceeded);
}
