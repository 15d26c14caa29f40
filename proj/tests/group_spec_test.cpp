#include <gtest/gtest.h>

#include <string>

#include "smallclass/smallclass.hpp"

using namespace smallclass;

namespace {

ErrorKind parse_error_kind(const std::string& text, std::string* message = nullptr) {
  try {
    parse_group_spec(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(GroupSpec, RenderRoundTrip) {
  for (std::string text : {"cyclic:5", "dihedral:4", "dicyclic:2", "sym:4", "alt:5", "elemab:2,3",
                           "heisenberg:3", "affine:7,3", "product:dihedral:4,cyclic:3",
                           "product:product:sym:3,sym:3,cyclic:2", "file:a/b.json",
                           "product:gens:x.json,cyclic:2"}) {
    auto s = parse_group_spec(text);
    EXPECT_EQ(render(s), text);
    EXPECT_EQ(parse_group_spec(render(s)), s);
  }
}

TEST(GroupSpec, BuildsNestedProduct) {
  auto g = build_group("product:dihedral:4,cyclic:3");
  EXPECT_EQ(g.order(), 24U);
  EXPECT_EQ(g.name(), "D4xC3");
}

TEST(GroupSpec, BoundsCheckedAtParseTime) {
  EXPECT_EQ(parse_error_kind("sym:9"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(parse_error_kind("cyclic:0"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(parse_error_kind("heisenberg:4"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(parse_error_kind("affine:7,4"), ErrorKind::ParameterOutOfRange);
}

TEST(GroupSpec, ParseErrorsReportPosition) {
  std::string msg;
  EXPECT_EQ(parse_error_kind("dihedral:", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("position 9"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_kind("sym:4x", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("position 5"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_kind("elemab:2"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("product:sym:3"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(""), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("cyclic"), ErrorKind::ParseError);
}

TEST(GroupSpec, UnknownFamily) {
  std::string msg;
  EXPECT_EQ(parse_error_kind("mathieu:11", &msg), ErrorKind::UnknownFamily);
  EXPECT_NE(msg.find("mathieu"), std::string::npos);
  EXPECT_EQ(parse_error_kind("product:sym:3,frob:5"), ErrorKind::UnknownFamily);
}

TEST(GroupSpec, OrderCapAppliesToBuild) {
  try {
    build_group("product:sym:5,cyclic:20");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
  EXPECT_EQ(build_group("product:sym:5,cyclic:20", BuildOptions{2400}).order(), 2400U);
}
