#include <gtest/gtest.h>

#include "mixcay/errors.hpp"
#include "mixcay/group_spec.hpp"

namespace mixcay {
namespace {

TEST(GroupSpec, ParsesEveryFamily) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"cyclic:12", 12},       {"dihedral:6", 12},  {"dicyclic:3", 12},
      {"symmetric:4", 24},     {"alternating:4", 12}, {"product:cyclic:3,cyclic:4", 12},
      {"perm:4:[(0 1 2)],[(0 1)(2 3)]", 12}, {"product:dihedral:3,cyclic:2,cyclic:2", 24}};
  for (const auto& [text, order] : cases) {
    const auto spec = parse_group_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(build_group(spec).order(), order) << text;
  }
}

TEST(GroupSpec, ExpectedOrderMatchesFamilyFormula) {
  EXPECT_EQ(parse_group_spec("dihedral:9").expected_order(), 18u);
  EXPECT_EQ(parse_group_spec("dicyclic:9").expected_order(), 36u);
  EXPECT_EQ(parse_group_spec("alternating:6").expected_order(), 360u);
  EXPECT_EQ(parse_group_spec("symmetric:20").expected_order(100), 101u);
}

TEST(GroupSpec, PermutationGroupIsAlternatingFour) {
  const Group g = build_group(parse_group_spec("perm:4:[(0 1 2)],[(0 1)(2 3)]"));
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.exponent(), 6u);
  EXPECT_TRUE(g.has_action());
}

TEST(GroupSpec, RejectsMalformedInput) {
  for (const char* text : {"cyclic", "cyclic:", "cyclic:x", "cyclic:0", "klein:4", "perm:3:[(0 5)]",
                           "perm:3:(0 1)", "product:cyclic:2", "product:product:cyclic:2,cyclic:2,cyclic:3",
                           "cyclic:12x", "perm:3:[(0 1 0)]"}) {
    try {
      parse_group_spec(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedFamily) << text;
    }
  }
}

TEST(GroupSpec, SizeBoundChecked) {
  try {
    build_group(parse_group_spec("cyclic:5000"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
  }
  try {
    build_group(parse_group_spec("perm:8:[(0 1 2 3 4 5 6 7)],[(0 1)]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
  }
}

TEST(GroupSpec, Lists) {
  auto specs = parse_group_spec_list("cyclic:3,dihedral:4;alternating:4");
  ASSERT_EQ(specs.size(), 3u);
  EXPECT_EQ(to_string(specs[1]), "dihedral:4");
  specs = parse_group_spec_list("product:cyclic:2,cyclic:2;perm:3:[(0 1)],[(1 2)],cyclic:5");
  ASSERT_EQ(specs.size(), 3u);
  EXPECT_EQ(to_string(specs[0]), "product:cyclic:2,cyclic:2");
  EXPECT_EQ(to_string(specs[1]), "perm:3:[(0 1)],[(1 2)]");
  EXPECT_EQ(to_string(specs[2]), "cyclic:5");
}

}  // namespace
}  // namespace mixcay
