#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mixcay/class_algebra.hpp"
#include "mixcay/errors.hpp"
#include "mixcay/group_spec.hpp"
#include "test_support.hpp"

namespace mixcay {
namespace {

using testing::element_1based;

constexpr double kTol = 1e-8;

std::vector<std::string> table_groups() {
  return {"cyclic:1",    "cyclic:7",   "cyclic:12",   "dihedral:3",    "dihedral:5",
          "dihedral:8",  "dicyclic:2", "dicyclic:3",  "symmetric:4",   "alternating:4",
          "alternating:5", "symmetric:5", "product:cyclic:2,cyclic:6", "product:dihedral:3,cyclic:3",
          "perm:6:[(0 1 2 3 4 5)],[(0 1)]"};
}

TEST(Classes, AlternatingFourSizes) {
  const Group a4 = make_alternating(4);
  const ClassData cd = conjugacy_classes(a4);
  ASSERT_EQ(cd.num_classes(), 4u);
  std::multiset<std::size_t> sizes(cd.sizes.begin(), cd.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 3, 4, 4}));
  const auto c123 = cd.class_of[element_1based(a4, "(1,2,3)", 4)];
  const auto c132 = cd.class_of[element_1based(a4, "(1,3,2)", 4)];
  EXPECT_NE(c123, c132);
  EXPECT_EQ(cd.inverse_class[c123], c132);
  EXPECT_EQ(cd.sizes[cd.class_of[element_1based(a4, "(1,2)(3,4)", 4)]], 3u);
}

TEST(Classes, CyclicSingletons) {
  const ClassData cd = conjugacy_classes(make_cyclic(9));
  ASSERT_EQ(cd.num_classes(), 9u);
  for (const auto s : cd.sizes) EXPECT_EQ(s, 1u);
}

TEST(Classes, SymmetricThreeAgainstBruteForce) {
  const Group s3 = make_symmetric(3);
  const ClassData cd = conjugacy_classes(s3);
  std::set<std::set<Element>> oracle;
  for (Element x = 0; x < s3.order(); ++x) {
    std::set<Element> cls;
    for (Element g = 0; g < s3.order(); ++g) cls.insert(s3.mul(s3.mul(g, x), s3.inv(g)));
    oracle.insert(cls);
  }
  std::set<std::set<Element>> computed;
  for (const auto& m : cd.members) computed.insert(std::set<Element>(m.begin(), m.end()));
  EXPECT_EQ(computed, oracle);
  EXPECT_EQ(cd.sizes, (std::vector<std::size_t>{1, 3, 2}));
}

TEST(Classes, Invariants) {
  for (const auto& spec : table_groups()) {
    const Group g = build_group(parse_group_spec(spec));
    const ClassData cd = conjugacy_classes(g);
    std::size_t total = 0;
    EXPECT_EQ(cd.members[0], std::vector<Element>{0}) << spec;
    for (ClassIndex c = 0; c < cd.num_classes(); ++c) {
      total += cd.sizes[c];
      EXPECT_EQ(cd.sizes[c] * cd.centralizer_order[c], g.order()) << spec;
      EXPECT_EQ(cd.inverse_class[cd.inverse_class[c]], c);
      EXPECT_EQ(cd.reps[c], cd.members[c].front());
      EXPECT_EQ(cd.power_class(c, 1), c);
      EXPECT_EQ(cd.power_class(c, -1), cd.inverse_class[c]);
      const auto m = static_cast<long long>(cd.rep_order[c]);
      for (long long r = 0; r < m; ++r) {
        EXPECT_EQ(cd.power_class(c, 3 * m + r), cd.power_class(c, r));
        EXPECT_EQ(cd.power_class(c, r), cd.class_of[g.power(cd.reps[c], r)]);
      }
    }
    EXPECT_EQ(total, g.order()) << spec;
  }
}

std::size_t brute_structure_constant(const Group& g, const ClassData& cd, ClassIndex i, ClassIndex j, Element z) {
  std::size_t count = 0;
  for (const auto x : cd.members[i])
    for (const auto y : cd.members[j]) count += g.mul(x, y) == z ? 1 : 0;
  return count;
}

TEST(StructureConstants, AlternatingFourExamples) {
  const Group a4 = make_alternating(4);
  const ClassData cd = conjugacy_classes(a4);
  const auto inv = cd.class_of[element_1based(a4, "(1,2)(3,4)", 4)];
  const auto c123 = cd.class_of[element_1based(a4, "(1,2,3)", 4)];
  const auto c132 = cd.class_of[element_1based(a4, "(1,3,2)", 4)];
  EXPECT_EQ(structure_constant(a4, cd, 0, 0, 0), 1u);
  EXPECT_EQ(structure_constant(a4, cd, inv, inv, 0), 3u);
  EXPECT_EQ(structure_constant(a4, cd, c123, c132, 0), 4u);
}

TEST(StructureConstants, IndependentOfRepresentative) {
  for (const char* spec : {"alternating:4", "symmetric:4", "dihedral:5", "dicyclic:3"}) {
    const Group g = build_group(parse_group_spec(spec));
    const ClassData cd = conjugacy_classes(g);
    const std::size_t h = cd.num_classes();
    for (ClassIndex i = 0; i < h; ++i)
      for (ClassIndex j = 0; j < h; ++j)
        for (ClassIndex k = 0; k < h; ++k) {
          const auto a = structure_constant(g, cd, i, j, k);
          EXPECT_EQ(a, brute_structure_constant(g, cd, i, j, cd.members[k].front()));
          EXPECT_EQ(a, brute_structure_constant(g, cd, i, j, cd.members[k].back()));
        }
  }
}

TEST(CharacterTable, AlternatingFourMatchesGolden) {
  const Group a4 = make_alternating(4);
  const ClassData cd = conjugacy_classes(a4);
  const CharacterTable t = character_table(a4, cd);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.degree(0), 1);
  EXPECT_EQ(t.degree(1), 1);
  EXPECT_EQ(t.degree(2), 1);
  EXPECT_EQ(t.degree(3), 3);
  const auto cols = testing::a4_golden_columns(a4, cd);
  std::set<std::size_t> used;
  for (const auto& golden : testing::a4_golden_table()) {
    const auto row = testing::matching_row(t, cols, golden, kTol);
    ASSERT_TRUE(row.has_value());
    used.insert(*row);
  }
  EXPECT_EQ(used.size(), 4u);
}

TEST(CharacterTable, CyclicThree) {
  const Group z3 = make_cyclic(3);
  const ClassData cd = conjugacy_classes(z3);
  const CharacterTable t = character_table(z3, cd);
  ASSERT_EQ(t.size(), 3u);
  // each row is a -> w^(ja) for some j; all three j occur
  std::set<int> exponents;
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(t.degree(j), 1);
    int found = -1;
    for (int e = 0; e < 3; ++e) {
      bool ok = true;
      for (Element a = 0; a < 3; ++a) {
        const auto expected = std::pow(testing::kW3, static_cast<double>(e * static_cast<int>(a)));
        ok = ok && std::abs(t.value(j, cd.class_of[a]) - expected) < kTol;
      }
      if (ok) found = e;
    }
    ASSERT_GE(found, 0);
    exponents.insert(found);
  }
  EXPECT_EQ(exponents.size(), 3u);
}

TEST(CharacterTable, SymmetricThreeDegrees) {
  const Group s3 = make_symmetric(3);
  const ClassData cd = conjugacy_classes(s3);
  const CharacterTable t = character_table(s3, cd);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.degree(0), 1);
  EXPECT_EQ(t.degree(1), 1);
  EXPECT_EQ(t.degree(2), 2);
  const auto r = orthogonality_residual(cd, t);
  EXPECT_LT(r.rows, kTol);
  EXPECT_LT(r.columns, kTol);
}

TEST(CharacterTable, Invariants) {
  for (const auto& spec : table_groups()) {
    const Group g = build_group(parse_group_spec(spec));
    const ClassData cd = conjugacy_classes(g);
    const CharacterTable t = character_table(g, cd);
    ASSERT_EQ(t.size(), cd.num_classes()) << spec;
    const auto r = orthogonality_residual(cd, t);
    EXPECT_LT(r.rows, kTol) << spec;
    EXPECT_LT(r.columns, kTol) << spec;
    std::size_t sum_sq = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      sum_sq += static_cast<std::size_t>(t.degree(j) * t.degree(j));
      if (j > 0) EXPECT_LE(t.degree(j - 1), t.degree(j));
      EXPECT_EQ(t.conjugate(t.conjugate(j)), j);
      for (ClassIndex c = 0; c < cd.num_classes(); ++c) {
        EXPECT_LE(std::abs(t.value(j, c)), t.degree(j) + kTol);
        EXPECT_LT(std::abs(t.value(t.conjugate(j), c) - std::conj(t.value(j, c))), kTol);
        EXPECT_LT(std::abs(t.value(j, cd.inverse_class[c]) - std::conj(t.value(j, c))), kTol);
      }
    }
    EXPECT_EQ(sum_sq, g.order()) << spec;
    for (ClassIndex c = 0; c < cd.num_classes(); ++c) EXPECT_LT(std::abs(t.value(0, c) - 1.0), kTol) << "trivial first";
    if (g.is_abelian()) {
      EXPECT_EQ(t.size(), g.order());
      for (std::size_t j = 0; j < t.size(); ++j) EXPECT_EQ(t.degree(j), 1);
    }
  }
}

TEST(CharacterTable, Deterministic) {
  const Group g = make_dihedral(7);
  const ClassData cd = conjugacy_classes(g);
  CharacterTableOptions other;
  other.seed = 12345;
  const CharacterTable a = character_table(g, cd);
  const CharacterTable b = character_table(g, cd, other);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (ClassIndex c = 0; c < cd.num_classes(); ++c) EXPECT_LT(std::abs(a.value(j, c) - b.value(j, c)), kTol);
}

TEST(CharacterTable, ClassLimit) {
  const Group g = make_cyclic(30);
  const ClassData cd = conjugacy_classes(g);
  CharacterTableOptions options;
  options.max_classes = 10;
  try {
    character_table(g, cd, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
  }
}

TEST(CharacterTable, FromValuesPairsConjugates) {
  const auto golden = testing::a4_golden_table();
  const CharacterTable t = CharacterTable::from_values(golden);
  EXPECT_EQ(t.degree(3), 3);
  EXPECT_EQ(t.conjugate(0), 0u);
  EXPECT_EQ(t.conjugate(1), 2u);
  EXPECT_EQ(t.conjugate(2), 1u);
  EXPECT_EQ(t.conjugate(3), 3u);
}

}  // namespace
}  // namespace mixcay
