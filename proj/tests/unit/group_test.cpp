#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mixcay/class_algebra.hpp"
#include "mixcay/group.hpp"
#include "mixcay/group_spec.hpp"
#include "test_support.hpp"

namespace mixcay {
namespace {

using testing::element_1based;

std::vector<Group> sample_groups() {
  std::vector<Group> out;
  for (const char* s : {"cyclic:1", "cyclic:12", "dihedral:3", "dihedral:8", "dicyclic:2", "dicyclic:3", "symmetric:4",
                        "alternating:4", "product:cyclic:2,cyclic:6", "perm:4:[(0 1 2 3)],[(0 1)]"}) {
    out.push_back(build_group(parse_group_spec(s)));
  }
  return out;
}

TEST(Group, CyclicTwelve) {
  const Group g = make_cyclic(12);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.exponent(), 12u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Group, AlternatingFourOrderAndExponent) {
  const Group g = make_alternating(4);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.exponent(), 6u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(Group, DihedralThreeIsomorphicToSymmetricThree) {
  const Group d = make_dihedral(3);
  const Group s = make_symmetric(3);
  ASSERT_EQ(d.order(), 6u);
  ASSERT_EQ(s.order(), 6u);
  std::vector<Element> phi(6);
  std::iota(phi.begin(), phi.end(), Element{0});
  bool found = false;
  do {
    bool hom = true;
    for (Element a = 0; a < 6 && hom; ++a) {
      for (Element b = 0; b < 6 && hom; ++b) hom = phi[d.mul(a, b)] == s.mul(phi[a], phi[b]);
    }
    found = hom;
  } while (!found && std::next_permutation(phi.begin(), phi.end()));
  EXPECT_TRUE(found);
}

TEST(Group, ElementOrders) {
  EXPECT_EQ(make_cyclic(12).element_order(0), 1u);
  EXPECT_EQ(make_cyclic(12).element_order(5), 12u);
  const Group a4 = make_alternating(4);
  EXPECT_EQ(a4.element_order(element_1based(a4, "(1,2,3)", 4)), 3u);
  EXPECT_EQ(a4.element_order(element_1based(a4, "(1,2)(3,4)", 4)), 2u);
}

TEST(Group, Powers) {
  const Group z12 = make_cyclic(12);
  EXPECT_EQ(z12.power(5, 7), Element{35 % 12});
  EXPECT_EQ(z12.power(5, 0), z12.identity());
  for (const Group& g : sample_groups()) {
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.power(x, -1), g.inv(x));
      EXPECT_EQ(g.power(x, 0), g.identity());
      EXPECT_EQ(g.power(x, 3), g.mul(x, g.mul(x, x)));
      EXPECT_EQ(g.power(x, static_cast<long long>(g.element_order(x)) + 2), g.mul(x, x));
    }
  }
}

TEST(Group, Axioms) {
  std::mt19937 rng(7);
  for (const Group& g : sample_groups()) {
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(g.mul(0, a), a);
      EXPECT_EQ(g.mul(a, 0), a);
      EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
      EXPECT_EQ(n % g.element_order(a), 0u) << "Lagrange";
      EXPECT_EQ(g.element_order(g.inv(a)), g.element_order(a));
      EXPECT_EQ(g.exponent() % g.element_order(a), 0u);
      for (Element b = 0; b < n; ++b) EXPECT_EQ(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
    }
    if (n <= 24) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    } else {
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      for (int i = 0; i < 1000; ++i) {
        const Element a = pick(rng), b = pick(rng), c = pick(rng);
        ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
      }
    }
  }
}

TEST(Group, FamilyOrders) {
  EXPECT_EQ(make_dihedral(7).order(), 14u);
  EXPECT_EQ(make_dicyclic(5).order(), 20u);
  EXPECT_EQ(make_symmetric(5).order(), 120u);
  EXPECT_EQ(make_alternating(5).order(), 60u);
  EXPECT_EQ(make_direct_product(make_cyclic(3), make_cyclic(4)).order(), 12u);
  EXPECT_EQ(make_symmetric(1).order(), 1u);
  EXPECT_EQ(make_alternating(2).order(), 1u);
}

TEST(Group, DicyclicTwoIsQuaternion) {
  const Group q = make_dicyclic(2);
  std::size_t order_four = 0;
  for (Element x = 0; x < q.order(); ++x) order_four += q.element_order(x) == 4 ? 1 : 0;
  EXPECT_EQ(order_four, 6u);
  EXPECT_FALSE(q.is_abelian());
}

TEST(Group, SizeBound) {
  try {
    make_symmetric(8);
    FAIL() << "expected SizeExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
  }
  EXPECT_EQ(make_symmetric(7, 5040).order(), 5040u);
}

TEST(Group, Ambivalence) {
  EXPECT_TRUE(is_ambivalent(make_symmetric(4)));
  EXPECT_FALSE(is_ambivalent(make_alternating(4)));
  EXPECT_TRUE(is_ambivalent(make_alternating(5)));
  EXPECT_FALSE(is_ambivalent(make_cyclic(3)));
  EXPECT_TRUE(is_ambivalent(make_dihedral(5)));
  EXPECT_FALSE(is_ambivalent(make_dicyclic(3)));
  EXPECT_TRUE(is_ambivalent(make_dicyclic(2)));
}

TEST(Group, AlternatingAmbivalenceAgreesWithTables) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Group g = make_alternating(n, 2520);
    EXPECT_EQ(is_alternating_ambivalent(n), is_ambivalent(g)) << "A" << n;
  }
}

TEST(Group, AlternatingAmbivalenceKnownList) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const bool expected = n == 1 || n == 2 || n == 5 || n == 6 || n == 10 || n == 14;
    EXPECT_EQ(is_alternating_ambivalent(n), expected) << "A" << n;
  }
}

TEST(Permutation, Helpers) {
  const Permutation p = {1, 2, 0, 3};
  const Permutation q = {1, 0, 2, 3};
  EXPECT_EQ(cycle_notation(p), "(0 1 2)");
  EXPECT_EQ(cycle_notation(identity_permutation(4)), "()");
  EXPECT_EQ(compose(p, q), (Permutation{2, 1, 0, 3}));
  EXPECT_TRUE(is_even(p));
  EXPECT_FALSE(is_even(q));
}

TEST(Permutation, OneBasedCommaNotation) {
  const Group a4 = make_alternating(4);
  EXPECT_EQ(a4.label(element_1based(a4, "(1,2,3)", 4)), "(0 1 2)");
  EXPECT_EQ(a4.label(element_1based(a4, "(4,2,1)", 4)), "(0 3 1)");
}

}  // namespace
}  // namespace mixcay
