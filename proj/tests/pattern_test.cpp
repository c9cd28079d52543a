#include <random>

#include <gtest/gtest.h>

#include "permsort/pattern.hpp"
#include "test_oracles.hpp"

using namespace permsort;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
Pattern cl(std::string_view s) { return Pattern::classical(P(s)); }

} // namespace

TEST(Pattern, KindInvariants) {
  EXPECT_THROW(Pattern::mesh(P("12"), {{3, 0}}), InvalidInput);
  EXPECT_THROW(Pattern::mesh(P("12"), {{-1, 0}}), InvalidInput);
  EXPECT_THROW(Pattern::marked(P("21"), {{1, 2}}, {Mark{Region{{1, 2}}, 1}}), InvalidInput);
  EXPECT_THROW(Pattern::marked(P("21"), {}, {Mark{Region{{1, 2}}, 0}}), InvalidInput);
  EXPECT_THROW(Pattern::marked(P("21"), {}, {Mark{Region{}, 1}}), InvalidInput);
  EXPECT_THROW(Pattern::barred(P("123"), {}), InvalidInput);
  EXPECT_THROW(Pattern::barred(P("123"), {4}), InvalidInput);
  EXPECT_THROW(Pattern::barred(P("123"), {2, 2}), InvalidInput);
  EXPECT_NO_THROW(Pattern::barred(P("35241"), {2}));
}

TEST(Pattern, DecorationAvoidKindRestricted) {
  EXPECT_THROW(Pattern::decorated(P("21"), {make_decoration(Region{{1, 1}},
                                                           Pattern::mesh(P("12"), {{0, 0}}))}),
               UnsupportedPattern);
  const Pattern inner = Pattern::decorated(P("1"), {make_decoration(Region{{0, 0}}, cl("1"))});
  EXPECT_NO_THROW(Pattern::decorated(P("21"), {make_decoration(Region{{1, 1}}, inner)}));
  EXPECT_THROW(Pattern::decorated(P("21"), {Decoration{Region{{1, 1}}, nullptr}}), InvalidInput);
}

TEST(Canonicalize, SortsBoxes) {
  const Pattern m = Pattern::mesh(P("132"), {{1, 2}, {0, 2}});
  const Pattern c = canonicalize(m);
  EXPECT_EQ(c.shade(), (std::vector<Box>{{0, 2}, {1, 2}}));
  EXPECT_EQ(c, Pattern::mesh(P("132"), {{0, 2}, {1, 2}}));
  EXPECT_NE(m, c);
}

TEST(Canonicalize, ClassicalUnchanged) {
  EXPECT_EQ(canonicalize(cl("231")), cl("231"));
}

TEST(Canonicalize, CollapsesEmptyKinds) {
  EXPECT_EQ(canonicalize(Pattern::mesh(P("231"), {})), cl("231"));
  EXPECT_EQ(canonicalize(Pattern::marked(P("231"), {{1, 1}}, {})),
            Pattern::mesh(P("231"), {{1, 1}}));
  EXPECT_EQ(canonicalize(Pattern::decorated(P("21"), {})), cl("21"));
}

TEST(Canonicalize, OrdersMarksAndDecorations) {
  const Pattern m = Pattern::marked(P("321"), {},
                                    {Mark{Region{{2, 3}, {2, 2}}, 1}, Mark{Region{{1, 3}}, 1},
                                     Mark{Region{{1, 3}}, 1}});
  const Pattern c = canonicalize(m);
  ASSERT_EQ(c.marks().size(), 2u);
  EXPECT_EQ(c.marks()[0].region, (Region{{1, 3}}));
  EXPECT_EQ(c.marks()[1].region.boxes(), (std::vector<Box>{{2, 2}, {2, 3}}));

  const Pattern d = Pattern::decorated(
      P("21"), {make_decoration(Region{{2, 2}}, cl("12")), make_decoration(Region{{1, 1}}, cl("1"))});
  const Pattern dc = canonicalize(d);
  EXPECT_EQ(dc.decorations()[0].region, (Region{{1, 1}}));
}

TEST(Canonicalize, IdempotentOnRandomPatterns) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const Permutation perm = oracle::random_perm(rng, k);
    auto shade = oracle::random_boxes(rng, k, 0.2);
    std::shuffle(shade.begin(), shade.end(), rng);
    std::vector<Mark> marks;
    std::vector<Box> taken(shade);
    std::sort(taken.begin(), taken.end());
    for (int t = 0; t < 2; ++t) {
      std::vector<Box> region;
      for (Box b : oracle::random_boxes(rng, k, 0.15))
        if (!std::binary_search(taken.begin(), taken.end(), b))
          region.push_back(b);
      if (!region.empty())
        marks.push_back(Mark{Region(region), 1 + static_cast<int>(rng() % 2)});
    }
    const Pattern p = Pattern::marked(perm, shade, marks);
    const Pattern once = canonicalize(p);
    EXPECT_EQ(canonicalize(once), once);
  }
}

TEST(Region, SetOperations) {
  const Region a{{2, 3}};
  const Region b{{3, 4}, {2, 3}, {3, 3}};
  EXPECT_TRUE(a.is_subset_of(b));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(b.contains({3, 3}));
  EXPECT_EQ(b.boxes().front(), (Box{2, 3}));
}
