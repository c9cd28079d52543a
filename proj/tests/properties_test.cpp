#include <random>
#include <set>

#include <gtest/gtest.h>

#include "permsort/permsort.hpp"
#include "test_oracles.hpp"

using namespace permsort;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
Pattern cl(std::string_view s) { return Pattern::classical(P(s)); }

std::vector<Permutation> perms_upto(int k) {
  std::vector<Permutation> out;
  for (int m = 1; m <= k; ++m)
    for (const auto &w : oracle::all_perms(m))
      out.emplace_back(w);
  return out;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

Pattern random_marked(std::mt19937 &rng, int k) {
  const Permutation perm = oracle::random_perm(rng, k);
  auto shade = oracle::random_boxes(rng, k, 0.15);
  std::vector<Mark> marks;
  for (int t = 0; t < 2; ++t) {
    std::vector<Box> region;
    for (Box b : oracle::random_boxes(rng, k, 0.2))
      if (std::find(shade.begin(), shade.end(), b) == shade.end())
        region.push_back(b);
    if (!region.empty())
      marks.push_back(Mark{Region(region), 1});
  }
  return Pattern::marked(perm, shade, marks);
}

} // namespace

TEST(SortingProperties, OutputsArePermutationsMatchingDefinitions) {
  for (int n = 0; n <= 8; ++n)
    for (const auto &w : oracle::all_perms(n)) {
      const Permutation pi(w);
      EXPECT_EQ(stack_sort(pi).values(), oracle::stack_sort(w));
      EXPECT_EQ(bubble_sort(pi).values(), oracle::bubble_sort(w));
    }
}

TEST(SortingProperties, StackOutputEndsWithLargest) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &w : oracle::all_perms(n))
      EXPECT_EQ(stack_sort(Permutation(w))(n), n);
}

TEST(SortingProperties, StackSortableIffAvoids231) {
  const Pattern p = cl("231");
  for (int n = 1; n <= 8; ++n)
    for (const auto &w : oracle::all_perms(n)) {
      const Permutation pi(w);
      EXPECT_EQ(stack_sort(pi).is_identity(), !contains(pi, p));
    }
}

TEST(SortingProperties, BubblePassRemovesInversions) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &w : oracle::all_perms(n)) {
      const Permutation pi(w);
      const auto before = inversion_count(pi), after = inversion_count(bubble_sort(pi));
      if (pi.is_identity()) {
        EXPECT_EQ(after, 0u);
      } else {
        EXPECT_LT(after, before);
      }
    }
}

TEST(SortingProperties, PowersCompose) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation pi = oracle::random_perm(rng, 1 + static_cast<int>(rng() % 9));
    const int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    for (SortOp op : {SortOp::stack, SortOp::bubble})
      EXPECT_EQ(sort_power(op, a + b, pi), sort_power(op, a, sort_power(op, b, pi)));
  }
}

TEST(PatternProperties, KindsCoincideOnDegenerateData) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const Permutation perm = oracle::random_perm(rng, k);
    auto shade = oracle::random_boxes(rng, k, 0.3);
    const Pattern classical = Pattern::classical(perm);
    const Pattern bare_mesh = Pattern::mesh(perm, {});
    const Pattern mesh = Pattern::mesh(perm, shade);
    const Pattern marked = Pattern::marked(perm, shade, {});
    const Pattern dec = shade.empty() ? classical
                                      : Pattern::decorated(perm, {make_decoration(Region(shade), cl("1"))});
    for (int n = 0; n <= 6; ++n)
      for (const auto &w : oracle::all_perms(n)) {
        const Permutation pi(w);
        ASSERT_EQ(occurrences(pi, classical).size(), occurrences(pi, bare_mesh).size());
        const auto m = occurrences(pi, mesh).size();
        ASSERT_EQ(m, occurrences(pi, marked).size());
        ASSERT_EQ(m, occurrences(pi, dec).size());
      }
  }
}

TEST(PatternProperties, MoreShadingFewerOccurrences) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const Permutation perm = oracle::random_perm(rng, k);
    const auto small = oracle::random_boxes(rng, k, 0.2);
    auto large = small;
    for (Box b : oracle::random_boxes(rng, k, 0.2))
      large.push_back(b);
    std::sort(large.begin(), large.end());
    large.erase(std::unique(large.begin(), large.end()), large.end());
    const Permutation pi = oracle::random_perm(rng, 7);
    std::set<std::vector<int>> a, b;
    for (const auto &o : occurrences(pi, Pattern::mesh(perm, small)))
      a.insert(o.alpha);
    for (const auto &o : occurrences(pi, Pattern::mesh(perm, large)))
      b.insert(o.alpha);
    EXPECT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(PatternProperties, SingleBarPatternsAreMeshPatterns) {
  std::vector<Pattern> barred, mesh;
  for (const Permutation &p : perms_upto(4)) {
    if (p.size() < 2)
      continue;
    for (int bar = 1; bar <= p.size(); ++bar) {
      barred.push_back(Pattern::barred(p, {bar}));
      mesh.push_back(barred_to_mesh(barred.back()));
    }
  }
  for (int n = 0; n <= 7; ++n)
    for (const auto &w : oracle::all_perms(n)) {
      const PreparedPermutation pi{Permutation(w)};
      for (std::size_t i = 0; i < barred.size(); ++i)
        ASSERT_EQ(pi.contains(barred[i]), pi.contains(mesh[i]))
            << format_pattern(barred[i], PatternFormat::json) << " in " << to_string(Permutation(w));
    }
}

TEST(PatternProperties, OccurrenceCountBoundedByBinomial) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 9), k = 1 + static_cast<int>(rng() % 4);
    const auto count = occurrences(oracle::random_perm(rng, n), Pattern::classical(oracle::random_perm(rng, k))).size();
    EXPECT_LE(count, n >= k ? binomial(n, k) : 0u);
  }
}

TEST(PatternProperties, ClassicalAvoidanceClosedUnderDeletion) {
  const std::vector<Pattern> basis{cl("2341"), cl("3142")};
  for (const Permutation &pi : av_set(6, basis))
    for (int drop = 1; drop <= 6; ++drop) {
      std::vector<int> rest;
      for (int i = 1; i <= 6; ++i)
        if (i != drop)
          rest.push_back(pi(i));
      EXPECT_TRUE(avoids_all(standardize(std::span<const int>(rest)), basis));
    }
}

TEST(PatternProperties, LargerBasisSmallerClass) {
  const std::vector<Pattern> one{cl("231")}, two{cl("231"), cl("4123")};
  for (int n = 1; n <= 7; ++n) {
    const auto a = av_set(n, one), b = av_set(n, two);
    EXPECT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(PreimageProperties, OccurrencesInImageComeFromUnS) {
  for (const Permutation &p : perms_upto(4)) {
    const auto candidates = un_s(p);
    for (int n = p.size(); n <= 7; ++n)
      for (const auto &w : oracle::all_perms(n)) {
        const Permutation pi(w);
        const Permutation pos = pi.inverse();
        for (const auto &occ : occurrences(stack_sort(pi), Pattern::classical(p))) {
          std::vector<int> vals = occ.beta;
          std::sort(vals.begin(), vals.end(), [&](int x, int y) { return pos(x) < pos(y); });
          const Permutation before = standardize(std::span<const int>(vals));
          ASSERT_TRUE(std::binary_search(candidates.begin(), candidates.end(), before))
              << to_string(p) << " in S(" << to_string(pi) << ")";
        }
      }
  }
}

TEST(PreimageProperties, MarkingIndependentOfInversionOrder) {
  std::mt19937 rng(59);
  for (const Permutation &p : perms_upto(5))
    for (const Permutation &lambda : un_s(p)) {
      const auto reference = shade_and_mark(lambda, p);
      std::vector<ValuePair> order = inversion_tables(p).inversions;
      for (int t = 0; t < 4; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(shade_and_mark(lambda, p, order), reference) << to_string(lambda);
      }
    }
}

TEST(PreimageProperties, ShadesAndMarksDisjoint) {
  for (const Permutation &p : perms_upto(5))
    for (const auto &cand : stack_preimage_candidates(p)) {
      if (!cand.result)
        continue;
      for (const Region &m : cand.result->marks) {
        EXPECT_FALSE(m.boxes().empty());
        for (Box b : m.boxes())
          EXPECT_FALSE(std::binary_search(cand.result->shades.begin(), cand.result->shades.end(), b));
      }
    }
}

TEST(PreimageProperties, BasisDescribesPreimage) {
  for (const Permutation &p : perms_upto(4)) {
    const std::vector<Pattern> target{Pattern::classical(p)};
    const MarkedBasis basis = stack_preimage_basis(p);
    const MarkedBasis expanded = expand_basis(basis);
    for (int n = 1; n <= 7; ++n) {
      const auto expected = preimage_av_set(n, SortOp::stack, 1, target);
      ASSERT_EQ(av_set(n, basis.patterns), expected) << to_string(p) << " n=" << n;
      ASSERT_EQ(av_set(n, expanded.patterns), expected) << to_string(p) << " expanded, n=" << n;
    }
  }
}

TEST(PreimageProperties, ExpansionPreservesContainment) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const Pattern m = random_marked(rng, 1 + static_cast<int>(rng() % 3));
    const auto expanded = expand_marks(m);
    for (int n = 0; n <= 6; ++n)
      for (const auto &w : oracle::all_perms(n)) {
        const PreparedPermutation pi{Permutation(w)};
        ASSERT_EQ(pi.contains(m), !pi.avoids_all(expanded)) << format_pattern(m, PatternFormat::line);
      }
  }
}

TEST(PreimageProperties, EachImageOccurrenceHasExactlyOneSource) {
  const Permutation p = P("2341");
  const MarkedBasis basis = stack_preimage_basis(p);
  int checked = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto &w : oracle::all_perms(n)) {
      const Permutation pi(w);
      const Permutation pos = pi.inverse();
      for (const auto &occ : occurrences(stack_sort(pi), Pattern::classical(p))) {
        std::vector<int> alpha;
        for (int v : occ.beta)
          alpha.push_back(pos(v));
        std::sort(alpha.begin(), alpha.end());
        int sources = 0;
        for (const Pattern &q : basis.patterns)
          for (const auto &o : occurrences(pi, q))
            sources += o.alpha == alpha;
        ASSERT_EQ(sources, 1) << to_string(pi);
        ++checked;
      }
    }
  EXPECT_GT(checked, 100);
}

TEST(CensusProperties, MonotoneInPassesAndEventuallyEverything) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t prev = 0;
    for (int k = 1; k <= n; ++k) {
      const auto c = census(SortOp::stack, k, n);
      EXPECT_GE(c, prev);
      if (k >= n - 1) {
        EXPECT_EQ(c, factorial(n));
      }
      prev = c;
    }
  }
}

TEST(CensusProperties, TwoPassesMatchClosedForm) {
  for (int n = 1; n <= 9; ++n)
    EXPECT_EQ(BigInt(census(SortOp::stack, 2, n, 4)), oracle::west2_legendre(n)) << n;
}

TEST(CensusProperties, ThreePassesMatchWest3Basis) {
  const auto basis = builtin_basis(FixtureName::west3);
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(census(SortOp::stack, 3, n, 4), av_count(n, basis, 4)) << n;
}

TEST(Determinism, ResultsIndependentOfJobs) {
  const auto basis = builtin_basis(FixtureName::west3);
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(av_set(n, basis, 1), av_set(n, basis, 4));
    EXPECT_EQ(census(SortOp::stack, 3, n, 1), census(SortOp::stack, 3, n, 4));
  }
  const MarkedBasis expanded = expand_basis(stack_preimage_basis(P("2341")));
  EXPECT_EQ(prune_basis(expanded, 7, 1), prune_basis(expanded, 7, 4));
}
