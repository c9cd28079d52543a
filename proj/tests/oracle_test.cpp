#include <gtest/gtest.h>

#include "permsort/fixtures.hpp"
#include "permsort/oracle.hpp"
#include "test_oracles.hpp"

using namespace permsort;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
Pattern cl(std::string_view s) { return Pattern::classical(P(s)); }

} // namespace

TEST(AvSet, Examples) {
  const std::vector<Pattern> b{cl("231")};
  const std::vector<Permutation> expected{P("123"), P("132"), P("213"), P("312"), P("321")};
  EXPECT_EQ(av_set(3, b), expected);
  EXPECT_EQ(av_count(4, b), 14u);
  EXPECT_EQ(av_count(4, builtin_basis(FixtureName::west2)), 22u);
  EXPECT_EQ(av_count(0, b), 1u);
}

TEST(AvSet, PreimageOfSortedClass) {
  const std::vector<Pattern> b21{cl("21")}, b231{cl("231")};
  EXPECT_EQ(preimage_av_set(3, SortOp::stack, 1, b21), av_set(3, b231));
  EXPECT_THROW(preimage_av_set(3, SortOp::stack, 0, b21), InvalidInput);
}

TEST(Verify, KnuthPasses) {
  const std::vector<Pattern> p{cl("21")}, cand{cl("231")};
  const auto report = verify_preimage(p, cand, SortOp::stack, 1, 8);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.rows.size(), 8u);
  for (const auto &row : report.rows) {
    EXPECT_EQ(row.av_count, oracle::catalan(row.n));
    EXPECT_EQ(row.preimage_count, row.av_count);
  }
  EXPECT_EQ(report.checked_n(), (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Verify, WrongBasisGivesLeastCounterexample) {
  const std::vector<Pattern> p{cl("231")}, cand{cl("2341")};
  const auto report = verify_preimage(p, cand, SortOp::stack, 1, 5);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.counterexample->perm, P("3241"));
  EXPECT_EQ(report.counterexample->reason, FailureReason::in_av_but_bad_image);
  EXPECT_TRUE(report.rows[2].equal);
  EXPECT_FALSE(report.rows[3].equal);
}

TEST(Verify, ReportsBasisThatIsTooStrong) {
  const std::vector<Pattern> p{cl("21")}, cand{cl("21")};
  const auto report = verify_preimage(p, cand, SortOp::stack, 1, 3);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.counterexample->perm, P("21"));
  EXPECT_EQ(report.counterexample->reason, FailureReason::image_good_but_contains_basis);
  EXPECT_EQ(to_string(FailureReason::image_good_but_contains_basis), "image-good-but-contains-basis");
}

TEST(Verify, BoundsChecked) {
  const std::vector<Pattern> p{cl("21")};
  EXPECT_THROW(verify_preimage(p, p, SortOp::stack, 1, 0), InvalidBound);
  EXPECT_THROW(verify_preimage(p, p, SortOp::stack, 0, 3), InvalidInput);
}

TEST(Census, StackSortable) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(census(SortOp::stack, 1, n), oracle::catalan(n));
}

TEST(Census, TwoAndThreePasses) {
  const std::uint64_t two[] = {1, 2, 6, 22, 91, 408, 1938, 9614};
  const std::uint64_t three[] = {1, 2, 6, 24, 114, 606, 3494, 21426};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(census(SortOp::stack, 2, n), two[n - 1]);
    EXPECT_EQ(census(SortOp::stack, 3, n), three[n - 1]);
  }
}

TEST(Census, OneBubblePass) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(census(SortOp::bubble, 1, n), 1u << (n - 1));
  EXPECT_THROW(census(SortOp::bubble, 1, 0), InvalidInput);
}

TEST(Census, IndependentOfJobs) {
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(census(SortOp::stack, 2, n, 1), census(SortOp::stack, 2, n, 4));
}

TEST(ReferenceCount, SmallValues) {
  EXPECT_EQ(reference_count(ReferenceClass::catalan, 8), 1430);
  EXPECT_EQ(reference_count(ReferenceClass::west2, 9), 49335);
  EXPECT_EQ(reference_count(ReferenceClass::west2, 1), 1);
  EXPECT_THROW(reference_count(ReferenceClass::west2, 0), InvalidInput);
}

TEST(ReferenceCount, LargeValuesExact) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(reference_count(ReferenceClass::west2, n), oracle::west2_legendre(n)) << n;
  }
  EXPECT_EQ(reference_count(ReferenceClass::catalan, 30), BigInt("3814986502092304"));
}

TEST(ReferenceCount, ClassNames) {
  EXPECT_EQ(parse_reference_class("catalan"), ReferenceClass::catalan);
  EXPECT_EQ(parse_reference_class("west2"), ReferenceClass::west2);
  EXPECT_THROW(parse_reference_class("west4"), InvalidInput);
}

TEST(Builtin, EveryFixtureVerifies) {
  for (FixtureName name : all_fixtures) {
    const FixtureTarget t = fixture_target(name);
    const std::vector<Pattern> p{Pattern::classical(t.target)};
    const auto basis = builtin_basis(name);
    const int upto = name == FixtureName::west3 ? 7 : 8;
    const auto report = verify_preimage(p, basis, t.op, t.passes, upto, 4);
    EXPECT_TRUE(report.passed()) << to_string(name) << ": "
                                 << (report.counterexample ? to_string(report.counterexample->perm)
                                                           : std::string());
  }
}

TEST(Builtin, Names) {
  for (FixtureName name : all_fixtures)
    EXPECT_EQ(parse_fixture_name(to_string(name)), name);
  EXPECT_THROW(parse_fixture_name("west4"), InvalidInput);
}

TEST(Verify, IndependentOfJobs) {
  const std::vector<Pattern> p{cl("231")}, cand{cl("2341")};
  for (int n : {4, 6}) {
    const auto a = verify_preimage(p, cand, SortOp::stack, 1, n, 1);
    const auto b = verify_preimage(p, cand, SortOp::stack, 1, n, 4);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      EXPECT_EQ(a.rows[i].av_count, b.rows[i].av_count);
      EXPECT_EQ(a.rows[i].preimage_count, b.rows[i].preimage_count);
    }
    EXPECT_EQ(a.counterexample->perm, b.counterexample->perm);
  }
}
