#include <gtest/gtest.h>

#include "golden.hpp"
#include "settle/bounds.hpp"
#include "settle/patterns.hpp"

using namespace settle;

TEST(PatternOccupancy, TableAndFigureValues) {
  EXPECT_EQ(pattern_occupancy(PatternKind::brick, 4, 6), 19);
  EXPECT_EQ(pattern_occupancy(PatternKind::comb, 2, 7), 12);
  EXPECT_EQ(pattern_occupancy(PatternKind::rake, 6, 8), 28);
  EXPECT_EQ(pattern_occupancy(PatternKind::stripe, 6, 8), 30);
  EXPECT_EQ(pattern_occupancy(PatternKind::rake_stripe, 6, 8), 26);
  EXPECT_EQ(pattern_occupancy(PatternKind::check, 2, 2), 4);
  EXPECT_EQ(pattern_occupancy(PatternKind::brick, 5, 10), 38);
  EXPECT_EQ(pattern_occupancy(PatternKind::comb, 5, 10), 38);
  EXPECT_EQ(pattern_occupancy(PatternKind::check, 4, 11), 30);
}

TEST(PatternOccupancy, StripeWithOddRowsMatchesTheDrawnLayout) {
  EXPECT_EQ(pattern_occupancy(PatternKind::stripe, 7, 12), 48);
  EXPECT_EQ(generate_pattern(PatternKind::stripe, 7, 12), golden::grid("stripe_7x12.grid"));
}

TEST(PatternOccupancy, RejectsSmallGrids) {
  EXPECT_THROW(pattern_occupancy(PatternKind::brick, 1, 5), std::invalid_argument);
  EXPECT_THROW(generate_pattern(PatternKind::comb, 4, 1), std::invalid_argument);
}

TEST(GeneratePattern, MatchesFormulaAndIsMaximalUpTo40) {
  for (auto kind : all_pattern_kinds)
    for (int m = 2; m <= 40; ++m)
      for (int n = 2; n <= 40; ++n) {
        const auto c = generate_pattern(kind, m, n);
        ASSERT_EQ(occupancy(c), pattern_occupancy(kind, m, n)) << to_string(kind) << " " << m << "x" << n;
        ASSERT_TRUE(is_maximal(c)) << to_string(kind) << " " << m << "x" << n;
      }
}

TEST(GeneratePattern, FigureLayouts) {
  EXPECT_EQ(generate_pattern(PatternKind::rake_stripe, 6, 8), golden::grid("rake_stripe_6x8.grid"));
  EXPECT_EQ(generate_pattern(PatternKind::check, 4, 11), golden::grid("check_4x11.grid"));
  EXPECT_EQ(generate_pattern(PatternKind::brick, 2, 2), Configuration::full(Dims{2, 2}));
  EXPECT_EQ(occupancy(generate_pattern(PatternKind::brick, 5, 10)), 38);
}

TEST(GeneratePattern, CheckHasFullSidesAndSouthRow) {
  const auto c = generate_pattern(PatternKind::check, 4, 11);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_TRUE(c.house(i, 1));
    EXPECT_TRUE(c.house(i, 11));
  }
  EXPECT_EQ(c.row(4).count(), 11u);
}

TEST(GeneratePattern, RakeStripeSouthernRows) {
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      const auto c = generate_pattern(PatternKind::rake_stripe, m, n);
      EXPECT_EQ(static_cast<int>(c.row(m).count() + c.row(m - 1).count()), n + 2) << m << "x" << n;
    }
}

TEST(PatternOccupancy, RakeStripeEqualsLowerBound) {
  for (int m = 2; m <= 40; ++m)
    for (int n = 2; n <= 40; ++n)
      ASSERT_EQ(pattern_occupancy(PatternKind::rake_stripe, m, n), i_lower_bound(m, n)) << m << "x" << n;
}

TEST(PatternOccupancy, DensityEnvelope) {
  const std::pair<PatternKind, Rational> limits[] = {
      {PatternKind::brick, Rational(3, 4)}, {PatternKind::comb, Rational(2, 3)},
      {PatternKind::rake, Rational(1, 2)},  {PatternKind::stripe, Rational(1, 2)},
      {PatternKind::check, Rational(1, 2)},
  };
  for (const auto& [kind, d] : limits)
    for (int k = 8; k <= 200; ++k) {
      const Rational got(pattern_occupancy(kind, k, k), static_cast<std::int64_t>(k) * k);
      const Rational gap = got > d ? got - d : d - got;
      ASSERT_LE(gap, Rational(2, k)) << to_string(kind) << " k=" << k;
    }
}

TEST(PatternKindNames, RoundTripCaseInsensitive) {
  for (auto kind : all_pattern_kinds) EXPECT_EQ(parse_pattern_kind(to_string(kind)), kind);
  EXPECT_EQ(parse_pattern_kind("Rake-Stripe"), PatternKind::rake_stripe);
  EXPECT_EQ(parse_pattern_kind("BRICK"), PatternKind::brick);
  EXPECT_FALSE(parse_pattern_kind("spiral").has_value());
}

TEST(GreedyComplete, ProducesMaximalSupersets) {
  const auto start = golden::grid("permissible_5x4.grid");
  const auto done = greedy_complete(start);
  EXPECT_TRUE(is_maximal(done));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 4; ++j)
      if (start.house(i, j)) EXPECT_TRUE(done.house(i, j));
  EXPECT_THROW(greedy_complete(golden::grid("impermissible_5x4.grid")), std::invalid_argument);
}

TEST(BrickComb, FigureOccupancies) {
  const auto best = brick_comb_best(5, 10, 4);
  EXPECT_EQ(occupancy(best.config), 39);
  EXPECT_TRUE(is_maximal(best.config));
  EXPECT_EQ(best.spec.total_width(), 10);
  EXPECT_EQ(occupancy(brick_comb_best(5, 10, 1).config), 38);
  EXPECT_GE(occupancy(brick_comb_best(2, 4, 2).config), pattern_occupancy(PatternKind::brick, 2, 4));
}

TEST(BrickComb, BestIsAtLeastBothPatterns) {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 12; ++n) {
      const auto best = brick_comb_best(m, n, 3);
      ASSERT_TRUE(is_maximal(best.config));
      ASSERT_GE(occupancy(best.config), pattern_occupancy(PatternKind::brick, m, n)) << m << "x" << n;
      ASSERT_GE(occupancy(best.config), pattern_occupancy(PatternKind::comb, m, n)) << m << "x" << n;
    }
}

TEST(BrickComb, SegmentsValidate) {
  EXPECT_THROW(build_segments(3, SegmentSpec{{{SegmentKind::brick_block, 1}}}), std::invalid_argument);
  EXPECT_THROW(brick_comb_best(3, 5, 0), std::invalid_argument);
  const auto built = build_segments(5, SegmentSpec{{{SegmentKind::brick_block, 6}, {SegmentKind::comb_block, 4}}});
  ASSERT_TRUE(built.has_value());
  EXPECT_TRUE(is_maximal(*built));
}
