#include "tetraposet/stats.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "tetraposet/bijections.hpp"
#include "tetraposet/formulas.hpp"

namespace tetraposet {
namespace {

StaircaseArray make_yplus(int n, std::vector<std::vector<int>> rows) {
  StaircaseArray a;
  a.n = n;
  a.variant = ArrayVariant::Yplus;
  a.rows = std::move(rows);
  return a;
}

Asm make_asm(std::vector<std::vector<int>> rows) {
  Asm m;
  m.n = static_cast<int>(rows.size());
  m.a = std::move(rows);
  return m;
}

// Every statistic of one five-row array, worked by hand.
TEST(Stats, PinnedFiveRowExample) {
  Asm m = make_asm({{0, 0, 1, 0, 0},
                    {0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0},
                    {1, 0, -1, 0, 1},
                    {0, 0, 1, 0, 0}});
  StaircaseArray a = asm_to_yplus(m);
  EXPECT_EQ(a.rows, (std::vector<std::vector<int>>{
                        {1, 1, 2, 2, 3}, {2, 2, 3, 3}, {3, 4, 4}, {4, 5}, {5}}));

  ArrayStats s = compute_stats(a);
  EXPECT_EQ(s.n, 5);
  EXPECT_EQ(s.e_total, 4);
  EXPECT_EQ(s.n_total, 1);
  EXPECT_EQ(s.e_row, (std::vector<long long>{2, 0, 1, 1, 0}));
  ASSERT_EQ(s.e_diag.size(), 6u);
  EXPECT_EQ(s.e_diag[2], 0);
  EXPECT_EQ(s.e_diag[3], 1);
  EXPECT_EQ(s.e_diag[4], 1);
  EXPECT_EQ(s.e_diag[5], 2);
  EXPECT_EQ(s.c_val, (std::vector<long long>{0, 2, 4, 4, 3, 2}));
  EXPECT_EQ(s.e_rowval[0][2], 1);
  EXPECT_EQ(s.e_rowval[0][3], 1);
  EXPECT_EQ(s.e_rowval[2][4], 1);
  EXPECT_EQ(s.e_rowval[3][5], 1);
  EXPECT_EQ(s.c_rowval[0][1], 2);
  EXPECT_EQ(s.c_rowval[1][3], 2);
  EXPECT_EQ(s.c_rowval[4][5], 1);

  EXPECT_EQ(inversion_number(m), 5);
  EXPECT_EQ(num_negative_ones(m), 1);
  EXPECT_EQ(inversion_number(m), s.e_total + s.n_total);
}

TEST(Stats, InversionAndColumnIdentities) {
  for (int n = 1; n <= 4; ++n) {
    for (const Asm& m : enumerate_asms(n)) {
      ArrayStats s = compute_stats(asm_to_yplus(m));
      EXPECT_EQ(inversion_number(m), s.e_total + s.n_total);
      for (int j = 1; j <= n; ++j) {
        long long sum = 0;
        for (int i = 1; i <= n; ++i) sum += (n - i) * m.a[i - 1][j - 1];
        EXPECT_EQ(s.c_val[j] - 1, sum) << n << " col " << j;
      }
    }
  }
}

TEST(Stats, RejectsMalformedInput) {
  EXPECT_THROW(compute_stats(make_yplus(2, {{1, 3}, {2}})), std::invalid_argument);
  EXPECT_THROW(inversion_number(make_asm({{1, 1}, {0, 0}})), std::invalid_argument);
  StaircaseArray x;
  x.n = 2;
  x.variant = ArrayVariant::X;
  x.rows = {{0}};
  EXPECT_THROW(compute_stats(x), std::invalid_argument);
}

TEST(Shuffles, NormalizeAndPinnedFiber) {
  // Sorting rows turns a {r,b,g} array into its {r,b,g,y} representative.
  StaircaseArray a = make_yplus(3, {{1, 2, 1}, {2, 2}, {3}});
  ASSERT_TRUE(validate_array(a, ColorSet::from_string("rbg")));
  StaircaseArray norm = normalize_rows(a);
  EXPECT_EQ(norm.rows, (std::vector<std::vector<int>>{{1, 1, 2}, {2, 2}, {3}}));
  EXPECT_TRUE(validate_array(norm, ColorSet::from_string("rbgy")));

  std::vector<StaircaseArray> fiber = row_shuffles(norm);
  ASSERT_EQ(fiber.size(), 2u);
  EXPECT_EQ(fiber[0].rows, (std::vector<std::vector<int>>{{1, 1, 2}, {2, 2}, {3}}));
  EXPECT_EQ(fiber[1].rows, (std::vector<std::vector<int>>{{1, 2, 1}, {2, 2}, {3}}));
  EXPECT_EQ(shuffle_fiber_size(compute_stats(norm)), Int(2));
}

TEST(Shuffles, FibersPartitionTheStrictArrays) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<StaircaseArray> strict =
        enumerate_yplus(ColorSet::from_string("rbg"), n);
    std::vector<StaircaseArray> sorted =
        enumerate_yplus(ColorSet::from_string("rbgy"), n);
    std::set<std::vector<std::vector<int>>> seen;
    Int covered = 0;
    for (const StaircaseArray& norm : sorted) {
      std::vector<StaircaseArray> fiber = row_shuffles(norm);
      EXPECT_EQ(Int(fiber.size()), shuffle_fiber_size(compute_stats(norm)));
      bool contains_base = false;
      for (const StaircaseArray& f : fiber) {
        EXPECT_TRUE(seen.insert(f.rows).second);
        EXPECT_EQ(normalize_rows(f).rows, norm.rows);
        contains_base = contains_base || f.rows == norm.rows;
      }
      EXPECT_TRUE(contains_base);
      covered += Int(fiber.size());
    }
    EXPECT_EQ(covered, Int(1) << (n * (n - 1) / 2)) << n;
    EXPECT_EQ(seen.size(), strict.size()) << n;
  }
}

TEST(Shuffles, FiberSizeMultisetAtN3) {
  std::map<size_t, int> sizes;
  for (const StaircaseArray& norm :
       enumerate_yplus(ColorSet::from_string("rbgy"), 3)) {
    ++sizes[row_shuffles(norm).size()];
  }
  EXPECT_EQ(sizes, (std::map<size_t, int>{{1, 6}, {2, 1}}));
}

TEST(TsscppTournaments, PinnedRejectAndCounts) {
  Tournament t;
  t.n = 3;
  t.upsets = {{1, 2}};
  // Player 2's lone upset of 1 must be matched by one from player 3.
  EXPECT_EQ(upsets_in_range(t, 2, 1, 1), 1);
  EXPECT_EQ(upsets_in_range(t, 3, 1, 2), 0);
  EXPECT_FALSE(is_tsscpp_tournament(t));

  t.upsets = {{1, 2}, {1, 3}};
  EXPECT_TRUE(is_tsscpp_tournament(t));

  for (int n = 1; n <= 5; ++n) {
    Int count = 0;
    for (const Tournament& tt : enumerate_tournaments(n)) {
      if (is_tsscpp_tournament(tt)) ++count;
    }
    EXPECT_EQ(count, asm_count(n)) << n;
  }
}

TEST(TsscppTournaments, MatchesWeaklyIncreasingRows) {
  for (int n = 2; n <= 4; ++n) {
    for (const Tournament& t : enumerate_tournaments(n)) {
      StaircaseArray a = tournament_to_yplus(t);
      bool weak = true;
      for (const std::vector<int>& row : a.rows)
        for (size_t j = 1; j < row.size(); ++j)
          if (row[j] < row[j - 1]) weak = false;
      EXPECT_EQ(is_tsscpp_tournament(t), weak) << n;
    }
  }
}

}  // namespace
}  // namespace tetraposet
