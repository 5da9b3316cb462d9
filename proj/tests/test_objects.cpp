#include "tetraposet/objects.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "tetraposet/formulas.hpp"

namespace tetraposet {
namespace {

Asm make_asm(std::vector<std::vector<int>> rows) {
  Asm m;
  m.n = static_cast<int>(rows.size());
  m.a = std::move(rows);
  return m;
}

TEST(AsmValidation, AcceptsPermutationAndSignedMatrices) {
  EXPECT_TRUE(is_asm(make_asm({{1}})));
  EXPECT_TRUE(is_asm(make_asm({{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_asm(make_asm({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})));
  // Row with a -1 before any +1.
  EXPECT_FALSE(is_asm(make_asm({{-1, 1, 0}, {1, 0, 0}, {1, 0, 0}})));
  // Row sums to 2.
  EXPECT_FALSE(is_asm(make_asm({{1, 1}, {0, 0}})));
  // Entry outside {-1, 0, 1}.
  EXPECT_FALSE(is_asm(make_asm({{2, -1}, {-1, 2}})));
  std::string why;
  EXPECT_FALSE(is_asm(make_asm({{0, 1}, {1, 1}}), &why));
  EXPECT_FALSE(why.empty());
}

TEST(AsmEnumeration, RobbinsSequence) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(Int(enumerate_asms(n).size()), asm_count(n)) << n;
  std::set<std::vector<std::vector<int>>> seen;
  for (const Asm& m : enumerate_asms(4)) {
    EXPECT_TRUE(is_asm(m));
    EXPECT_TRUE(seen.insert(m.a).second);
  }
}

TEST(MonotoneTriangles, ValidationAndCounts) {
  MonotoneTriangle t;
  t.n = 3;
  t.rows = {{2}, {1, 3}, {1, 2, 3}};
  EXPECT_TRUE(is_monotone_triangle(t));
  t.rows = {{2}, {3, 1}, {1, 2, 3}};  // row not increasing
  EXPECT_FALSE(is_monotone_triangle(t));
  t.rows = {{2}, {1, 3}, {1, 2, 4}};  // bottom row must be 1..n
  EXPECT_FALSE(is_monotone_triangle(t));
  t.rows = {{3}, {1, 2}, {1, 2, 3}};  // interlacing broken: 3 > 2
  EXPECT_FALSE(is_monotone_triangle(t));
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(Int(enumerate_monotone(n).size()), asm_count(n)) << n;
}

TEST(PlanePartitions, ValidationBasics) {
  PlanePartition p;
  p.box = {2, 2, 3};
  p.heights = {{3, 1}, {2, 0}};
  EXPECT_TRUE(is_plane_partition(p));
  p.heights = {{3, 1}, {2, 4}};  // exceeds the box
  EXPECT_FALSE(is_plane_partition(p));
  p.heights = {{1, 3}, {0, 0}};  // rows must weakly decrease
  EXPECT_FALSE(is_plane_partition(p));
  p.heights = {{3, 1}};  // wrong shape
  EXPECT_FALSE(is_plane_partition(p));
}

TEST(PlanePartitions, SymmetryPredicates) {
  PlanePartition p;
  p.box = {2, 2, 2};
  p.heights = {{2, 1}, {1, 0}};
  EXPECT_TRUE(is_totally_symmetric(p));
  EXPECT_TRUE(is_self_complementary(p));
  p.heights = {{2, 2}, {1, 0}};
  EXPECT_FALSE(is_totally_symmetric(p));  // transpose differs
  p.heights = {{2, 2}, {2, 2}};
  EXPECT_TRUE(is_totally_symmetric(p));
  EXPECT_FALSE(is_self_complementary(p));
}

TEST(Tspp, EnumerationMatchesProduct) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<PlanePartition> all = enumerate_tspp(n);
    EXPECT_EQ(Int(all.size()), tspp_count(n)) << n;
    for (const PlanePartition& p : all) EXPECT_TRUE(is_tspp(p, n));
  }
}

TEST(DyckPaths, ValidationAndCatalanCounts) {
  EXPECT_TRUE(is_dyck(DyckPath{""}));
  EXPECT_TRUE(is_dyck(DyckPath{"UD"}));
  EXPECT_TRUE(is_dyck(DyckPath{"UUDUDD"}));
  EXPECT_FALSE(is_dyck(DyckPath{"DU"}));    // dips below zero
  EXPECT_FALSE(is_dyck(DyckPath{"UUD"}));   // does not return
  EXPECT_FALSE(is_dyck(DyckPath{"UXDD"}));  // bad letter
  for (int n = 1; n <= 6; ++n) {
    std::vector<DyckPath> all = enumerate_dyck(n);
    EXPECT_EQ(Int(all.size()), catalan(n)) << n;
    for (const DyckPath& d : all) {
      EXPECT_TRUE(is_dyck(d));
      EXPECT_EQ(static_cast<int>(d.steps.size()), 2 * n);
    }
  }
}

TEST(Tournaments, UpsetsAndCounts) {
  Tournament t;
  t.n = 3;
  t.upsets = {{1, 2}};
  EXPECT_TRUE(is_tournament(t));
  EXPECT_TRUE(t.upset(1, 2));
  EXPECT_FALSE(t.upset(1, 3));
  t.upsets = {{2, 1}};  // pairs must be increasing
  EXPECT_FALSE(is_tournament(t));
  t.upsets = {{1, 4}};  // out of range
  EXPECT_FALSE(is_tournament(t));
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(Int(enumerate_tournaments(n).size()),
              Int(1) << (n * (n - 1) / 2))
        << n;
}

TEST(TournamentTableaux, RowConditions) {
  TournamentTableau t;
  t.n = 4;
  t.rows = {{1, 3, 4}, {2, 3}, {4}};
  EXPECT_TRUE(is_tournament_tableau(t));
  t.rows = {{3, 1, 4}, {2, 3}, {4}};  // rows must increase
  EXPECT_FALSE(is_tournament_tableau(t));
  t.rows = {{1, 3}, {2, 3}, {4}};  // row i needs n-i entries
  EXPECT_FALSE(is_tournament_tableau(t));
  t.rows = {{1, 3, 4}, {1, 3}, {4}};  // row i entries lie in {i} U (i, n]
  EXPECT_FALSE(is_tournament_tableau(t));
}

TEST(Ssyt, StaircaseSemistandardCounts) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<StaircaseArray> all = enumerate_ssyt(n);
    EXPECT_EQ(Int(all.size()), Int(1) << (n * (n - 1) / 2)) << n;
    for (const StaircaseArray& t : all) EXPECT_TRUE(is_ssyt(t));
  }
}

TEST(Ssyt, ValidatorRequiresStrictColumns) {
  StaircaseArray t;
  t.n = 3;
  t.variant = ArrayVariant::Y;
  t.rows = {{1, 2}, {2}};
  EXPECT_TRUE(is_ssyt(t));
  t.rows = {{2, 2}, {2}};  // column must strictly increase
  EXPECT_FALSE(is_ssyt(t));
  t.rows = {{2, 1}, {3}};  // row must weakly increase
  EXPECT_FALSE(is_ssyt(t));
}

}  // namespace
}  // namespace tetraposet
