#include "tetraposet/array.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "tetraposet/ideal.hpp"
#include "tetraposet/poset.hpp"
#include "tetraposet/qpoly.hpp"

namespace tetraposet {
namespace {

StaircaseArray make(int n, ArrayVariant v, std::vector<std::vector<int>> rows) {
  StaircaseArray a;
  a.n = n;
  a.variant = v;
  a.rows = std::move(rows);
  return a;
}

TEST(Shape, WellShapedRules) {
  EXPECT_TRUE(well_shaped(make(3, ArrayVariant::Y, {{1, 2}, {2}})));
  EXPECT_FALSE(well_shaped(make(3, ArrayVariant::Y, {{1, 2, 3}, {2}})));
  EXPECT_TRUE(well_shaped(make(3, ArrayVariant::Yplus, {{1, 1, 2}, {2, 2}, {3}})));
  // Column 0 of a Yplus array is pinned to (1, 2, ..., n).
  EXPECT_FALSE(well_shaped(make(3, ArrayVariant::Yplus, {{2, 1, 2}, {2, 2}, {3}})));
  EXPECT_TRUE(well_shaped(make(1, ArrayVariant::Y, {})));
}

// The validator fixtures: one Y_3 array against three different color sets.
TEST(Validate, PinnedExamples) {
  StaircaseArray inc = make(3, ArrayVariant::Y, {{1, 2}, {2}});
  EXPECT_TRUE(validate_array(inc, ColorSet::from_string("rgoy")));

  StaircaseArray dec = make(3, ArrayVariant::Y, {{2, 1}, {2}});
  std::string why;
  EXPECT_FALSE(validate_array(dec, ColorSet::from_string("gy"), &why));
  EXPECT_FALSE(why.empty());
  EXPECT_TRUE(validate_array(dec, ColorSet::from_string("rbgs")));
}

TEST(Validate, BoundsAreChecked) {
  EXPECT_FALSE(validate_array(make(3, ArrayVariant::Y, {{0, 2}, {2}}),
                              ColorSet::from_string("g")));  // y >= i
  EXPECT_FALSE(validate_array(make(3, ArrayVariant::Y, {{1, 4}, {2}}),
                              ColorSet::from_string("g")));  // y <= i+j
  EXPECT_FALSE(validate_array(make(3, ArrayVariant::X, {{0, -1}, {1}}),
                              ColorSet::from_string("g")));  // x >= 0
  EXPECT_TRUE(validate_array(make(3, ArrayVariant::X, {{1, 2}, {1}}),
                             ColorSet::from_string("g")));
}

// The seven Y_3 arrays of the ASM class, pinned entry by entry.
TEST(Enumerate, SevenAsmClassArraysAtN3) {
  std::vector<StaircaseArray> all =
      enumerate_yplus(ColorSet::from_string("bgoy"), 3);
  ASSERT_EQ(all.size(), 7u);
  std::set<std::vector<std::vector<int>>> got;
  for (const StaircaseArray& a : all) got.insert(yplus_to_y(a).rows);
  std::set<std::vector<std::vector<int>>> want = {
      {{1, 1}, {2}}, {{1, 1}, {3}}, {{1, 2}, {2}}, {{1, 2}, {3}},
      {{2, 2}, {3}}, {{1, 3}, {3}}, {{2, 3}, {3}}};
  EXPECT_EQ(got, want);
}

TEST(Enumerate, RowMajorLexOrder) {
  std::vector<StaircaseArray> all =
      enumerate_yplus(ColorSet::from_string("rbg"), 4);
  for (size_t i = 1; i < all.size(); ++i) {
    std::vector<int> prev, cur;
    for (const auto& r : all[i - 1].rows) prev.insert(prev.end(), r.begin(), r.end());
    for (const auto& r : all[i].rows) cur.insert(cur.end(), r.begin(), r.end());
    EXPECT_LT(prev, cur);
  }
}

TEST(Conversions, XYAndYplusRoundTrips) {
  for (int n = 1; n <= 4; ++n)
    for (const StaircaseArray& a : enumerate_x(ColorSet::from_string("bgoy"), n)) {
      StaircaseArray y = x_to_y(a);
      EXPECT_EQ(y_to_x(y).rows, a.rows);
      StaircaseArray yp = y_to_yplus(y);
      EXPECT_EQ(yplus_to_y(yp).rows, y.rows);
      EXPECT_EQ(array_weight(a), array_weight(y));
      EXPECT_EQ(array_weight(y), array_weight(yp));
    }
  EXPECT_THROW(yplus_to_y(make(2, ArrayVariant::Yplus, {{2, 1}, {2}})),
               std::invalid_argument);
}

// The X-form and Y-form inequality lists define the same sets: check every
// bounded X array against every admissible color set in both forms.
TEST(Conversions, XAndYValidityAgree) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<StaircaseArray> shapes;
    StaircaseArray seed;
    seed.n = n;
    seed.variant = ArrayVariant::X;
    seed.rows.resize(n - 1);
    for (int i = 1; i <= n - 1; ++i) seed.rows[i - 1].assign(n - i, 0);
    shapes.push_back(seed);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - i; ++j) {
        std::vector<StaircaseArray> grown;
        for (StaircaseArray a : shapes)
          for (int v = 0; v <= j; ++v) {
            a.rows[i - 1][j - 1] = v;
            grown.push_back(a);
          }
        shapes.swap(grown);
      }
    for (ColorSet s : all_admissible())
      for (const StaircaseArray& x : shapes)
        EXPECT_EQ(validate_array(x, s), validate_array(x_to_y(x), s))
            << "n=" << n << " S=" << s.to_string();
  }
}

// Arrays encode order ideals: counts, weights, and the whole graded family
// agree with the ideal engine for every admissible set containing green.
TEST(IdealEncoding, BijectionWithIdeals) {
  for (int n = 1; n <= 4; ++n) {
    ColoredPoset tetra = build_tetra(n);
    for (ColorSet s : all_admissible()) {
      if (!s.contains(Color::Green)) continue;
      ColoredPoset p = restrict(tetra, s);
      std::set<std::vector<std::vector<int>>> from_ideals;
      QPolynomial by_weight;
      for (const OrderIdeal& ideal : enumerate_ideals(p)) {
        StaircaseArray x = ideal_to_x(ideal, tetra, s);
        EXPECT_EQ(array_weight(x), ideal.size);
        EXPECT_EQ(x_to_ideal(x, tetra, s).bits.to_hex(), ideal.bits.to_hex());
        from_ideals.insert(y_to_yplus(x_to_y(x)).rows);
        by_weight += QPolynomial::monomial(1, ideal.size);
      }
      std::set<std::vector<std::vector<int>>> direct;
      QPolynomial direct_weight;
      for (const StaircaseArray& a : enumerate_yplus(s, n)) {
        direct.insert(a.rows);
        direct_weight += QPolynomial::monomial(1, array_weight(a));
      }
      EXPECT_EQ(from_ideals, direct) << "n=" << n << " S=" << s.to_string();
      EXPECT_EQ(by_weight, direct_weight);
      EXPECT_EQ(by_weight, rank_gf(p));
    }
  }
}

TEST(IdealEncoding, CountsMatchAtN5) {
  ColoredPoset tetra = build_tetra(5);
  for (ColorSet s : all_admissible()) {
    if (!s.contains(Color::Green)) continue;
    Int count = count_ideals_fast(restrict(tetra, s));
    EXPECT_EQ(Int(enumerate_yplus(s, 5).size()), count) << s.to_string();
  }
}

TEST(Accessors, AtUsesOneBasedRowsAndVariantColumns) {
  StaircaseArray yp = make(3, ArrayVariant::Yplus, {{1, 1, 2}, {2, 3}, {3}});
  EXPECT_EQ(yp.at(1, 0), 1);
  EXPECT_EQ(yp.at(1, 2), 2);
  EXPECT_EQ(yp.at(2, 1), 3);
  StaircaseArray y = yplus_to_y(yp);
  EXPECT_EQ(y.at(1, 1), 1);
  EXPECT_EQ(y.at(1, 2), 2);
}

}  // namespace
}  // namespace tetraposet
