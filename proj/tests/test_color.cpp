#include "tetraposet/color.hpp"

#include <gtest/gtest.h>

#include <map>
#include <stdexcept>
#include <tuple>

namespace tetraposet {
namespace {

TEST(ColorSet, ParsingAndCanonicalOrder) {
  ColorSet s = ColorSet::from_string("byog");
  EXPECT_EQ(s.to_string(), "bgoy");  // canonical r < b < g < o < y < s
  EXPECT_EQ(s.size(), 4);
  EXPECT_TRUE(s.contains(Color::Blue));
  EXPECT_FALSE(s.contains(Color::Red));
  EXPECT_EQ(ColorSet::from_string("").size(), 0);
  EXPECT_EQ(ColorSet::all().to_string(), "rbgoys");
  EXPECT_THROW(ColorSet::from_string("bxg"), std::invalid_argument);
}

TEST(ColorSet, MaskRoundTrip) {
  for (int mask = 0; mask < 64; ++mask) {
    ColorSet s = ColorSet::from_mask(static_cast<uint8_t>(mask));
    EXPECT_EQ(s.mask(), mask);
    EXPECT_EQ(ColorSet::from_string(s.to_string()).mask(), mask);
  }
}

// The closure rules: {r,b} forces g, {o,s} forces b, {s,y} forces g,
// {r,o} forces y. A set is admissible iff applying them adds nothing.
TEST(Admissibility, FortyAdmissibleSets) {
  int admissible = 0;
  for (int mask = 0; mask < 64; ++mask) {
    ColorSet s = ColorSet::from_mask(static_cast<uint8_t>(mask));
    ColorSet c = admissible_closure(s);
    EXPECT_TRUE(s.subset_of(c));
    EXPECT_EQ(admissible_closure(c), c) << "closure must be idempotent";
    EXPECT_EQ(is_admissible(s), s == c);
    if (is_admissible(s)) ++admissible;
  }
  EXPECT_EQ(admissible, 40);
  EXPECT_EQ(all_admissible().size(), 40u);
}

TEST(Admissibility, ClosureExamples) {
  EXPECT_EQ(admissible_closure(ColorSet::from_string("rb")).to_string(), "rbg");
  EXPECT_EQ(admissible_closure(ColorSet::from_string("os")).to_string(), "bos");
  EXPECT_EQ(admissible_closure(ColorSet::from_string("sy")).to_string(), "gys");
  EXPECT_EQ(admissible_closure(ColorSet::from_string("ro")).to_string(), "roy");
  // Closing {r,b,o} needs two rounds: g from {r,b}, then y from {r,o}.
  EXPECT_EQ(admissible_closure(ColorSet::from_string("rbo")).to_string(), "rbgoy");
}

TEST(Duality, Involution) {
  EXPECT_EQ(dual_color(Color::Red), Color::Silver);
  EXPECT_EQ(dual_color(Color::Silver), Color::Red);
  EXPECT_EQ(dual_color(Color::Blue), Color::Yellow);
  EXPECT_EQ(dual_color(Color::Yellow), Color::Blue);
  EXPECT_EQ(dual_color(Color::Green), Color::Green);
  EXPECT_EQ(dual_color(Color::Orange), Color::Orange);
  for (int mask = 0; mask < 64; ++mask) {
    ColorSet s = ColorSet::from_mask(static_cast<uint8_t>(mask));
    EXPECT_EQ(dual_colors(dual_colors(s)), s);
    EXPECT_EQ(is_admissible(s), is_admissible(dual_colors(s)));
  }
}

TEST(Classification, PartitionOfTheFortySets) {
  std::map<TheoremClass, int> sizes;
  for (ColorSet s : all_admissible()) sizes[classify(s)]++;
  EXPECT_EQ(sizes[TheoremClass::Empty], 1);
  EXPECT_EQ(sizes[TheoremClass::Single], 6);
  EXPECT_EQ(sizes[TheoremClass::TwoOpposite], 3);
  EXPECT_EQ(sizes[TheoremClass::TwoAdjacent], 8);
  EXPECT_EQ(sizes[TheoremClass::ThreeNice], 9);
  EXPECT_EQ(sizes[TheoremClass::ThreeExceptional], 2);
  EXPECT_EQ(sizes[TheoremClass::Four], 7);
  EXPECT_EQ(sizes[TheoremClass::FiveA], 2);
  EXPECT_EQ(sizes[TheoremClass::FiveB], 1);
  EXPECT_EQ(sizes[TheoremClass::Six], 1);
}

TEST(Classification, KnownRepresentatives) {
  EXPECT_EQ(classify(ColorSet::from_string("")), TheoremClass::Empty);
  EXPECT_EQ(classify(ColorSet::from_string("o")), TheoremClass::Single);
  EXPECT_EQ(classify(ColorSet::from_string("go")), TheoremClass::TwoOpposite);
  EXPECT_EQ(classify(ColorSet::from_string("rs")), TheoremClass::TwoOpposite);
  EXPECT_EQ(classify(ColorSet::from_string("by")), TheoremClass::TwoOpposite);
  EXPECT_EQ(classify(ColorSet::from_string("bg")), TheoremClass::TwoAdjacent);
  EXPECT_EQ(classify(ColorSet::from_string("gy")), TheoremClass::TwoAdjacent);
  EXPECT_EQ(classify(ColorSet::from_string("gyo")), TheoremClass::ThreeNice);
  EXPECT_EQ(classify(ColorSet::from_string("rgy")), TheoremClass::ThreeExceptional);
  EXPECT_EQ(classify(ColorSet::from_string("bgs")), TheoremClass::ThreeExceptional);
  EXPECT_EQ(classify(ColorSet::from_string("bgoy")), TheoremClass::Four);
  EXPECT_EQ(classify(ColorSet::from_string("rgoy")), TheoremClass::Four);
  EXPECT_EQ(classify(ColorSet::from_string("bgoys")), TheoremClass::FiveA);
  EXPECT_EQ(classify(ColorSet::from_string("rbgoy")), TheoremClass::FiveA);
  EXPECT_EQ(classify(ColorSet::from_string("rbgys")), TheoremClass::FiveB);
  EXPECT_EQ(classify(ColorSet::from_string("rbgoys")), TheoremClass::Six);
  EXPECT_THROW(classify(ColorSet::from_string("rb")), std::invalid_argument);
}

// The two-adjacent theorem covers four direct sets; their duals obey the
// reversed-coefficient version.
TEST(Classification, TwoAdjacentDualSplit) {
  for (const char* direct : {"bg", "bs", "oy", "gs"})
    EXPECT_FALSE(two_adjacent_is_dual(ColorSet::from_string(direct))) << direct;
  for (const char* dual : {"gy", "ry", "bo", "rg"})
    EXPECT_TRUE(two_adjacent_is_dual(ColorSet::from_string(dual))) << dual;
}

TEST(Colors, MovesMatchVectorIdentities) {
  auto [r1, r2, r3] = color_move(Color::Red);
  auto [b1, b2, b3] = color_move(Color::Blue);
  auto [g1, g2, g3] = color_move(Color::Green);
  auto [o1, o2, o3] = color_move(Color::Orange);
  auto [y1, y2, y3] = color_move(Color::Yellow);
  auto [s1, s2, s3] = color_move(Color::Silver);
  EXPECT_EQ(std::make_tuple(r1, r2, r3), std::make_tuple(1, 0, 0));
  EXPECT_EQ(std::make_tuple(g1, g2, g3), std::make_tuple(0, 1, 0));
  EXPECT_EQ(std::make_tuple(y1, y2, y3), std::make_tuple(0, 0, 1));
  // b = g - r, o = y - r, s = g - y
  EXPECT_EQ(std::make_tuple(b1, b2, b3), std::make_tuple(g1 - r1, g2 - r2, g3 - r3));
  EXPECT_EQ(std::make_tuple(o1, o2, o3), std::make_tuple(y1 - r1, y2 - r2, y3 - r3));
  EXPECT_EQ(std::make_tuple(s1, s2, s3), std::make_tuple(g1 - y1, g2 - y2, g3 - y3));
}

}  // namespace
}  // namespace tetraposet
