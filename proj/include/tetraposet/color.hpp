#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tetraposet {

// The six edge colors, in the canonical order r < b < g < o < y < s.
// Each color is a unit move on coordinates (c1,c2,c3):
//   r = ( 1, 0, 0)   b = (-1, 1, 0)   g = ( 0, 1, 0)
//   o = (-1, 0, 1)   y = ( 0, 0, 1)   s = ( 0, 1,-1)
enum class Color : std::uint8_t { Red, Blue, Green, Orange, Yellow, Silver };

inline constexpr int kNumColors = 6;

char color_char(Color c);
Color color_from_char(char ch);  // throws std::invalid_argument on unknown letter
const std::array<int, 3>& color_move(Color c);

// Small value-type set of colors backed by a 6-bit mask.
class ColorSet {
 public:
  ColorSet() = default;

  static ColorSet all();
  static ColorSet from_mask(std::uint8_t m);
  // Accepts letters r,b,g,o,y,s in any order; duplicates are fine.
  static ColorSet from_string(const std::string& letters);

  bool contains(Color c) const { return (mask_ >> static_cast<int>(c)) & 1u; }
  ColorSet& insert(Color c) { mask_ |= std::uint8_t(1u << static_cast<int>(c)); return *this; }
  ColorSet& erase(Color c) { mask_ &= std::uint8_t(~(1u << static_cast<int>(c))); return *this; }

  int size() const;
  bool empty() const { return mask_ == 0; }
  std::uint8_t mask() const { return mask_; }

  std::string to_string() const;        // letters in canonical order
  std::vector<Color> colors() const;    // canonical order

  ColorSet intersect(ColorSet other) const { return from_mask(mask_ & other.mask_); }
  ColorSet unite(ColorSet other) const { return from_mask(mask_ | other.mask_); }
  bool subset_of(ColorSet other) const { return (mask_ & ~other.mask_) == 0; }

  friend bool operator==(ColorSet a, ColorSet b) { return a.mask_ == b.mask_; }
  friend bool operator!=(ColorSet a, ColorSet b) { return a.mask_ != b.mask_; }
  friend bool operator<(ColorSet a, ColorSet b) { return a.mask_ < b.mask_; }

 private:
  std::uint8_t mask_ = 0;
};

// A color set is admissible when it is closed under the four induction rules
//   {r,b} -> g,  {o,s} -> b,  {s,y} -> g,  {r,o} -> y.
// Each rule pairs two moves whose vector sum is a third color; reachability by
// the pair already contains that color's relations, so a sensible poset keeps
// it explicit. 40 of the 64 subsets are admissible.
bool is_admissible(ColorSet s);
ColorSet admissible_closure(ColorSet s);  // least admissible superset
std::vector<ColorSet> all_admissible();   // the 40, ordered by mask

// Duality involution induced by the order-reversing affine symmetry of the
// tetrahedron: r <-> s, b <-> y, g and o fixed. dual(T_n(S)) = T_n(dual(S)).
Color dual_color(Color c);
ColorSet dual_colors(ColorSet s);

// Enumeration-formula classes; they partition the 40 admissible sets as
// 1 + 6 + 3 + 8 + 9 + 2 + 7 + 2 + 1 + 1.
enum class TheoremClass {
  Empty,             // {}: antichain, 2^|T_n| ideals
  Single,            // one color: disjoint chains
  TwoOpposite,       // {g,o},{r,s},{b,y}: disjoint grids, q-binomial product
  TwoAdjacent,       // 8 sets: Carlitz-Riordan q-Catalan product (duals reversed)
  ThreeNice,         // 9 sets: prod (1+q^j)^(n-j)
  ThreeExceptional,  // {r,g,y},{b,g,s}: 1,2,9,96,2498,161422 (no product known)
  Four,              // ASM set {b,g,o,y} and the six TSSCPP sets
  FiveA,             // {b,g,o,y,s},{r,b,g,o,y}: 1,2,6,26,162,1450,18626
  FiveB,             // {r,b,g,y,s}: 1,2,6,28,202,2252
  Six                // all colors: TSPP product
};

TheoremClass classify(ColorSet s);  // throws std::invalid_argument if not admissible
std::string theorem_class_name(TheoremClass t);

// True for the two-adjacent sets whose rank generating function is the
// reversed Carlitz-Riordan product ({y,g},{r,y},{b,o},{r,g}).
bool two_adjacent_is_dual(ColorSet s);

}  // namespace tetraposet
