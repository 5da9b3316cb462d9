#pragma once

#include <string>
#include <vector>

#include "tetraposet/color.hpp"
#include "tetraposet/ideal.hpp"
#include "tetraposet/poset.hpp"

namespace tetraposet {

enum class ArrayVariant { X, Y, Yplus };

std::string variant_name(ArrayVariant v);
ArrayVariant variant_from_name(const std::string& name);  // throws on unknown name

// Triangular integer arrays encoding order ideals of T_n(S).
//
//   X:     rows i = 1..n-1, columns j = 1..n-i, bounds 0 <= x_{i,j} <= j.
//   Y:     same cells, y_{i,j} = x_{i,j} + i, bounds i <= y_{i,j} <= i+j.
//   Yplus: Y with a prepended column y_{i,0} = i and a final row (n).
//
// Per-color inequalities (cells taken wherever both sides exist):
//
//   color    X form                        Y / Yplus form
//   green    bounds only                   bounds only
//   orange   x_{i,j} <= x_{i+1,j}          y_{i,j} <  y_{i+1,j}
//   red      x_{i,j} <= x_{i-1,j+1}        y_{i,j} <= y_{i-1,j+1} + 1
//   yellow   x_{i,j} <= x_{i,j+1}          y_{i,j} <= y_{i,j+1}
//   blue     x_{i,j} <= x_{i+1,j-1} + 1    y_{i,j} <= y_{i+1,j-1}
//   silver   x_{i,j} <= x_{i,j-1} + 1      y_{i,j} <= y_{i,j-1} + 1
//
// For Yplus the same inequalities run over column 0 as well; at j = 1 the
// blue and silver forms coincide with the upper bound, so nothing extra is
// rejected compared to the Y validator.
struct StaircaseArray {
  int n = 0;
  ArrayVariant variant = ArrayVariant::X;
  ColorSet colors;  // the color set the array claims to satisfy (never trusted)
  std::vector<std::vector<int>> rows;

  // Entry at 1-based row i; X/Y store columns 1..n-i, Yplus stores 0..n-i.
  int at(int i, int j) const;

  friend bool operator==(const StaircaseArray& a, const StaircaseArray& b) {
    return a.n == b.n && a.variant == b.variant && a.colors == b.colors && a.rows == b.rows;
  }
};

// Shape check only: row count, row lengths, and for Yplus the fixed column
// y_{i,0} = i. Bounds and color inequalities belong to validate_array.
bool well_shaped(const StaircaseArray& a, std::string* why = nullptr);

// True iff a is well shaped, satisfies the variant bounds, and satisfies the
// inequality of every color in s at every cell where it applies. On failure
// *violation names the first offending cell.
bool validate_array(const StaircaseArray& a, ColorSet s, std::string* violation = nullptr);

// Weight of an array: sum of entries for X, sum of (y_{i,j} - i) over columns
// j >= 1 for Y/Yplus. Equals |I| for the ideal the array encodes.
long long array_weight(const StaircaseArray& a);

// The elements of T_n partition into green chains, one per cell (i,j):
//   chain(i,j) = { (i-1, c2, n-i-j) : 0 <= c2 <= j-1 }.
// x_{i,j} is the number of ideal elements on chain(i,j); because the ideal is
// down-closed and green edges run along the chain, that intersection is a
// prefix. Requires p.kind == Tetra and g in s; rejects sets that are not
// ideals of restrict(p, s).
StaircaseArray ideal_to_x(const OrderIdeal& ideal, const ColoredPoset& p, ColorSet s);

// Inverse: set the first x_{i,j} elements of every green chain. Rejects
// arrays that fail validate_array(a, s).
OrderIdeal x_to_ideal(const StaircaseArray& a, const ColoredPoset& p, ColorSet s);

StaircaseArray x_to_y(const StaircaseArray& a);
StaircaseArray y_to_x(const StaircaseArray& a);
StaircaseArray y_to_yplus(const StaircaseArray& a);
StaircaseArray yplus_to_y(const StaircaseArray& a);  // rejects column 0 != (1..n)

// Direct enumeration of all valid arrays for color set s, independent of the
// poset machinery: fills cells row-major with incremental constraint checks.
// Emission order is lexicographic on the row-major entry sequence.
std::vector<StaircaseArray> enumerate_yplus(ColorSet s, int n);
std::vector<StaircaseArray> enumerate_x(ColorSet s, int n);

}  // namespace tetraposet
