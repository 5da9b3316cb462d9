#include "tetraposet/array.hpp"

#include <stdexcept>

namespace tetraposet {

namespace {

std::string cell_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

}  // namespace

std::string variant_name(ArrayVariant v) {
  switch (v) {
    case ArrayVariant::X: return "X";
    case ArrayVariant::Y: return "Y";
    case ArrayVariant::Yplus: return "Yplus";
  }
  return "?";
}

ArrayVariant variant_from_name(const std::string& name) {
  if (name == "X") return ArrayVariant::X;
  if (name == "Y") return ArrayVariant::Y;
  if (name == "Yplus") return ArrayVariant::Yplus;
  throw std::invalid_argument("unknown array variant: " + name);
}

int StaircaseArray::at(int i, int j) const {
  int col = variant == ArrayVariant::Yplus ? j : j - 1;
  return rows.at(i - 1).at(col);
}

bool well_shaped(const StaircaseArray& a, std::string* why) {
  if (a.n < 1) return fail(why, "n must be >= 1");
  int want_rows = a.variant == ArrayVariant::Yplus ? a.n : a.n - 1;
  if (static_cast<int>(a.rows.size()) != want_rows)
    return fail(why, "expected " + std::to_string(want_rows) + " rows, have " +
                         std::to_string(a.rows.size()));
  for (int i = 1; i <= want_rows; ++i) {
    int want = a.variant == ArrayVariant::Yplus ? a.n - i + 1 : a.n - i;
    if (static_cast<int>(a.rows[i - 1].size()) != want)
      return fail(why, "row " + std::to_string(i) + " must have " + std::to_string(want) +
                           " entries");
    if (a.variant == ArrayVariant::Yplus && a.rows[i - 1][0] != i)
      return fail(why, "row " + std::to_string(i) + " must start with y_{i,0} = i");
  }
  return true;
}

bool validate_array(const StaircaseArray& a, ColorSet s, std::string* violation) {
  if (!well_shaped(a, violation)) return false;
  int n = a.n;

  if (a.variant == ArrayVariant::X) {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - i; ++j) {
        int v = a.at(i, j);
        if (v < 0 || v > j) return fail(violation, "bounds at " + cell_name(i, j));
        if (s.contains(Color::Orange) && i + j + 1 <= n && !(v <= a.at(i + 1, j)))
          return fail(violation, "orange at " + cell_name(i, j));
        if (s.contains(Color::Red) && i >= 2 && !(v <= a.at(i - 1, j + 1)))
          return fail(violation, "red at " + cell_name(i, j));
        if (s.contains(Color::Yellow) && i + j + 1 <= n && !(v <= a.at(i, j + 1)))
          return fail(violation, "yellow at " + cell_name(i, j));
        if (s.contains(Color::Blue) && j >= 2 && !(v <= a.at(i + 1, j - 1) + 1))
          return fail(violation, "blue at " + cell_name(i, j));
        if (s.contains(Color::Silver) && j >= 2 && !(v <= a.at(i, j - 1) + 1))
          return fail(violation, "silver at " + cell_name(i, j));
      }
    return true;
  }

  // Y and Yplus share the inequality forms; Yplus also covers column 0.
  int jmin = a.variant == ArrayVariant::Yplus ? 0 : 1;
  int imax = a.variant == ArrayVariant::Yplus ? n : n - 1;
  for (int i = 1; i <= imax; ++i)
    for (int j = jmin; j <= n - i; ++j) {
      int v = a.at(i, j);
      if (v < i || v > i + j) return fail(violation, "bounds at " + cell_name(i, j));
      bool south = i + 1 <= imax && j <= n - i - 1;       // (i+1, j) exists
      bool east = j + 1 <= n - i;                         // (i, j+1) exists
      bool sw = i + 1 <= imax && j - 1 >= jmin;           // (i+1, j-1) exists
      bool west = j - 1 >= jmin;                          // (i, j-1) exists
      bool ne = i >= 2 && j + 1 <= n - (i - 1);           // (i-1, j+1) exists
      if (s.contains(Color::Orange) && south && !(v < a.at(i + 1, j)))
        return fail(violation, "orange at " + cell_name(i, j));
      if (s.contains(Color::Red) && ne && !(v <= a.at(i - 1, j + 1) + 1))
        return fail(violation, "red at " + cell_name(i, j));
      if (s.contains(Color::Yellow) && east && !(v <= a.at(i, j + 1)))
        return fail(violation, "yellow at " + cell_name(i, j));
      if (s.contains(Color::Blue) && sw && !(v <= a.at(i + 1, j - 1)))
        return fail(violation, "blue at " + cell_name(i, j));
      if (s.contains(Color::Silver) && west && !(v <= a.at(i, j - 1) + 1))
        return fail(violation, "silver at " + cell_name(i, j));
    }
  return true;
}

long long array_weight(const StaircaseArray& a) {
  long long w = 0;
  int n = a.n;
  if (a.variant == ArrayVariant::X) {
    for (const auto& row : a.rows)
      for (int v : row) w += v;
    return w;
  }
  int imax = a.variant == ArrayVariant::Yplus ? n : n - 1;
  for (int i = 1; i <= imax; ++i)
    for (int j = 1; j <= n - i; ++j) w += a.at(i, j) - i;
  return w;
}

StaircaseArray ideal_to_x(const OrderIdeal& ideal, const ColoredPoset& p, ColorSet s) {
  if (p.kind != PosetKind::Tetra)
    throw std::invalid_argument("ideal_to_x: poset must be a tetrahedron");
  if (!s.contains(Color::Green))
    throw std::invalid_argument("ideal_to_x: color set must contain green");
  if (!is_ideal(restrict(p, s), ideal.bits))
    throw std::invalid_argument("ideal_to_x: not an ideal of restrict(p, s)");

  int n = p.n;
  StaircaseArray a{n, ArrayVariant::X, s, {}};
  a.rows.resize(std::max(0, n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    a.rows[i - 1].resize(n - i);
    for (int j = 1; j <= n - i; ++j) {
      int count = 0;
      bool ended = false;
      for (int c2 = 0; c2 < j; ++c2) {
        int idx = p.index_of(i - 1, c2, n - i - j);
        if (ideal.bits.test(idx)) {
          if (ended)
            throw std::invalid_argument("ideal_to_x: set is not a prefix of a green chain");
          ++count;
        } else {
          ended = true;
        }
      }
      a.rows[i - 1][j - 1] = count;
    }
  }
  return a;
}

OrderIdeal x_to_ideal(const StaircaseArray& a, const ColoredPoset& p, ColorSet s) {
  if (p.kind != PosetKind::Tetra)
    throw std::invalid_argument("x_to_ideal: poset must be a tetrahedron");
  if (!s.contains(Color::Green))
    throw std::invalid_argument("x_to_ideal: color set must contain green");
  if (a.variant != ArrayVariant::X || a.n != p.n)
    throw std::invalid_argument("x_to_ideal: array must be an X array of matching order");
  std::string why;
  if (!validate_array(a, s, &why)) throw std::invalid_argument("x_to_ideal: " + why);

  int n = p.n;
  Bits128 bits;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j)
      for (int c2 = 0; c2 < a.at(i, j); ++c2) bits.set(p.index_of(i - 1, c2, n - i - j));
  if (!is_ideal(restrict(p, s), bits))
    throw std::invalid_argument("x_to_ideal: array does not encode an ideal");
  return make_ideal(bits);
}

StaircaseArray x_to_y(const StaircaseArray& a) {
  if (a.variant != ArrayVariant::X) throw std::invalid_argument("x_to_y: X array expected");
  StaircaseArray b = a;
  b.variant = ArrayVariant::Y;
  for (int i = 1; i <= a.n - 1; ++i)
    for (auto& v : b.rows[i - 1]) v += i;
  return b;
}

StaircaseArray y_to_x(const StaircaseArray& a) {
  if (a.variant != ArrayVariant::Y) throw std::invalid_argument("y_to_x: Y array expected");
  StaircaseArray b = a;
  b.variant = ArrayVariant::X;
  for (int i = 1; i <= a.n - 1; ++i)
    for (auto& v : b.rows[i - 1]) v -= i;
  return b;
}

StaircaseArray y_to_yplus(const StaircaseArray& a) {
  if (a.variant != ArrayVariant::Y) throw std::invalid_argument("y_to_yplus: Y array expected");
  StaircaseArray b{a.n, ArrayVariant::Yplus, a.colors, {}};
  b.rows.resize(a.n);
  for (int i = 1; i <= a.n - 1; ++i) {
    b.rows[i - 1].push_back(i);
    for (int v : a.rows[i - 1]) b.rows[i - 1].push_back(v);
  }
  b.rows[a.n - 1] = {a.n};
  return b;
}

StaircaseArray yplus_to_y(const StaircaseArray& a) {
  if (a.variant != ArrayVariant::Yplus)
    throw std::invalid_argument("yplus_to_y: Yplus array expected");
  std::string why;
  if (!well_shaped(a, &why)) throw std::invalid_argument("yplus_to_y: " + why);
  StaircaseArray b{a.n, ArrayVariant::Y, a.colors, {}};
  b.rows.resize(std::max(0, a.n - 1));
  for (int i = 1; i <= a.n - 1; ++i)
    b.rows[i - 1].assign(a.rows[i - 1].begin() + 1, a.rows[i - 1].end());
  return b;
}

namespace {

// Shared DFS: fill cells row-major, checking at placement time every
// inequality whose other endpoint is already placed. For Yplus those are the
// west (yellow/silver), north (orange) and northeast (red/blue) neighbors;
// for X the same neighbor roles carry the X-form inequalities.
void enumerate_yplus_rec(ColorSet s, int n, int i, int j,
                         std::vector<std::vector<int>>& rows,
                         std::vector<StaircaseArray>& out) {
  if (i > n) {
    out.push_back({n, ArrayVariant::Yplus, s, rows});
    return;
  }
  int ni = j + 1 <= n - i ? i : i + 1;
  int nj = j + 1 <= n - i ? j + 1 : 0;
  for (int v = i; v <= i + j; ++v) {
    if (j >= 1) {
      int west = rows[i - 1][j - 1];
      if (s.contains(Color::Yellow) && !(west <= v)) continue;
      if (s.contains(Color::Silver) && !(v <= west + 1)) continue;
    }
    if (i >= 2) {
      if (s.contains(Color::Orange) && !(rows[i - 2][j] < v)) continue;
      int ne = rows[i - 2][j + 1];
      if (s.contains(Color::Red) && !(v <= ne + 1)) continue;
      if (s.contains(Color::Blue) && !(ne <= v)) continue;
    }
    rows[i - 1][j] = v;
    enumerate_yplus_rec(s, n, ni, nj, rows, out);
  }
}

void enumerate_x_rec(ColorSet s, int n, int i, int j, std::vector<std::vector<int>>& rows,
                     std::vector<StaircaseArray>& out) {
  if (i > n - 1) {
    out.push_back({n, ArrayVariant::X, s, rows});
    return;
  }
  int ni = j + 1 <= n - i ? i : i + 1;
  int nj = j + 1 <= n - i ? j + 1 : 1;
  for (int v = 0; v <= j; ++v) {
    if (j >= 2) {
      int west = rows[i - 1][j - 2];
      if (s.contains(Color::Yellow) && !(west <= v)) continue;
      if (s.contains(Color::Silver) && !(v <= west + 1)) continue;
    }
    if (i >= 2) {
      if (s.contains(Color::Orange) && !(rows[i - 2][j - 1] <= v)) continue;
      int ne = rows[i - 2][j];
      if (s.contains(Color::Red) && !(v <= ne)) continue;
      if (s.contains(Color::Blue) && !(ne <= v + 1)) continue;
    }
    rows[i - 1][j - 1] = v;
    enumerate_x_rec(s, n, ni, nj, rows, out);
  }
}

}  // namespace

std::vector<StaircaseArray> enumerate_yplus(ColorSet s, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_yplus: n must be >= 1");
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i) rows[i - 1].resize(n - i + 1);
  std::vector<StaircaseArray> out;
  enumerate_yplus_rec(s, n, 1, 0, rows, out);
  return out;
}

std::vector<StaircaseArray> enumerate_x(ColorSet s, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_x: n must be >= 1");
  std::vector<std::vector<int>> rows(std::max(0, n - 1));
  for (int i = 1; i <= n - 1; ++i) rows[i - 1].resize(n - i);
  std::vector<StaircaseArray> out;
  if (n == 1) {
    out.push_back({1, ArrayVariant::X, s, rows});
    return out;
  }
  enumerate_x_rec(s, n, 1, 1, rows, out);
  return out;
}

}  // namespace tetraposet
