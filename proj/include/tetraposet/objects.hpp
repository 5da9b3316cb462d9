#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tetraposet/array.hpp"

namespace tetraposet {

// Alternating sign matrix: n x n over {-1,0,1}, every row and column sums to
// 1 and its nonzero entries alternate in sign.
struct Asm {
  int n = 0;
  std::vector<std::vector<int>> a;

  friend bool operator==(const Asm& x, const Asm& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const Asm& x, const Asm& y) { return x.a < y.a; }
};

bool is_asm(const Asm& m, std::string* why = nullptr);

// Direct enumeration by filling entries with partial row/column sums kept in
// {0,1}; independent of the triangle and array machinery. Lexicographic in
// row-major entry order.
std::vector<Asm> enumerate_asms(int n);

// Monotone triangle: rows 1..n, row i holding i entries, strictly increasing
// within each row, a_{i+1,j} <= a_{i,j} <= a_{i+1,j+1}, bottom row (1..n).
struct MonotoneTriangle {
  int n = 0;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const MonotoneTriangle& x, const MonotoneTriangle& y) {
    return x.n == y.n && x.rows == y.rows;
  }
  friend bool operator<(const MonotoneTriangle& x, const MonotoneTriangle& y) {
    return x.rows < y.rows;
  }
};

bool is_monotone_triangle(const MonotoneTriangle& m, std::string* why = nullptr);

// Bottom-up interlacing enumeration, independent of the ASM map.
std::vector<MonotoneTriangle> enumerate_monotone(int n);

// Plane partition in an A x B x C box, stored as the A x B matrix of column
// heights. The cube set view {(i,j,k) : 1 <= k <= heights[i][j]} is derived
// on demand for the symmetry predicates.
struct PlanePartition {
  std::array<int, 3> box{0, 0, 0};
  std::vector<std::vector<int>> heights;

  friend bool operator==(const PlanePartition& x, const PlanePartition& y) {
    return x.box == y.box && x.heights == y.heights;
  }
  friend bool operator<(const PlanePartition& x, const PlanePartition& y) {
    return x.heights < y.heights;
  }
};

// Shape, entry range, and weak decrease along rows and down columns.
bool is_plane_partition(const PlanePartition& p, std::string* why = nullptr);

// Invariant under every permutation of the three axes (requires a cubical
// box). Checked on the cube set.
bool is_totally_symmetric(const PlanePartition& p);

// Equal to its complement in the box: (i,j,k) in the cube set exactly when
// (A+1-i, B+1-j, C+1-k) is not.
bool is_self_complementary(const PlanePartition& p);

// Totally symmetric self-complementary plane partition in a 2n x 2n x 2n box.
bool is_tsscpp(const PlanePartition& p, int n, std::string* why = nullptr);

// Totally symmetric plane partition in an (n-1)^3 box.
bool is_tspp(const PlanePartition& p, int n, std::string* why = nullptr);

// Brute-force TSPP enumeration over all (n-1) x (n-1) height matrices;
// intended for n <= 4 (the oracle side of the ideal bijection tests).
std::vector<PlanePartition> enumerate_tspp(int n);

// Dyck path: 2n steps over {U, D}, balanced, never below the axis.
struct DyckPath {
  std::string steps;

  friend bool operator==(const DyckPath& x, const DyckPath& y) { return x.steps == y.steps; }
  friend bool operator<(const DyckPath& x, const DyckPath& y) { return x.steps < y.steps; }
};

bool is_dyck(const DyckPath& d, std::string* why = nullptr);
std::vector<DyckPath> enumerate_dyck(int n);

// Tournament on players 1..n: one game per pair i < j; an upset is a win by
// the higher-numbered player. Stored as the set of upset pairs (i,j), i < j.
struct Tournament {
  int n = 0;
  std::set<std::pair<int, int>> upsets;

  bool upset(int i, int j) const { return upsets.count({i, j}) != 0; }

  friend bool operator==(const Tournament& x, const Tournament& y) {
    return x.n == y.n && x.upsets == y.upsets;
  }
  friend bool operator<(const Tournament& x, const Tournament& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.upsets < y.upsets;
  }
};

bool is_tournament(const Tournament& t, std::string* why = nullptr);
std::vector<Tournament> enumerate_tournaments(int n);

// Tournament tableau: rows i = 1..n-1 of length n-i, entries in [i, n],
// weakly increasing, with the entries strictly greater than i all distinct.
// Row i records player i's games: an entry v > i is an upset loss to v,
// copies of i pad the remaining games.
struct TournamentTableau {
  int n = 0;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const TournamentTableau& x, const TournamentTableau& y) {
    return x.n == y.n && x.rows == y.rows;
  }
  friend bool operator<(const TournamentTableau& x, const TournamentTableau& y) {
    return x.rows < y.rows;
  }
};

bool is_tournament_tableau(const TournamentTableau& t, std::string* why = nullptr);

// Semistandard Young tableau of staircase shape (n-1, n-2, ..., 1) with
// entries at most n: rows weakly increase, columns strictly increase. As a
// triangular array this is exactly a Y array satisfying {g,y,o}: the yellow
// inequality is row weakness, the strict orange inequality is column
// strictness, and the bound y_{i,j} <= i+j is implied by strict columns.
bool is_ssyt(const StaircaseArray& t, std::string* why = nullptr);

// Direct DFS with the tableau-form constraints (entries <= n rather than the
// array bound), so it can disagree with enumerate_yplus only if one of the
// two is wrong; their agreement is tested.
std::vector<StaircaseArray> enumerate_ssyt(int n);

}  // namespace tetraposet
