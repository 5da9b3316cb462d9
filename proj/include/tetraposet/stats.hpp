#pragma once

#include <vector>

#include "tetraposet/array.hpp"
#include "tetraposet/bigint.hpp"
#include "tetraposet/objects.hpp"

namespace tetraposet {

// Cell statistics of a Yplus array. A cell (i,j), j >= 1, is an equality
// cell when y_{i,j} = y_{i+1,j-1} (its southwest neighbor) and a strict cell
// when y_{i,j-1} < y_{i,j} < y_{i+1,j-1}.
struct ArrayStats {
  int n = 0;
  long long e_total = 0;   // equality cells
  long long n_total = 0;   // strict cells
  std::vector<long long> e_row;                 // [i-1], i = 1..n; last is 0
  std::vector<long long> e_diag;                // [d], d = i+j = 2..n; 0,1 unused
  std::vector<std::vector<long long>> e_rowval; // [i-1][k], value-k equality cells of row i
  std::vector<std::vector<long long>> c_rowval; // [i-1][k], value-k entries of row i, column 0 included
  std::vector<long long> c_val;                 // [k], value-k entries of the whole array
};

ArrayStats compute_stats(const StaircaseArray& yplus);

// Number of inversions sum_{i>k, j<l} A_{ij} A_{kl}; equals E + N of the
// corresponding array.
long long inversion_number(const Asm& m);

long long num_negative_ones(const Asm& m);

// Sort every row (columns >= 1) increasingly. The input must satisfy
// {r,b,g}; the result then satisfies {r,b,g,y} and is the unique weakly
// increasing array with the same row contents.
StaircaseArray normalize_rows(const StaircaseArray& a);

// All {r,b,g}-valid arrays whose row-sorted form is a (which must satisfy
// {r,b,g,y}): distinct permutations of each row, filtered by validity, in
// lexicographic order of the row-major entry sequence. Always contains a.
std::vector<StaircaseArray> row_shuffles(const StaircaseArray& a);

// prod_{1 <= i <= k <= n-1} binomial(C_{i+1,k}, E_{i,k}), the size of the
// shuffle fiber over a normalized array.
Int shuffle_fiber_size(const ArrayStats& s);

// Player v's upsets of opponents in [a,b]: #{m in [a,b] : m lost to v}.
long long upsets_in_range(const Tournament& t, int v, int a, int b);

// TSSCPP tournament test, stated directly on the games: for every u < v-1,
// upsets_in_range(v-1, u, v-2) <= upsets_in_range(v, u, v-1). Equivalent to
// the rows of the corresponding array being weakly increasing.
bool is_tsscpp_tournament(const Tournament& t);

}  // namespace tetraposet
