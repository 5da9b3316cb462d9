#include "tetraposet/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tetraposet/formulas.hpp"

namespace tetraposet {

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("stats invariant broken: ") + what);
}

}  // namespace

ArrayStats compute_stats(const StaircaseArray& a) {
  std::string why;
  if (a.variant != ArrayVariant::Yplus) reject("compute_stats: expected a Yplus array");
  if (!well_shaped(a, &why)) reject("compute_stats: " + why);
  const int n = a.n;
  ArrayStats s;
  s.n = n;
  s.e_row.assign(n, 0);
  s.e_diag.assign(n + 1, 0);
  s.e_rowval.assign(n, std::vector<long long>(n + 1, 0));
  s.c_rowval.assign(n, std::vector<long long>(n + 1, 0));
  s.c_val.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) {
      const int y = a.at(i, j);
      if (y < 1 || y > n) reject("compute_stats: entry out of range");
      s.c_rowval[i - 1][y] += 1;
      s.c_val[y] += 1;
      if (j == 0 || i == n) continue;
      const int sw = a.at(i + 1, j - 1);
      const int west = a.at(i, j - 1);
      if (y == sw) {
        s.e_total += 1;
        s.e_row[i - 1] += 1;
        s.e_diag[i + j] += 1;
        s.e_rowval[i - 1][y] += 1;
      }
      if (west < y && y < sw) s.n_total += 1;
    }
  return s;
}

long long inversion_number(const Asm& m) {
  std::string why;
  if (!is_asm(m, &why)) reject("inversion_number: " + why);
  long long total = 0;
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < i; ++k)
      for (int j = 0; j < m.n; ++j)
        for (int l = j + 1; l < m.n; ++l) total += m.a[i][j] * m.a[k][l];
  return total;
}

long long num_negative_ones(const Asm& m) {
  std::string why;
  if (!is_asm(m, &why)) reject("num_negative_ones: " + why);
  long long total = 0;
  for (const auto& row : m.a) total += std::count(row.begin(), row.end(), -1);
  return total;
}

StaircaseArray normalize_rows(const StaircaseArray& a) {
  std::string violation;
  if (a.variant != ArrayVariant::Yplus) reject("normalize_rows: expected a Yplus array");
  if (!validate_array(a, ColorSet::from_string("rbg"), &violation))
    reject("normalize_rows: " + violation);
  StaircaseArray out = a;
  out.colors = ColorSet::from_string("rbgy");
  for (auto& row : out.rows)
    if (row.size() > 1) std::sort(row.begin() + 1, row.end());
  require(validate_array(out, out.colors), "sorted rows satisfy {r,b,g,y}");
  return out;
}

std::vector<StaircaseArray> row_shuffles(const StaircaseArray& a) {
  std::string violation;
  if (a.variant != ArrayVariant::Yplus) reject("row_shuffles: expected a Yplus array");
  if (!validate_array(a, ColorSet::from_string("rbgy"), &violation))
    reject("row_shuffles: " + violation);
  const int n = a.n;
  // Distinct permutations of each row's columns >= 1, lexicographically.
  std::vector<std::vector<std::vector<int>>> perms(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row(a.rows[i - 1].begin() + 1, a.rows[i - 1].end());
    std::sort(row.begin(), row.end());
    do perms[i - 1].push_back(row);
    while (std::next_permutation(row.begin(), row.end()));
  }
  const ColorSet rbg = ColorSet::from_string("rbg");
  std::vector<StaircaseArray> out;
  std::vector<size_t> pick(n, 0);
  for (;;) {
    StaircaseArray cand = a;
    cand.colors = rbg;
    for (int i = 1; i <= n; ++i)
      std::copy(perms[i - 1][pick[i - 1]].begin(), perms[i - 1][pick[i - 1]].end(),
                cand.rows[i - 1].begin() + 1);
    if (validate_array(cand, rbg)) out.push_back(std::move(cand));
    int i = n - 1;
    while (i >= 0 && ++pick[i] == perms[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Int shuffle_fiber_size(const ArrayStats& s) {
  Int total = 1;
  for (int i = 1; i <= s.n - 1; ++i)
    for (int k = i; k <= s.n - 1; ++k)
      total *= binomial((int)s.c_rowval[i][k], (int)s.e_rowval[i - 1][k]);
  return total;
}

long long upsets_in_range(const Tournament& t, int v, int a, int b) {
  long long total = 0;
  for (int m = a; m <= b; ++m) total += t.upset(m, v) ? 1 : 0;
  return total;
}

bool is_tsscpp_tournament(const Tournament& t) {
  std::string why;
  if (!is_tournament(t, &why)) reject("is_tsscpp_tournament: " + why);
  for (int v = 3; v <= t.n; ++v)
    for (int u = 1; u <= v - 2; ++u)
      if (upsets_in_range(t, v - 1, u, v - 2) > upsets_in_range(t, v, u, v - 1)) return false;
  return true;
}

}  // namespace tetraposet
