#include "tetraposet/objects.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetraposet {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

}  // namespace

bool is_asm(const Asm& m, std::string* why) {
  int n = m.n;
  if (n < 1) return fail(why, "n must be >= 1");
  if (static_cast<int>(m.a.size()) != n) return fail(why, "row count != n");
  for (const auto& row : m.a)
    if (static_cast<int>(row.size()) != n) return fail(why, "row length != n");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.a[i][j] < -1 || m.a[i][j] > 1)
        return fail(why, "entry outside {-1,0,1}");
  // Partial sums staying in {0,1} and ending at 1 encode both the sum and the
  // sign-alternation conditions at once.
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int j = 0; j < n; ++j) {
      sum += m.a[i][j];
      if (sum < 0 || sum > 1) return fail(why, "row partial sum outside {0,1}");
    }
    if (sum != 1) return fail(why, "row sum != 1");
  }
  for (int j = 0; j < n; ++j) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      sum += m.a[i][j];
      if (sum < 0 || sum > 1) return fail(why, "column partial sum outside {0,1}");
    }
    if (sum != 1) return fail(why, "column sum != 1");
  }
  return true;
}

namespace {

void enumerate_asms_rec(int n, int r, int c, int rowsum, std::vector<int>& colsum,
                        std::vector<std::vector<int>>& a, std::vector<Asm>& out) {
  if (r == n) {
    out.push_back({n, a});
    return;
  }
  int nr = c + 1 < n ? r : r + 1;
  int nc = c + 1 < n ? c + 1 : 0;
  for (int e = -1; e <= 1; ++e) {
    int rs = rowsum + e;
    int cs = colsum[c] + e;
    if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
    if (c + 1 == n && rs != 1) continue;
    if (r + 1 == n && cs != 1) continue;
    a[r][c] = e;
    colsum[c] = cs;
    enumerate_asms_rec(n, nr, nc, c + 1 < n ? rs : 0, colsum, a, out);
    colsum[c] -= e;
  }
}

}  // namespace

std::vector<Asm> enumerate_asms(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_asms: n must be >= 1");
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<int> colsum(n, 0);
  std::vector<Asm> out;
  enumerate_asms_rec(n, 0, 0, 0, colsum, a, out);
  return out;
}

bool is_monotone_triangle(const MonotoneTriangle& m, std::string* why) {
  int n = m.n;
  if (n < 1) return fail(why, "n must be >= 1");
  if (static_cast<int>(m.rows.size()) != n) return fail(why, "need n rows");
  for (int i = 1; i <= n; ++i)
    if (static_cast<int>(m.rows[i - 1].size()) != i)
      return fail(why, "row " + std::to_string(i) + " must have " + std::to_string(i) +
                           " entries");
  for (int j = 1; j <= n; ++j)
    if (m.rows[n - 1][j - 1] != j) return fail(why, "bottom row must be (1..n)");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (!(m.rows[i - 1][j - 1] < m.rows[i - 1][j]))
        return fail(why, "row " + std::to_string(i) + " not strictly increasing");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= i; ++j) {
      int v = m.rows[i - 1][j - 1];
      if (!(m.rows[i][j - 1] <= v && v <= m.rows[i][j]))
        return fail(why, "interlacing fails at row " + std::to_string(i));
    }
  return true;
}

namespace {

void enumerate_monotone_rec(int i, std::vector<std::vector<int>>& rows, int n,
                            std::vector<MonotoneTriangle>& out) {
  if (i == 0) {
    out.push_back({n, rows});
    return;
  }
  // Choose row i (length i) interlacing the already-fixed row i+1.
  const std::vector<int>& below = rows[i];
  std::vector<int>& here = rows[i - 1];
  auto choose = [&](auto&& self, int j) -> void {
    if (j > i) {
      enumerate_monotone_rec(i - 1, rows, n, out);
      return;
    }
    int lo = below[j - 1];
    if (j >= 2) lo = std::max(lo, here[j - 2] + 1);
    for (int v = lo; v <= below[j]; ++v) {
      here[j - 1] = v;
      self(self, j + 1);
    }
  };
  choose(choose, 1);
}

}  // namespace

std::vector<MonotoneTriangle> enumerate_monotone(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_monotone: n must be >= 1");
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i) rows[i - 1].resize(i);
  for (int j = 1; j <= n; ++j) rows[n - 1][j - 1] = j;
  std::vector<MonotoneTriangle> out;
  enumerate_monotone_rec(n - 1, rows, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_plane_partition(const PlanePartition& p, std::string* why) {
  auto [A, B, C] = p.box;
  if (A < 0 || B < 0 || C < 0) return fail(why, "box sides must be >= 0");
  if (static_cast<int>(p.heights.size()) != A) return fail(why, "need box[0] rows");
  for (const auto& row : p.heights)
    if (static_cast<int>(row.size()) != B) return fail(why, "need box[1] columns");
  for (int i = 0; i < A; ++i)
    for (int j = 0; j < B; ++j) {
      int v = p.heights[i][j];
      if (v < 0 || v > C) return fail(why, "height outside [0, box[2]]");
      if (j + 1 < B && v < p.heights[i][j + 1]) return fail(why, "row not weakly decreasing");
      if (i + 1 < A && v < p.heights[i + 1][j]) return fail(why, "column not weakly decreasing");
    }
  return true;
}

namespace {

std::set<std::array<int, 3>> cube_set(const PlanePartition& p) {
  std::set<std::array<int, 3>> cubes;
  for (int i = 1; i <= p.box[0]; ++i)
    for (int j = 1; j <= p.box[1]; ++j)
      for (int k = 1; k <= p.heights[i - 1][j - 1]; ++k) cubes.insert({i, j, k});
  return cubes;
}

}  // namespace

bool is_totally_symmetric(const PlanePartition& p) {
  if (!(p.box[0] == p.box[1] && p.box[1] == p.box[2])) return false;
  auto cubes = cube_set(p);
  for (const auto& c : cubes) {
    std::array<int, 3> s = c;
    std::sort(s.begin(), s.end());
    do {
      if (!cubes.count(s)) return false;
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return true;
}

bool is_self_complementary(const PlanePartition& p) {
  auto [A, B, C] = p.box;
  auto cubes = cube_set(p);
  for (int i = 1; i <= A; ++i)
    for (int j = 1; j <= B; ++j)
      for (int k = 1; k <= C; ++k) {
        bool here = cubes.count({i, j, k}) != 0;
        bool comp = cubes.count({A + 1 - i, B + 1 - j, C + 1 - k}) != 0;
        if (here == comp) return false;
      }
  return true;
}

bool is_tsscpp(const PlanePartition& p, int n, std::string* why) {
  if (p.box != std::array<int, 3>{2 * n, 2 * n, 2 * n}) return fail(why, "box must be (2n)^3");
  if (!is_plane_partition(p, why)) return false;
  if (!is_totally_symmetric(p)) return fail(why, "not totally symmetric");
  if (!is_self_complementary(p)) return fail(why, "not self-complementary");
  return true;
}

bool is_tspp(const PlanePartition& p, int n, std::string* why) {
  if (p.box != std::array<int, 3>{n - 1, n - 1, n - 1}) return fail(why, "box must be (n-1)^3");
  if (!is_plane_partition(p, why)) return false;
  if (!is_totally_symmetric(p)) return fail(why, "not totally symmetric");
  return true;
}

std::vector<PlanePartition> enumerate_tspp(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_tspp: n must be >= 1");
  int m = n - 1;
  std::vector<PlanePartition> out;
  PlanePartition p{{m, m, m}, std::vector<std::vector<int>>(m, std::vector<int>(m, 0))};
  if (m == 0) {
    out.push_back(p);
    return out;
  }
  // Fill the upper triangle (i <= j) row-major, mirror as we go, and let the
  // predicates do the filtering at the leaves.
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == m) {
      if (is_tspp(p, n)) out.push_back(p);
      return;
    }
    int ni = j + 1 < m ? i : i + 1;
    int nj = j + 1 < m ? j + 1 : i + 1;
    for (int v = 0; v <= m; ++v) {
      p.heights[i][j] = v;
      p.heights[j][i] = v;
      self(self, ni, nj);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dyck(const DyckPath& d, std::string* why) {
  if (d.steps.size() % 2 != 0) return fail(why, "odd number of steps");
  int h = 0;
  for (char c : d.steps) {
    if (c == 'U') ++h;
    else if (c == 'D') --h;
    else return fail(why, "steps must be U or D");
    if (h < 0) return fail(why, "path dips below the axis");
  }
  if (h != 0) return fail(why, "path does not return to the axis");
  return true;
}

std::vector<DyckPath> enumerate_dyck(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_dyck: n must be >= 0");
  std::vector<DyckPath> out;
  std::string steps;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.push_back({steps});
      return;
    }
    if (downs < ups) {
      steps.push_back('D');
      self(self, ups, downs + 1);
      steps.pop_back();
    }
    if (ups < n) {
      steps.push_back('U');
      self(self, ups + 1, downs);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool is_tournament(const Tournament& t, std::string* why) {
  if (t.n < 1) return fail(why, "n must be >= 1");
  for (const auto& [i, j] : t.upsets)
    if (!(1 <= i && i < j && j <= t.n)) return fail(why, "upset pair out of range");
  return true;
}

std::vector<Tournament> enumerate_tournaments(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_tournaments: n must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<Tournament> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Tournament t{n, {}};
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) t.upsets.insert(pairs[b]);
    out.push_back(std::move(t));
  }
  return out;
}

bool is_tournament_tableau(const TournamentTableau& t, std::string* why) {
  int n = t.n;
  if (n < 1) return fail(why, "n must be >= 1");
  if (static_cast<int>(t.rows.size()) != n - 1) return fail(why, "need n-1 rows");
  for (int i = 1; i <= n - 1; ++i) {
    const auto& row = t.rows[i - 1];
    if (static_cast<int>(row.size()) != n - i)
      return fail(why, "row " + std::to_string(i) + " must have " + std::to_string(n - i) +
                           " entries");
    std::set<int> seen;
    for (std::size_t j = 0; j < row.size(); ++j) {
      int v = row[j];
      if (v < i || v > n) return fail(why, "entry outside [i, n] in row " + std::to_string(i));
      if (j > 0 && row[j - 1] > v)
        return fail(why, "row " + std::to_string(i) + " not weakly increasing");
      if (v > i && !seen.insert(v).second)
        return fail(why, "repeated entry > i in row " + std::to_string(i));
    }
  }
  return true;
}

bool is_ssyt(const StaircaseArray& t, std::string* why) {
  if (t.variant != ArrayVariant::Y) return fail(why, "SSYT must use the Y variant");
  if (!well_shaped(t, why)) return false;
  int n = t.n;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      int v = t.at(i, j);
      if (v < 1 || v > n) return fail(why, "entry outside [1, n]");
      if (j >= 2 && t.at(i, j - 1) > v) return fail(why, "row not weakly increasing");
      if (i >= 2 && !(t.at(i - 1, j) < v)) return fail(why, "column not strictly increasing");
    }
  return true;
}

std::vector<StaircaseArray> enumerate_ssyt(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_ssyt: n must be >= 1");
  std::vector<std::vector<int>> rows(std::max(0, n - 1));
  for (int i = 1; i <= n - 1; ++i) rows[i - 1].resize(n - i);
  std::vector<StaircaseArray> out;
  ColorSet gyo = ColorSet::from_string("gyo");
  if (n == 1) {
    out.push_back({1, ArrayVariant::Y, gyo, rows});
    return out;
  }
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i > n - 1) {
      out.push_back({n, ArrayVariant::Y, gyo, rows});
      return;
    }
    int ni = j + 1 <= n - i ? i : i + 1;
    int nj = j + 1 <= n - i ? j + 1 : 1;
    int lo = 1;
    if (j >= 2) lo = std::max(lo, rows[i - 1][j - 2]);
    if (i >= 2) lo = std::max(lo, rows[i - 2][j - 1] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[i - 1][j - 1] = v;
      self(self, ni, nj);
    }
  };
  rec(rec, 1, 1);
  return out;
}

}  // namespace tetraposet
