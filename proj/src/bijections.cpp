#include "tetraposet/bijections.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetraposet {

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("bijection invariant broken: ") + what);
}

}  // namespace

MonotoneTriangle asm_to_monotone(const Asm& m) {
  std::string why;
  if (!is_asm(m, &why)) reject("asm_to_monotone: " + why);
  MonotoneTriangle out;
  out.n = m.n;
  out.rows.assign(m.n, {});
  std::vector<int> colsum(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      colsum[j] += m.a[i][j];
      if (colsum[j] == 1) out.rows[i].push_back(j + 1);
    }
    require((int)out.rows[i].size() == i + 1, "partial column sums");
  }
  require(is_monotone_triangle(out), "asm image is a monotone triangle");
  return out;
}

Asm monotone_to_asm(const MonotoneTriangle& m) {
  std::string why;
  if (!is_monotone_triangle(m, &why)) reject("monotone_to_asm: " + why);
  Asm out;
  out.n = m.n;
  out.a.assign(m.n, std::vector<int>(m.n, 0));
  std::vector<char> prev(m.n + 1, 0), cur(m.n + 1, 0);
  for (int i = 0; i < m.n; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    for (int v : m.rows[i]) cur[v] = 1;
    for (int j = 1; j <= m.n; ++j) out.a[i][j - 1] = cur[j] - prev[j];
    std::swap(prev, cur);
  }
  require(is_asm(out), "triangle image is an ASM");
  return out;
}

StaircaseArray monotone_to_yplus(const MonotoneTriangle& m) {
  std::string why;
  if (!is_monotone_triangle(m, &why)) reject("monotone_to_yplus: " + why);
  const int n = m.n;
  StaircaseArray out;
  out.n = n;
  out.variant = ArrayVariant::Yplus;
  out.colors = ColorSet::from_string("bgoy");
  out.rows.assign(n, {});
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) out.rows[i - 1].push_back(m.rows[n - j - 1][i - 1]);
  require(validate_array(out, out.colors), "triangle image is a {b,g,o,y} array");
  return out;
}

MonotoneTriangle yplus_to_monotone(const StaircaseArray& a) {
  std::string violation;
  if (a.variant != ArrayVariant::Yplus) reject("yplus_to_monotone: expected a Yplus array");
  if (!validate_array(a, ColorSet::from_string("bgoy"), &violation))
    reject("yplus_to_monotone: " + violation);
  const int n = a.n;
  MonotoneTriangle out;
  out.n = n;
  out.rows.assign(n, {});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) out.rows[i - 1].push_back(a.at(j, n - i));
  require(is_monotone_triangle(out), "array image is a monotone triangle");
  return out;
}

StaircaseArray asm_to_yplus(const Asm& m) { return monotone_to_yplus(asm_to_monotone(m)); }

Asm yplus_to_asm(const StaircaseArray& a) { return monotone_to_asm(yplus_to_monotone(a)); }

StaircaseArray tsscpp_to_yplus(const PlanePartition& pp, int n) {
  std::string why;
  if (!is_tsscpp(pp, n, &why)) reject("tsscpp_to_yplus: " + why);
  StaircaseArray x;
  x.n = n;
  x.variant = ArrayVariant::X;
  x.colors = ColorSet::from_string("rgoy");
  x.rows.assign(std::max(0, n - 1), {});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j)
      x.rows[i - 1].push_back(pp.heights[2 * n - i - j][2 * n - j - 1]);
  require(validate_array(x, x.colors), "plane partition image is an {r,g,o,y} array");
  StaircaseArray out = y_to_yplus(x_to_y(x));
  out.colors = x.colors;
  return out;
}

PlanePartition yplus_to_tsscpp(const StaircaseArray& a) {
  std::string violation;
  if (a.variant != ArrayVariant::Yplus) reject("yplus_to_tsscpp: expected a Yplus array");
  if (!validate_array(a, ColorSet::from_string("rgoy"), &violation))
    reject("yplus_to_tsscpp: " + violation);
  const int n = a.n;
  const StaircaseArray x = y_to_x(yplus_to_y(a));
  // 1-based height matrix; quadrants split at n. The fundamental domain
  // n+1 <= p <= q <= 2n carries the array (column 2n is identically zero).
  std::vector<std::vector<int>> t(2 * n + 1, std::vector<int>(2 * n + 1, 0));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) t[2 * n + 1 - i - j][2 * n - j] = x.at(i, j);
  for (int p = n + 1; p <= 2 * n; ++p)
    for (int q = p + 1; q <= 2 * n; ++q) t[q][p] = t[p][q];
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) t[p][q] = 2 * n - t[2 * n + 1 - p][2 * n + 1 - q];
  for (int p = 1; p <= n; ++p)
    for (int q = n + 1; q <= 2 * n; ++q) {
      int v = 0;
      for (int r = 1; r <= n; ++r) v += t[p][r] >= q ? 1 : 0;
      for (int r = n + 1; r <= 2 * n; ++r) v += t[q][r] >= p ? 1 : 0;
      t[p][q] = v;
      t[q][p] = v;
    }
  PlanePartition out;
  out.box = {2 * n, 2 * n, 2 * n};
  out.heights.assign(2 * n, std::vector<int>(2 * n, 0));
  for (int p = 1; p <= 2 * n; ++p)
    for (int q = 1; q <= 2 * n; ++q) out.heights[p - 1][q - 1] = t[p][q];
  require(is_tsscpp(out, n), "array image is a TSSCPP");
  return out;
}

OrderIdeal tspp_to_ideal(const PlanePartition& pp, int n) {
  std::string why;
  if (!is_tspp(pp, n, &why)) reject("tspp_to_ideal: " + why);
  const ColoredPoset p = build_tetra(n);
  Bits128 bits;
  for (int x = 1; x <= n - 1; ++x)
    for (int y = 1; y <= x; ++y)
      for (int z = 1; z <= y; ++z)
        if (pp.heights[x - 1][y - 1] >= z) bits.set(p.index_of(x - y, z - 1, y - z));
  require(is_ideal(p, bits), "wedge of a TSPP is an ideal");
  return make_ideal(bits);
}

PlanePartition ideal_to_tspp(const OrderIdeal& ideal, int n) {
  const ColoredPoset p = build_tetra(n);
  if (!is_ideal(p, ideal.bits)) reject("ideal_to_tspp: not an ideal of the tetrahedron");
  PlanePartition out;
  out.box = {n - 1, n - 1, n - 1};
  out.heights.assign(std::max(0, n - 1), std::vector<int>(std::max(0, n - 1), 0));
  for (int idx = 0; idx < p.size(); ++idx) {
    if (!ideal.bits.test(idx)) continue;
    const ElementCoord& e = p.elements[idx];
    int x = e.c1 + e.c2 + e.c3 + 1, y = e.c2 + e.c3 + 1, z = e.c2 + 1;
    int c[3] = {x, y, z};
    std::sort(c, c + 3);
    // All distinct orderings of (x,y,z) receive the cube (c[2] >= c[1] >= c[0]).
    do out.heights[c[0] - 1][c[1] - 1] = std::max(out.heights[c[0] - 1][c[1] - 1], c[2]);
    while (std::next_permutation(c, c + 3));
  }
  std::string why;
  require(is_tspp(out, n, &why), "ideal image is a TSPP");
  return out;
}

OrderIdeal dyck_to_ideal(const DyckPath& d, int n) {
  std::string why;
  if (!is_dyck(d, &why)) reject("dyck_to_ideal: " + why);
  if ((int)d.steps.size() != 2 * n) reject("dyck_to_ideal: path length is not 2n");
  std::vector<int> h(2 * n + 1, 0);
  for (int i = 0; i < 2 * n; ++i) h[i + 1] = h[i] + (d.steps[i] == 'U' ? 1 : -1);
  const ColoredPoset p = build_pyramid(n);
  Bits128 bits;
  for (int idx = 0; idx < p.size(); ++idx) {
    const ElementCoord& e = p.elements[idx];
    int i = 2 * n - 2 - 2 * e.c1 - e.c2, hh = e.c2 + 1;
    if (h[i - 1] >= hh && h[i] >= hh + 1 && h[i + 1] >= hh) bits.set(idx);
  }
  require(is_ideal(restrict(p, ColorSet::from_string("bg")), bits), "path image is an ideal");
  return make_ideal(bits);
}

DyckPath ideal_to_dyck(const OrderIdeal& ideal, int n) {
  const ColoredPoset p = build_pyramid(n);
  if (!is_ideal(restrict(p, ColorSet::from_string("bg")), ideal.bits))
    reject("ideal_to_dyck: not an ideal of P_n({b,g})");
  // Smallest path covering every selected rhombus: pointwise max of the
  // tent function of each rhombus and the sawtooth floor, which is
  // 1-Lipschitz and parity-correct, hence a Dyck height profile.
  std::vector<int> h(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) h[i] = i % 2;
  for (int idx = 0; idx < p.size(); ++idx) {
    if (!ideal.bits.test(idx)) continue;
    const ElementCoord& e = p.elements[idx];
    int ci = 2 * n - 2 - 2 * e.c1 - e.c2, ch = e.c2 + 1;
    for (int i = 0; i <= 2 * n; ++i) h[i] = std::max(h[i], ch + 1 - std::abs(i - ci));
  }
  DyckPath out;
  for (int i = 0; i < 2 * n; ++i) {
    require(std::abs(h[i + 1] - h[i]) == 1, "height profile steps by one");
    out.steps.push_back(h[i + 1] > h[i] ? 'U' : 'D');
  }
  require(is_dyck(out), "ideal image is a Dyck path");
  return out;
}

StaircaseArray tournament_to_yplus(const Tournament& t) {
  std::string why;
  if (!is_tournament(t, &why)) reject("tournament_to_yplus: " + why);
  const int n = t.n;
  StaircaseArray out;
  out.n = n;
  out.variant = ArrayVariant::Yplus;
  out.colors = ColorSet::from_string("rbg");
  out.rows.assign(n, {});
  for (int i = 1; i <= n; ++i) {
    out.rows[i - 1].push_back(i);
    for (int j = 1; j <= n - i; ++j) {
      int score = i;
      for (int m = i; m < i + j; ++m) score += t.upset(m, i + j) ? 1 : 0;
      out.rows[i - 1].push_back(score);
    }
  }
  require(validate_array(out, out.colors), "tournament image is an {r,b,g} array");
  return out;
}

Tournament yplus_to_tournament(const StaircaseArray& a) {
  std::string violation;
  if (a.variant != ArrayVariant::Yplus) reject("yplus_to_tournament: expected a Yplus array");
  if (!validate_array(a, ColorSet::from_string("rbg"), &violation))
    reject("yplus_to_tournament: " + violation);
  Tournament out;
  out.n = a.n;
  for (int i = 1; i <= a.n - 1; ++i)
    for (int j = 1; j <= a.n - i; ++j)
      if (a.at(i, j) == a.at(i + 1, j - 1)) out.upsets.insert({i, i + j});
  return out;
}

namespace {

constexpr int kNoEntry = std::numeric_limits<int>::max();

int slide_hole(std::vector<std::vector<int>>& t, int r, int c) {
  // Jeu de taquin: pull the smaller of the east/south neighbors into the
  // hole until neither exists; returns the row whose last cell vacated.
  for (;;) {
    const bool has_east = c + 1 < (int)t[r].size();
    const bool has_south = r + 1 < (int)t.size() && c < (int)t[r + 1].size();
    if (!has_east && !has_south) break;
    const int east = has_east ? t[r][c + 1] : kNoEntry;
    const int south = has_south ? t[r + 1][c] : kNoEntry;
    if (east < south) {
      t[r][c] = east;
      ++c;
    } else {
      t[r][c] = south;
      ++r;
    }
  }
  require(c + 1 == (int)t[r].size(), "hole settles at the end of its row");
  t[r].pop_back();
  return r;
}

}  // namespace

TournamentTableau sundquist(const StaircaseArray& ssyt) {
  std::string why;
  if (!is_ssyt(ssyt, &why)) reject("sundquist: " + why);
  const int n = ssyt.n;
  std::vector<std::vector<int>> t = ssyt.rows;
  TournamentTableau out;
  out.n = n;
  out.rows.assign(std::max(0, n - 1), {});
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int>& row = out.rows[i - 1];
    for (;;) {
      int fr = -1, fc = -1;
      for (int r = 0; r < (int)t.size() && fr < 0; ++r)
        for (int c = 0; c < (int)t[r].size(); ++c)
          if (t[r][c] == i) {
            fr = r;
            fc = c;
            break;
          }
      if (fr < 0) break;
      row.push_back(i);
      slide_hole(t, fr, fc);
    }
    // Delete the anti-diagonal r + c = n - i + 1 (1-based), bottom row first.
    for (int r1 = n - i; r1 >= 1; --r1) {
      const int c1 = n - i + 1 - r1;
      const int r = r1 - 1, c = c1 - 1;
      if (r >= (int)t.size() || c >= (int)t[r].size()) continue;
      require(c + 1 == (int)t[r].size(), "anti-diagonal cell ends its row");
      int v = t[r][c];
      t[r].pop_back();
      // Reverse column insertion: in each column to the left, v replaces the
      // bottommost entry <= v (the inverse of bumping the topmost entry >= v)
      // and the replaced entry carries on; the value expelled from column 1
      // joins row i. Row weakness guarantees a replaceable entry exists.
      for (int cc = c - 1; cc >= 0; --cc) {
        int hit = -1;
        for (int rr = (int)t.size() - 1; rr >= 0 && hit < 0; --rr)
          if (cc < (int)t[rr].size() && t[rr][cc] <= v) hit = rr;
        require(hit >= 0, "reverse column insertion always lands");
        std::swap(v, t[hit][cc]);
      }
      row.push_back(v);
    }
    std::sort(row.begin(), row.end());
  }
  for (const auto& r : t) require(r.empty(), "tableau fully consumed");
  require(is_tournament_tableau(out), "image is a tournament tableau");
  return out;
}

Tournament tableau_to_tournament(const TournamentTableau& t) {
  std::string why;
  if (!is_tournament_tableau(t, &why)) reject("tableau_to_tournament: " + why);
  Tournament out;
  out.n = t.n;
  for (int i = 1; i <= t.n - 1; ++i)
    for (int v : t.rows[i - 1])
      if (v > i) out.upsets.insert({i, v});
  return out;
}

}  // namespace tetraposet
