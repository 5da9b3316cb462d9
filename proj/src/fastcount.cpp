#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tetraposet/ideal.hpp"

// count_ideals_fast: factor the poset into connected components, then count
// each component by a frontier DP over slices of a linear functional f with
// |f(head) - f(tail)| <= 1 on every edge. Slice states are the down-closed
// subsets of the slice's induced subposet; transitions enforce the cross
// edges between consecutive slices.

namespace tetraposet {

namespace {

constexpr size_t kStateCap = size_t(1) << 20;
constexpr size_t kPairCap = size_t(10'000'000);
constexpr int kSliceSizeCap = 30;

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// The six slicing functionals: c1, c2, c3, c1+c2, c1+c3, c2+c3. Every edge
// move changes each of them by -1, 0, or +1.
int functional(int which, const ElementCoord& e) {
  switch (which) {
    case 0: return e.c1;
    case 1: return e.c2;
    case 2: return e.c3;
    case 3: return e.c1 + e.c2;
    case 4: return e.c1 + e.c3;
    default: return e.c2 + e.c3;
  }
}

struct LocalEdge {
  int tail, head;
};

// Enumerate down-closed subsets of a digraph on `count` local vertices
// (edges: head in set => tail in set) as bitmasks. Returns false if more
// than kStateCap states exist.
bool enumerate_local_ideals(int count, const std::vector<LocalEdge>& edges,
                            std::vector<std::uint32_t>& out) {
  std::vector<std::vector<int>> preds(count), succs(count);
  for (const LocalEdge& e : edges) {
    preds[e.head].push_back(e.tail);
    succs[e.tail].push_back(e.head);
  }
  std::vector<signed char> state(count, 0);
  std::vector<int> trail;
  std::vector<std::pair<int, signed char>> work;

  auto try_set = [&](int root, signed char value) -> bool {
    work.clear();
    work.push_back({root, value});
    while (!work.empty()) {
      auto [x, v] = work.back();
      work.pop_back();
      if (state[x] == v) continue;
      if (state[x] == -v) return false;
      state[x] = v;
      trail.push_back(x);
      auto& next = v > 0 ? preds[x] : succs[x];
      for (int y : next) work.push_back({y, v});
    }
    return true;
  };
  auto undo = [&](size_t mark) {
    while (trail.size() > mark) {
      state[trail.back()] = 0;
      trail.pop_back();
    }
  };

  out.clear();
  // Iterative DFS with explicit recursion over indices.
  struct Frame {
    int idx;
    int phase;  // 0 = try exclude, 1 = try include, 2 = done
    size_t mark;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, trail.size()});
  while (!stack.empty()) {
    Frame& f = stack.back();
    int idx = f.idx;
    while (idx < count && state[idx] != 0) ++idx;
    if (idx == count) {
      std::uint32_t mask = 0;
      for (int i = 0; i < count; ++i)
        if (state[i] > 0) mask |= (std::uint32_t(1) << i);
      out.push_back(mask);
      if (out.size() > kStateCap) return false;
      // emulate return: pop and continue parent's phase
      undo(f.mark);
      stack.pop_back();
      continue;
    }
    if (f.phase == 0) {
      f.phase = 1;
      size_t mark = trail.size();
      if (try_set(idx, -1)) {
        stack.push_back({idx + 1, 0, mark});
      } else {
        undo(mark);
      }
      continue;
    }
    if (f.phase == 1) {
      f.phase = 2;
      size_t mark = trail.size();
      if (try_set(idx, +1)) {
        stack.push_back({idx + 1, 0, mark});
      } else {
        undo(mark);
      }
      continue;
    }
    undo(f.mark);
    stack.pop_back();
  }
  return true;
}

// Plain backtracking count on a component given local adjacency; fallback
// when no slicing succeeds.
Int brute_count_component(int count, const std::vector<LocalEdge>& edges) {
  std::vector<std::vector<int>> preds(count), succs(count);
  for (const LocalEdge& e : edges) {
    preds[e.head].push_back(e.tail);
    succs[e.tail].push_back(e.head);
  }
  std::vector<signed char> state(count, 0);
  Int total = 0;
  std::function<void(int)> rec;
  std::vector<int> trail;
  std::vector<std::pair<int, signed char>> work;
  auto try_set = [&](int root, signed char value) -> bool {
    work.clear();
    work.push_back({root, value});
    while (!work.empty()) {
      auto [x, v] = work.back();
      work.pop_back();
      if (state[x] == v) continue;
      if (state[x] == -v) return false;
      state[x] = v;
      trail.push_back(x);
      auto& next = v > 0 ? preds[x] : succs[x];
      for (int y : next) work.push_back({y, v});
    }
    return true;
  };
  auto undo = [&](size_t mark) {
    while (trail.size() > mark) {
      state[trail.back()] = 0;
      trail.pop_back();
    }
  };
  rec = [&](int idx) {
    while (idx < count && state[idx] != 0) ++idx;
    if (idx == count) {
      ++total;
      return;
    }
    size_t mark = trail.size();
    if (try_set(idx, -1)) rec(idx + 1);
    undo(mark);
    if (try_set(idx, +1)) rec(idx + 1);
    undo(mark);
  };
  rec(0);
  return total;
}

struct Component {
  std::vector<int> members;  // global indices
};

Int count_component(const ColoredPoset& p, const std::vector<int>& members,
                    const std::vector<std::pair<int, int>>& all_edges) {
  int m = static_cast<int>(members.size());
  if (m == 1) return 2;

  std::vector<int> local(p.size(), -1);
  for (int i = 0; i < m; ++i) local[members[i]] = i;
  std::vector<LocalEdge> comp_edges;
  for (const auto& [t, h] : all_edges)
    if (local[t] >= 0 && local[h] >= 0) comp_edges.push_back({local[t], local[h]});

  // Rank candidate functionals by their largest slice.
  std::vector<std::pair<int, int>> ranked;  // (max slice size, functional id)
  for (int f = 0; f < 6; ++f) {
    std::map<int, int> slice_sizes;
    for (int g : members) ++slice_sizes[functional(f, p.elements[g])];
    int worst = 0;
    for (auto& [val, sz] : slice_sizes) worst = std::max(worst, sz);
    ranked.push_back({worst, f});
  }
  std::sort(ranked.begin(), ranked.end());

  for (auto& [worst, f] : ranked) {
    if (worst > kSliceSizeCap) continue;

    // Slices ordered by functional value.
    std::map<int, std::vector<int>> slices;  // f value -> local indices
    for (int i = 0; i < m; ++i) slices[functional(f, p.elements[members[i]])].push_back(i);
    std::vector<std::vector<int>> slice_members;
    std::vector<int> slice_of(m, -1), pos_in_slice(m, -1);
    {
      int prev = 0;
      bool first = true;
      for (auto& [val, mem] : slices) {
        if (!first && val != prev + 1) throw std::logic_error("gap in connected component slices");
        first = false;
        prev = val;
        int s = static_cast<int>(slice_members.size());
        for (size_t j = 0; j < mem.size(); ++j) {
          slice_of[mem[j]] = s;
          pos_in_slice[mem[j]] = static_cast<int>(j);
        }
        slice_members.push_back(mem);
      }
    }
    int ns = static_cast<int>(slice_members.size());

    // Intra-slice edges, and cross edges grouped by lower slice.
    std::vector<std::vector<LocalEdge>> intra(ns);
    // up[t]: edges tail in t, head in t+1; down[t]: tail in t+1, head in t.
    std::vector<std::vector<LocalEdge>> up(std::max(ns - 1, 0)), down(std::max(ns - 1, 0));
    bool ok = true;
    for (const LocalEdge& e : comp_edges) {
      int st = slice_of[e.tail], sh = slice_of[e.head];
      int pt = pos_in_slice[e.tail], ph = pos_in_slice[e.head];
      if (st == sh) {
        intra[st].push_back({pt, ph});
      } else if (sh == st + 1) {
        up[st].push_back({pt, ph});
      } else if (sh == st - 1) {
        down[sh].push_back({ph, pt});  // store as (head pos in t, tail pos in t+1)
      } else {
        ok = false;  // cannot happen for these functionals
        break;
      }
    }
    if (!ok) continue;

    // Enumerate slice states.
    std::vector<std::vector<std::uint32_t>> states(ns);
    for (int s = 0; s < ns && ok; ++s) {
      if (static_cast<int>(slice_members[s].size()) > kSliceSizeCap) { ok = false; break; }
      if (!enumerate_local_ideals(static_cast<int>(slice_members[s].size()), intra[s], states[s]))
        ok = false;
    }
    if (!ok) continue;
    for (int s = 0; s + 1 < ns && ok; ++s)
      if (states[s].size() * states[s + 1].size() > kPairCap) ok = false;
    if (!ok) continue;

    // Frontier DP.
    std::vector<Int> ways(states[0].size(), Int(1));
    for (int s = 0; s + 1 < ns; ++s) {
      const auto& cur = states[s];
      const auto& nxt = states[s + 1];
      // req[j]: bits in slice s that must be included when next state is nxt[j]
      std::vector<std::uint32_t> req(nxt.size(), 0);
      for (size_t j = 0; j < nxt.size(); ++j)
        for (const LocalEdge& e : up[s])
          if ((nxt[j] >> e.head) & 1u) req[j] |= (std::uint32_t(1) << e.tail);
      // forced[i]: bits in slice s+1 forced when current state is cur[i]
      std::vector<std::uint32_t> forced(cur.size(), 0);
      for (size_t i = 0; i < cur.size(); ++i)
        for (const LocalEdge& e : down[s])  // e.tail = pos in s (head), e.head = pos in s+1 (tail)
          if ((cur[i] >> e.tail) & 1u) forced[i] |= (std::uint32_t(1) << e.head);
      std::vector<Int> next_ways(nxt.size(), Int(0));
      for (size_t j = 0; j < nxt.size(); ++j) {
        for (size_t i = 0; i < cur.size(); ++i) {
          if (ways[i] == 0) continue;
          if ((req[j] & ~cur[i]) != 0) continue;
          if ((forced[i] & ~nxt[j]) != 0) continue;
          next_ways[j] += ways[i];
        }
      }
      ways = std::move(next_ways);
    }
    Int total = 0;
    for (const Int& v : ways) total += v;
    return total;
  }

  return brute_count_component(m, comp_edges);
}

}  // namespace

Int count_ideals_fast(const ColoredPoset& p) {
  if (p.size() == 0) return 1;

  std::vector<std::pair<int, int>> all_edges;
  for (const auto& ec : p.edges)
    for (const Edge& e : ec) all_edges.push_back({e.tail, e.head});

  Dsu dsu(p.size());
  for (const auto& [t, h] : all_edges) dsu.unite(t, h);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < p.size(); ++v) comps[dsu.find(v)].push_back(v);

  Int total = 1;
  for (auto& [root, members] : comps) total *= count_component(p, members, all_edges);
  return total;
}

}  // namespace tetraposet
