#include "tetraposet/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tetraposet {

bool canonical_less(const ElementCoord& a, const ElementCoord& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  if (a.c1 != b.c1) return a.c1 < b.c1;
  return a.c2 < b.c2;
}

std::string poset_kind_name(PosetKind k) {
  switch (k) {
    case PosetKind::Pyramid: return "pyramid";
    case PosetKind::Tetra: return "tetra";
    case PosetKind::Trapezoid: return "trapezoid";
  }
  return "?";
}

int ColoredPoset::index_of(int c1, int c2, int c3) const {
  if (c1 < 0 || c2 < 0 || c3 < 0) return -1;
  ElementCoord probe{c1, c2, c3};
  auto it = std::lower_bound(elements.begin(), elements.end(), probe, canonical_less);
  if (it == elements.end() || !(*it == probe)) return -1;
  return static_cast<int>(it - elements.begin());
}

long long ColoredPoset::edge_count() const {
  long long total = 0;
  for (const auto& ec : edges) total += static_cast<long long>(ec.size());
  return total;
}

bool ColoredPoset::is_acyclic() const {
  // Kahn's algorithm on the merged adjacency.
  std::vector<int> indeg(size(), 0);
  for (int v = 0; v < size(); ++v) indeg[v] = static_cast<int>(preds[v].size());
  std::vector<int> queue;
  for (int v = 0; v < size(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int w : succs[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return seen == size();
}

namespace {

// Fill edges/preds/succs from elements + colors. Elements must already be in
// canonical order.
void finalize(ColoredPoset& p) {
  p.edges.assign(kNumColors, {});
  p.preds.assign(p.size(), {});
  p.succs.assign(p.size(), {});
  for (Color c : p.colors.colors()) {
    const auto& mv = color_move(c);
    auto& ec = p.edges[static_cast<int>(c)];
    for (int u = 0; u < p.size(); ++u) {
      const ElementCoord& e = p.elements[u];
      int v = p.index_of(e.c1 + mv[0], e.c2 + mv[1], e.c3 + mv[2]);
      if (v >= 0) ec.push_back(Edge{u, v});
    }
    std::sort(ec.begin(), ec.end(), [](const Edge& a, const Edge& b) {
      return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    });
  }
  for (const auto& ec : p.edges) {
    for (const Edge& e : ec) {
      p.succs[e.tail].push_back(e.head);
      p.preds[e.head].push_back(e.tail);
    }
  }
  for (auto& v : p.preds) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (auto& v : p.succs) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  if (p.reversed) {
    for (auto& ec : p.edges) {
      for (Edge& e : ec) std::swap(e.tail, e.head);
      std::sort(ec.begin(), ec.end(), [](const Edge& a, const Edge& b) {
        return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
      });
    }
    std::swap(p.preds, p.succs);
  }
}

std::vector<ElementCoord> sorted_coords(std::vector<ElementCoord> coords) {
  std::sort(coords.begin(), coords.end(), canonical_less);
  return coords;
}

}  // namespace

ColoredPoset build_pyramid(int n) {
  if (n < 1) throw std::invalid_argument("build_pyramid: n must be >= 1");
  ColoredPoset p;
  p.n = n;
  p.kind = PosetKind::Pyramid;
  p.colors = ColorSet::from_string("rbg");
  std::vector<ElementCoord> coords;
  for (int c1 = 0; c1 <= n - 2; ++c1)
    for (int c2 = 0; c1 + c2 <= n - 2; ++c2) coords.push_back(ElementCoord{c1, c2, 0});
  p.elements = sorted_coords(std::move(coords));
  finalize(p);
  return p;
}

ColoredPoset build_tetra(int n) {
  if (n < 1) throw std::invalid_argument("build_tetra: n must be >= 1");
  ColoredPoset p;
  p.n = n;
  p.kind = PosetKind::Tetra;
  p.colors = ColorSet::all();
  std::vector<ElementCoord> coords;
  for (int c1 = 0; c1 <= n - 2; ++c1)
    for (int c2 = 0; c1 + c2 <= n - 2; ++c2)
      for (int c3 = 0; c1 + c2 + c3 <= n - 2; ++c3) coords.push_back(ElementCoord{c1, c2, c3});
  p.elements = sorted_coords(std::move(coords));
  finalize(p);
  return p;
}

ColoredPoset restrict(const ColoredPoset& p, ColorSet s) {
  ColoredPoset out = p;
  out.colors = p.colors.intersect(s);
  finalize(out);
  return out;
}

ColoredPoset dual(const ColoredPoset& p) {
  ColoredPoset out = p;
  out.reversed = !p.reversed;
  finalize(out);
  return out;
}

ColoredPoset truncate_trapezoid(const ColoredPoset& p, int k) {
  if (p.kind != PosetKind::Tetra)
    throw std::invalid_argument("truncate_trapezoid: poset must be the tetrahedron");
  if (k < 0 || k > p.n - 1)
    throw std::invalid_argument("truncate_trapezoid: k out of range [0, n-1]");
  if (k == 0) return p;
  ColoredPoset out;
  out.n = p.n;
  out.kind = PosetKind::Trapezoid;
  out.trap_k = k;
  out.colors = p.colors;
  for (const ElementCoord& e : p.elements)
    if (e.c3 <= p.n - 2 - k) out.elements.push_back(e);
  finalize(out);
  return out;
}

}  // namespace tetraposet
