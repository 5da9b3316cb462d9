#pragma once

#include <string>
#include <vector>

#include "tetraposet/color.hpp"

namespace tetraposet {

// A lattice point of the tetrahedron T_n = {c1,c2,c3 >= 0 : c1+c2+c3 <= n-2}.
struct ElementCoord {
  int c1 = 0, c2 = 0, c3 = 0;

  int level() const { return c1 + c2 + c3; }

  friend bool operator==(const ElementCoord& a, const ElementCoord& b) {
    return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
  }
  friend bool operator!=(const ElementCoord& a, const ElementCoord& b) { return !(a == b); }
};

// Canonical element order: lexicographic on (c1+c2+c3, c1, c2). Fixes bitset
// indices and serialization; it is NOT a linear extension (blue and orange
// edges point backward in it).
bool canonical_less(const ElementCoord& a, const ElementCoord& b);

enum class PosetKind { Pyramid, Tetra, Trapezoid };

std::string poset_kind_name(PosetKind k);

struct Edge {
  int tail = 0;  // tail + color move = head; tail < head in the partial order
  int head = 0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.tail == b.tail && a.head == b.head;
  }
};

// A finite poset presented as a colored edge digraph on lattice points. The
// partial order is reachability along edges (edges need not be covers).
// Immutable after construction by the builders below.
struct ColoredPoset {
  int n = 0;
  PosetKind kind = PosetKind::Tetra;
  int trap_k = 0;         // trapezoid cut depth; 0 unless kind == Trapezoid
  bool reversed = false;  // true after dual(): every edge runs against its move
  ColorSet colors;

  std::vector<ElementCoord> elements;                 // canonical order
  std::vector<std::vector<Edge>> edges;               // indexed by color id, sorted
  std::vector<std::vector<int>> preds;                // merged direct predecessors
  std::vector<std::vector<int>> succs;                // merged direct successors

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(int c1, int c2, int c3) const;         // -1 if absent
  int index_of(const ElementCoord& e) const { return index_of(e.c1, e.c2, e.c3); }
  long long edge_count() const;

  bool is_acyclic() const;                            // sanity; true for all builders
};

// The pyramid P_n: plane c3 = 0, C(n,2) elements, colors {r,b,g}.
ColoredPoset build_pyramid(int n);

// The tetrahedron T_n: C(n+1,3) elements, all six colors.
ColoredPoset build_tetra(int n);

// Keep only edges whose color lies in s (intersected with p's colors).
// Elements are unchanged.
ColoredPoset restrict(const ColoredPoset& p, ColorSet s);

// Same elements, every edge reversed.
ColoredPoset dual(const ColoredPoset& p);

// Remove the top k pyramid layers P_2..P_{k+1} (the slices c3 > n-2-k) and
// all edges touching them. Requires kind == Tetra and 0 <= k <= n-1; k = 0
// returns p unchanged. In staircase-array coordinates this cuts the first k
// SW-NE diagonals.
ColoredPoset truncate_trapezoid(const ColoredPoset& p, int k);

}  // namespace tetraposet
