// Copyright 2026 The ecdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ecdel/error.hpp"
#include "ecdel/graph.hpp"
#include "ecdel/pattern.hpp"

namespace ecdel {

// ---------------------------------------------------------------------------
// Colored neighborhood classes

struct ClassKind {
  /// False: independent set. True: clique whose edges all have `color`.
  bool clique = false;
  ColorId color = 0;

  friend bool operator==(const ClassKind&, const ClassKind&) = default;
};

struct ClassPartition {
  /// Sorted member lists, ordered by smallest member.
  std::vector<std::vector<VertexId>> classes;
  std::vector<ClassKind> kinds;
  /// class_of[v] indexes `classes`.
  std::vector<int> class_of;

  int gamma() const { return static_cast<int>(classes.size()); }
};

/// True iff u and v satisfy the colored-neighborhood relation. Both cases of
/// the definition reduce to: every third vertex sees u and v in the same color
/// (or sees neither).
inline bool same_colored_neighborhood(const ColoredGraph& g, VertexId u, VertexId v) {
  if (u == v) return true;
  for (VertexId w = 0; w < g.n(); ++w) {
    if (w == u || w == v) continue;
    if (g.color(u, w) != g.color(v, w)) return false;
  }
  return true;
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<int> parent;
};

}  // namespace detail

inline ClassPartition colored_classes(const ColoredGraph& g) {
  detail::DisjointSets sets(g.n());
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = u + 1; v < g.n(); ++v) {
      if (sets.find(u) == sets.find(v)) continue;
      if (same_colored_neighborhood(g, u, v)) sets.unite(u, v);
    }
  }
  ClassPartition p;
  p.class_of.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> slot(static_cast<std::size_t>(g.n()), -1);
  for (VertexId v = 0; v < g.n(); ++v) {
    int root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[v] = slot[root];
    p.classes[slot[root]].push_back(v);
  }
  for (const auto& cls : p.classes) {
    ClassKind kind;
    if (cls.size() >= 2 && g.adjacent(cls[0], cls[1])) {
      kind.clique = true;
      kind.color = g.color(cls[0], cls[1]);
    }
    p.kinds.push_back(kind);
  }
  return p;
}

inline bool is_color_diverse(const ColoredGraph& g) {
  return colored_classes(g).gamma() == g.n();
}

/// Whether every colored path/cycle matching `spec` is color diverse. Specs
/// that no graph can realize (more colors than edges) are vacuously diverse.
inline bool spec_is_color_diverse(const PatternSpec& spec) {
  spec.validate();
  const int l = spec.length;
  const int c = spec.colors;
  if (c > spec.edge_count()) return true;
  if (spec.kind == PatternKind::Path) {
    if (l >= 4) return true;
    if (l == 3) return c == 2;
    return l == 1;
  }
  if (l >= 5) return true;
  if (l == 4) return c >= 3;
  return c == 3;
}

// ---------------------------------------------------------------------------
// Cascade status

enum class Cascade { StrictlyNonCascading, NonCascading, Cascading };

inline std::string_view to_string(Cascade c) {
  switch (c) {
    case Cascade::StrictlyNonCascading: return "strictly-non-cascading";
    case Cascade::NonCascading: return "non-cascading";
    case Cascade::Cascading: return "cascading";
  }
  return "unknown";
}

struct CascadeStatus {
  Cascade status = Cascade::StrictlyNonCascading;
  /// A non-induced occurrence; for Cascading, one whose chords are all
  /// conflict edges.
  std::optional<Occurrence> witness;
  DeletionSet conflict;

  bool non_cascading() const { return status != Cascade::Cascading; }
};

/// A non-induced occurrence can become induced after deleting conflict edges
/// exactly when all of its chords are conflict edges, so the witness search
/// treats only conflict-free edges as blocking chords.
inline CascadeStatus cascade_status(const ColoredGraph& g, const PatternSpec& spec) {
  spec.validate();
  CascadeStatus out;
  out.conflict = conflict_edges(g, spec);
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<char> in_x(n * n, 0);
  for (const auto& e : out.conflict) {
    in_x[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = 1;
    in_x[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = 1;
  }
  auto has_chord = [&](const Occurrence& occ) {
    for (const auto& e : occurrence_non_edges(occ, spec.kind)) {
      if (g.has_edge(e)) return true;
    }
    return false;
  };
  auto free_chord = [&](VertexId a, VertexId b) {
    return g.color(a, b) != 0 && !in_x[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  };
  const auto sub = spec.with_mode(OccurrenceMode::Subgraph);
  for_each_occurrence_avoiding(g, sub, free_chord, [&](const Occurrence& occ) {
    if (!has_chord(occ)) return true;
    out.status = Cascade::Cascading;
    out.witness = occ;
    return false;
  });
  if (out.status == Cascade::Cascading) return out;
  for_each_occurrence(g, sub, [&](const Occurrence& occ) {
    if (!has_chord(occ)) return true;
    out.status = Cascade::NonCascading;
    out.witness = occ;
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Class T (colors: 1 = blue, 2 = red)

inline constexpr ColorId kBlue = 1;
inline constexpr ColorId kRed = 2;

/// Forbidden induced subgraphs of class T:
///   a: blue P3, b: red P3, c: blue-blue-red triangle,
///   d: red-red-blue triangle, e: red-blue-red P4.
struct ForbiddenWitness {
  char type = 'a';
  std::vector<VertexId> vertices;
};

namespace detail {

inline void require_bicolored(const ColoredGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.color > 2) {
      throw Error(ErrorKind::NotBicolored,
                  "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                      "} has color " + std::to_string(e.color));
    }
  }
}

inline std::optional<ForbiddenWitness> scan_p3(const ColoredGraph& g, ColorId col, char type) {
  for (VertexId b = 0; b < g.n(); ++b) {
    auto nbrs = g.color_neighbors(b, col);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.adjacent(nbrs[i], nbrs[j])) return ForbiddenWitness{type, {nbrs[i], b, nbrs[j]}};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ForbiddenWitness> scan_triangle(const ColoredGraph& g, ColorId twice,
                                                     char type) {
  // Apex b has two `twice`-colored edges; the opposite side has the other color.
  for (VertexId b = 0; b < g.n(); ++b) {
    auto nbrs = g.color_neighbors(b, twice);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        ColorId side = g.color(nbrs[i], nbrs[j]);
        if (side != 0 && side != twice) return ForbiddenWitness{type, {nbrs[i], b, nbrs[j]}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// First forbidden induced subgraph, checking types a..e in order.
inline std::optional<ForbiddenWitness> find_forbidden_T(const ColoredGraph& g) {
  detail::require_bicolored(g);
  if (auto w = detail::scan_p3(g, kBlue, 'a')) return w;
  if (auto w = detail::scan_p3(g, kRed, 'b')) return w;
  if (auto w = detail::scan_triangle(g, kBlue, 'c')) return w;
  if (auto w = detail::scan_triangle(g, kRed, 'd')) return w;
  for (VertexId b = 0; b < g.n(); ++b) {
    for (VertexId c : g.color_neighbors(b, kBlue)) {
      for (VertexId a : g.color_neighbors(b, kRed)) {
        if (a == c || g.adjacent(a, c)) continue;
        for (VertexId d : g.color_neighbors(c, kRed)) {
          if (d == a || d == b || g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return ForbiddenWitness{'e', {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

enum class ComponentShape { RbFence, RbCliqueStar, Rejected };

inline std::string_view to_string(ComponentShape s) {
  switch (s) {
    case ComponentShape::RbFence: return "rb-fence";
    case ComponentShape::RbCliqueStar: return "rb-clique-star";
    case ComponentShape::Rejected: return "rejected";
  }
  return "unknown";
}

struct BlueClique {
  VertexId center = 0;
  /// Sorted, contains `center`.
  std::vector<VertexId> members;
};

struct ComponentDecomposition {
  ComponentShape shape = ComponentShape::Rejected;
  std::vector<VertexId> vertices;
  // RbFence
  std::vector<VertexId> k1, k2;
  std::vector<Edge> matching;
  // RbCliqueStar: one entry per vertex of `clique`, ordered by center.
  std::vector<VertexId> clique;
  std::vector<BlueClique> blue_cliques;
  // Rejected: ids refer to the whole graph.
  std::optional<ForbiddenWitness> witness;
};

struct TDecomposition {
  std::vector<ComponentDecomposition> components;

  bool accepted() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) {
      return c.shape != ComponentShape::Rejected;
    });
  }
  const ComponentDecomposition* first_rejection() const {
    for (const auto& c : components) {
      if (c.shape == ComponentShape::Rejected) return &c;
    }
    return nullptr;
  }
};

namespace detail {

// Color-`col` components of the vertex set `vs` (which is closed under
// adjacency), each sorted, ordered by smallest member.
inline std::vector<std::vector<VertexId>> color_components(const ColoredGraph& g,
                                                           const std::vector<VertexId>& vs,
                                                           ColorId col) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : vs) {
    if (seen[s]) continue;
    out.emplace_back();
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (VertexId y : g.color_neighbors(x, col)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_color_clique(const ColoredGraph& g, const std::vector<VertexId>& vs, ColorId col) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.color(vs[i], vs[j]) != col) return false;
    }
  }
  return true;
}

inline bool try_fence(const ColoredGraph& g, ComponentDecomposition& d) {
  auto blue = color_components(g, d.vertices, kBlue);
  if (blue.size() != 2) return false;
  for (const auto& k : blue) {
    if (k.size() < 2 || !is_color_clique(g, k, kBlue)) return false;
  }
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (VertexId v : blue[0]) side[v] = 0;
  for (VertexId v : blue[1]) side[v] = 1;
  std::vector<Edge> matching;
  for (VertexId v : d.vertices) {
    auto reds = g.color_neighbors(v, kRed);
    if (reds.size() > 1) return false;
    for (VertexId w : reds) {
      if (side[w] == side[v]) return false;
      if (v < w) matching.push_back({v, w});
    }
  }
  d.shape = ComponentShape::RbFence;
  d.k1 = blue[0];
  d.k2 = blue[1];
  d.matching = std::move(matching);
  return true;
}

inline bool try_clique_star(const ColoredGraph& g, ComponentDecomposition& d) {
  std::vector<VertexId> clique;
  for (VertexId v : d.vertices) {
    if (!g.color_neighbors(v, kRed).empty()) clique.push_back(v);
  }
  if (clique.empty()) clique.push_back(d.vertices.front());
  if (!is_color_clique(g, clique, kRed)) return false;
  std::vector<int> in_clique(static_cast<std::size_t>(g.n()), 0);
  for (VertexId v : clique) in_clique[v] = 1;
  std::vector<BlueClique> blues;
  for (const auto& comp : color_components(g, d.vertices, kBlue)) {
    if (!is_color_clique(g, comp, kBlue)) return false;
    int hits = 0;
    VertexId center = -1;
    for (VertexId v : comp) {
      if (in_clique[v]) {
        ++hits;
        center = v;
      }
    }
    if (hits != 1) return false;
    blues.push_back({center, comp});
  }
  std::sort(blues.begin(), blues.end(),
            [](const BlueClique& a, const BlueClique& b) { return a.center < b.center; });
  d.shape = ComponentShape::RbCliqueStar;
  d.clique = std::move(clique);
  d.blue_cliques = std::move(blues);
  return true;
}

}  // namespace detail

/// Per-component structural recognition of class T. Rejected components carry
/// a forbidden induced subgraph found by an independent scan.
inline TDecomposition recognize_T(const ColoredGraph& g) {
  detail::require_bicolored(g);
  TDecomposition out;
  for (auto& comp : connected_components(g)) {
    ComponentDecomposition d;
    d.vertices = std::move(comp);
    if (!detail::try_fence(g, d) && !detail::try_clique_star(g, d)) {
      d.shape = ComponentShape::Rejected;
      auto sub = induced_subgraph(g, d.vertices);
      if (auto w = find_forbidden_T(sub.graph)) {
        for (auto& v : w->vertices) v = sub.original[v];
        d.witness = std::move(w);
      }
    }
    out.components.push_back(std::move(d));
  }
  return out;
}

}  // namespace ecdel
