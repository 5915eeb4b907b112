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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecdel/error.hpp"

namespace ecdel {

/// Dense 0-based vertex index. Files use 1-based ids.
using VertexId = int;
/// Edge color in [1, c]. 0 is reserved for "no edge" in adjacency lookups.
using ColorId = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct ColoredEdge {
  VertexId u = 0;
  VertexId v = 0;
  ColorId color = 0;

  Edge key() const { return make_edge(u, v); }
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// A set of edges of one reference graph, iterated in canonical order.
using DeletionSet = std::set<Edge>;

/// Simple undirected graph whose edges carry exactly one color each.
///
/// Immutable once built; every mutating operation returns a new graph.
/// Color classes may be empty (derived graphs routinely empty a class).
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Validates and canonicalizes `edges`. Throws Error on loops, duplicate
  /// pairs, or ids/colors out of range.
  ColoredGraph(int n, int c, std::vector<ColoredEdge> edges)
      : n_(n), c_(c), edges_(std::move(edges)) {
    if (n_ < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    if (c_ < 0 || c_ > std::numeric_limits<std::uint16_t>::max()) {
      throw Error(ErrorKind::ColorOutOfRange, "color count out of range");
    }
    for (auto& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} outside [0," + std::to_string(n_) + ")");
      }
      if (e.u == e.v) {
        throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.u));
      }
      if (e.color < 1 || e.color > c_) {
        throw Error(ErrorKind::ColorOutOfRange,
                    "color " + std::to_string(e.color) + " outside [1," +
                        std::to_string(c_) + "]");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    matrix_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
      auto& cell = matrix_[index(e.u, e.v)];
      if (cell != 0) {
        throw Error(ErrorKind::DuplicateEdge,
                    "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
      cell = static_cast<std::uint16_t>(e.color);
      matrix_[index(e.v, e.u)] = cell;
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  std::size_t m() const noexcept { return edges_.size(); }

  /// Edges in canonical order (u < v, lexicographic).
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }

  /// Color of {u,v}, or 0 when the pair is not an edge.
  ColorId color(VertexId u, VertexId v) const { return matrix_[index(u, v)]; }
  bool adjacent(VertexId u, VertexId v) const { return color(u, v) != 0; }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  /// The i-neighborhood N^i(v), sorted.
  std::vector<VertexId> color_neighbors(VertexId v, ColorId i) const {
    std::vector<VertexId> out;
    for (VertexId w : adj_[v]) {
      if (color(v, w) == i) out.push_back(w);
    }
    return out;
  }

  /// Position of {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const ColoredEdge& a, const Edge& b) {
                                 return a.key() < b;
                               });
    if (it == edges_.end() || it->key() != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  /// Edge count per color; entry i-1 holds |E_i|.
  std::vector<std::size_t> color_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(c_), 0);
    for (const auto& e : edges_) ++counts[e.color - 1];
    return counts;
  }

  /// Colors in [1,c] that no edge uses.
  std::vector<ColorId> empty_colors() const {
    auto counts = color_counts();
    std::vector<ColorId> out;
    for (int i = 0; i < c_; ++i) {
      if (counts[i] == 0) out.push_back(i + 1);
    }
    return out;
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.c_ == b.c_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_ = 0;
  int c_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint16_t> matrix_;
};

/// Incremental edge collector for generators. Vertices are handed out densely.
class GraphBuilder {
 public:
  VertexId add_vertex() { return n_++; }
  VertexId add_vertices(int count) {
    VertexId first = n_;
    n_ += count;
    return first;
  }
  void add_edge(VertexId u, VertexId v, ColorId color) {
    edges_.push_back({u, v, color});
  }
  int n() const { return n_; }

  ColoredGraph build(int c) const { return ColoredGraph(n_, c, edges_); }

 private:
  int n_ = 0;
  std::vector<ColoredEdge> edges_;
};

// ---------------------------------------------------------------------------
// ECG text format

namespace detail {

inline bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t i = 0;
  if (token[0] == '-' || token[0] == '+') i = 1;
  if (i == token.size()) return false;
  for (std::size_t j = i; j < token.size(); ++j) {
    if (token[j] < '0' || token[j] > '9') return false;
  }
  try {
    out = std::stoll(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

}  // namespace detail

/// Parses the ECG format:
///   c <comment>
///   p ecg <n> <m> <c>
///   e <u> <v> <color>     (m times, 1-based ids)
inline ColoredGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int header_line = 0;
  long long n = 0, m = 0, c = 0;
  std::vector<ColoredEdge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw Error(ErrorKind::MalformedHeader, "second header", line_no);
      if (tokens.size() != 5 || tokens[1] != "ecg" ||
          !detail::parse_int(tokens[2], n) || !detail::parse_int(tokens[3], m) ||
          !detail::parse_int(tokens[4], c) || n < 0 || m < 0 || c < 0 ||
          n > std::numeric_limits<int>::max() / 2 ||
          c > std::numeric_limits<std::uint16_t>::max()) {
        throw Error(ErrorKind::MalformedHeader, "expected 'p ecg <n> <m> <c>'", line_no);
      }
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (tokens[0] == "e") {
      if (!have_header) throw Error(ErrorKind::MalformedHeader, "edge before header", line_no);
      long long u = 0, v = 0, col = 0;
      if (tokens.size() != 4 || !detail::parse_int(tokens[1], u) ||
          !detail::parse_int(tokens[2], v) || !detail::parse_int(tokens[3], col)) {
        throw Error(ErrorKind::MalformedHeader, "expected 'e <u> <v> <color>'", line_no);
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex outside [1," + std::to_string(n) + "]", line_no);
      }
      if (u == v) throw Error(ErrorKind::LoopEdge, "loop at " + std::to_string(u), line_no);
      if (col < 1 || col > c) {
        throw Error(ErrorKind::ColorOutOfRange,
                    "color outside [1," + std::to_string(c) + "]", line_no);
      }
      Edge key = make_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      if (!seen.insert(key).second) {
        throw Error(ErrorKind::DuplicateEdge,
                    "pair {" + std::to_string(u) + "," + std::to_string(v) + "}", line_no);
      }
      edges.push_back({key.u, key.v, static_cast<ColorId>(col)});
      continue;
    }
    throw Error(ErrorKind::MalformedHeader, "unrecognized line '" + tokens[0] + "'", line_no);
  }
  if (!have_header) throw Error(ErrorKind::MalformedHeader, "missing 'p ecg' header", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorKind::MalformedHeader,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()),
                header_line);
  }
  return ColoredGraph(static_cast<int>(n), static_cast<int>(c), std::move(edges));
}

inline ColoredGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void serialize_graph(const ColoredGraph& g, std::ostream& out) {
  out << "p ecg " << g.n() << ' ' << g.m() << ' ' << g.c() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.color << '\n';
  }
}

inline std::string serialize_graph(const ColoredGraph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Derived graphs

/// G - S. Vertex set and color count are unchanged.
inline ColoredGraph remove_edges(const ColoredGraph& g, const DeletionSet& s) {
  for (const auto& e : s) {
    if (e.u < 0 || e.v >= g.n() || e.u >= e.v || !g.has_edge(e)) {
      throw Error(ErrorKind::EdgeNotPresent,
                  "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
    }
  }
  std::vector<ColoredEdge> kept;
  kept.reserve(g.m() - s.size());
  for (const auto& e : g.edges()) {
    if (!s.count(e.key())) kept.push_back(e);
  }
  return ColoredGraph(g.n(), g.c(), std::move(kept));
}

/// Adds `extra` to g; used to undo remove_edges in tests and generators.
inline ColoredGraph add_edges(const ColoredGraph& g, const std::vector<ColoredEdge>& extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return ColoredGraph(g.n(), g.c(), std::move(edges));
}

struct InducedSubgraph {
  ColoredGraph graph;
  /// original[i] is the id in the source graph of new vertex i.
  std::vector<VertexId> original;
};

/// G[V']. New ids follow the ascending order of the selected original ids.
inline InducedSubgraph induced_subgraph(const ColoredGraph& g,
                                        const std::vector<VertexId>& vertices) {
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n()) {
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(sorted[i]));
    }
    local[sorted[i]] = static_cast<int>(i);
  }
  std::vector<ColoredEdge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v], e.color});
    }
  }
  return {ColoredGraph(static_cast<int>(sorted.size()), g.c(), std::move(edges)),
          std::move(sorted)};
}

/// Merges colors >= c into c.
inline ColoredGraph recolor_to_c(const ColoredGraph& g, int c) {
  if (c < 1) throw Error(ErrorKind::InvalidParams, "target color count must be >= 1");
  std::vector<ColoredEdge> edges = g.edges();
  for (auto& e : edges) e.color = std::min(e.color, c);
  return ColoredGraph(g.n(), c, std::move(edges));
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<VertexId>> connected_components(const ColoredGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

struct StructuralStats {
  int max_degree = 0;
  /// Length of a shortest cycle; nullopt for forests.
  std::optional<int> girth;
  int component_count = 0;
  /// Entry i-1 is true iff (V, E_i) is a disjoint union of cliques.
  std::vector<bool> per_color_is_cluster;
};

/// Girth by BFS from every vertex, O(n*m).
inline std::optional<int> girth(const ColoredGraph& g) {
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.n()));
  std::vector<VertexId> parent(static_cast<std::size_t>(g.n()));
  for (VertexId root = 0; root < g.n(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> queue;
    dist[root] = 0;
    parent[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      if (best && 2 * dist[x] + 1 >= *best) break;
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline bool color_is_cluster(const ColoredGraph& g, ColorId i) {
  for (VertexId v = 0; v < g.n(); ++v) {
    auto nbrs = g.color_neighbors(v, i);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (g.color(nbrs[a], nbrs[b]) != i) return false;
      }
    }
  }
  return true;
}

inline StructuralStats structural_stats(const ColoredGraph& g) {
  StructuralStats stats;
  for (VertexId v = 0; v < g.n(); ++v) stats.max_degree = std::max(stats.max_degree, g.degree(v));
  stats.girth = girth(g);
  stats.component_count = static_cast<int>(connected_components(g).size());
  for (ColorId i = 1; i <= g.c(); ++i) stats.per_color_is_cluster.push_back(color_is_cluster(g, i));
  return stats;
}

}  // namespace ecdel
