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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "ecdel/error.hpp"
#include "ecdel/graph.hpp"

namespace ecdel {

enum class PatternKind { Path, Cycle };
enum class OccurrenceMode { Induced, Subgraph };

/// Forbidden structure: a path or cycle on `length` vertices whose edges use
/// exactly `colors` distinct colors.
struct PatternSpec {
  PatternKind kind = PatternKind::Path;
  int length = 3;
  int colors = 1;
  OccurrenceMode mode = OccurrenceMode::Induced;

  static PatternSpec path(int length, int colors,
                          OccurrenceMode mode = OccurrenceMode::Induced) {
    return {PatternKind::Path, length, colors, mode};
  }
  static PatternSpec cycle(int length, int colors,
                           OccurrenceMode mode = OccurrenceMode::Induced) {
    return {PatternKind::Cycle, length, colors, mode};
  }

  /// Number of edges of one occurrence.
  int edge_count() const { return kind == PatternKind::Path ? length - 1 : length; }

  PatternSpec with_mode(OccurrenceMode m) const {
    PatternSpec s = *this;
    s.mode = m;
    return s;
  }

  void validate() const {
    if (colors < 1) throw Error(ErrorKind::InvalidSpec, "color count must be >= 1");
    if (kind == PatternKind::Path && length < 1) {
      throw Error(ErrorKind::InvalidSpec, "path length must be >= 1");
    }
    if (kind == PatternKind::Cycle && length < 3) {
      throw Error(ErrorKind::InvalidSpec, "cycle length must be >= 3");
    }
  }

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

inline std::string to_string(const PatternSpec& s) {
  std::string out = std::to_string(s.colors) +
                    (s.kind == PatternKind::Path ? "-colored P" : "-colored C") +
                    std::to_string(s.length);
  if (s.mode == OccurrenceMode::Subgraph) out += " (subgraph)";
  return out;
}

/// One occurrence in canonical orientation. For paths v1 < vl; for cycles the
/// sequence starts at its minimum vertex and v2 < vl.
struct Occurrence {
  std::vector<VertexId> vertices;
  /// colors[i] is the color of {vertices[i], vertices[i+1]}; for cycles the
  /// last entry is the closing edge.
  std::vector<ColorId> colors;

  friend auto operator<=>(const Occurrence& a, const Occurrence& b) {
    return a.vertices <=> b.vertices;
  }
  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.vertices == b.vertices;
  }
};

/// Edges of an occurrence, in traversal order.
inline std::vector<Edge> occurrence_edges(const Occurrence& occ, PatternKind kind) {
  std::vector<Edge> out;
  const auto& vs = occ.vertices;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) out.push_back(make_edge(vs[i], vs[i + 1]));
  if (kind == PatternKind::Cycle && vs.size() >= 3) out.push_back(make_edge(vs.back(), vs.front()));
  return out;
}

/// Vertex pairs of the occurrence that are not pattern edges.
inline std::vector<Edge> occurrence_non_edges(const Occurrence& occ, PatternKind kind) {
  std::vector<Edge> out;
  const auto& vs = occ.vertices;
  const std::size_t len = vs.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (kind == PatternKind::Cycle && i == 0 && j == len - 1) continue;
      out.push_back(make_edge(vs[i], vs[j]));
    }
  }
  return out;
}

/// Re-checks an occurrence against a graph view by direct lookups.
template <typename G>
bool verify_occurrence(const G& g, const PatternSpec& spec, const Occurrence& occ) {
  const auto& vs = occ.vertices;
  if (static_cast<int>(vs.size()) != spec.length) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.n()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  auto edges = occurrence_edges(occ, spec.kind);
  if (edges.size() != occ.colors.size()) return false;
  std::vector<ColorId> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ColorId col = g.color(edges[i].u, edges[i].v);
    if (col == 0 || col != occ.colors[i]) return false;
    if (std::find(seen.begin(), seen.end(), col) == seen.end()) seen.push_back(col);
  }
  int distinct = static_cast<int>(seen.size());
  if (distinct != spec.colors) return false;
  if (spec.mode == OccurrenceMode::Induced) {
    for (const auto& e : occurrence_non_edges(occ, spec.kind)) {
      if (g.color(e.u, e.v) != 0) return false;
    }
  }
  if (spec.kind == PatternKind::Path) {
    if (vs.size() > 1 && vs.front() > vs.back()) return false;
  } else {
    for (std::size_t i = 1; i < vs.size(); ++i) {
      if (vs[i] < vs[0]) return false;
    }
    if (vs[1] > vs.back()) return false;
  }
  return true;
}

namespace detail {

// Depth-first extension of partial walks. `G` exposes n(), color(u, v) with 0
// meaning "no edge", and neighbors(u) (entries of color 0 are skipped, so a
// view may keep stale adjacency lists). A partial walk is abandoned as soon
// as two non-consecutive vertices satisfy `blocked`.
template <typename G, typename F, typename B>
class Enumerator {
 public:
  Enumerator(const G& g, const PatternSpec& spec, F& f, const B& blocked)
      : g_(g), spec_(spec), f_(f), blocked_(blocked),
        counts_(static_cast<std::size_t>(spec.colors) + 1, 0) {
    seq_.reserve(static_cast<std::size_t>(spec.length));
    cols_.reserve(static_cast<std::size_t>(spec.length));
  }

  /// Returns false if the callback asked to stop.
  bool run() {
    if (spec_.kind == PatternKind::Path && spec_.length == 1) return true;  // no edges, c >= 1
    for (VertexId s = 0; s < g_.n(); ++s) {
      seq_.assign(1, s);
      if (!extend()) return false;
    }
    return true;
  }

 private:
  bool push_color(ColorId col) {
    if (static_cast<std::size_t>(col) >= counts_.size()) counts_.resize(static_cast<std::size_t>(col) + 1, 0);
    if (counts_[col]++ == 0) ++distinct_;
    cols_.push_back(col);
    return true;
  }
  void pop_color() {
    ColorId col = cols_.back();
    cols_.pop_back();
    if (--counts_[col] == 0) --distinct_;
  }
  bool color_feasible() const {
    int remaining = spec_.edge_count() - static_cast<int>(cols_.size());
    return distinct_ <= spec_.colors && distinct_ + remaining >= spec_.colors;
  }

  bool extend() {
    const int len = spec_.length;
    const bool cycle = spec_.kind == PatternKind::Cycle;
    const VertexId last = seq_.back();
    const std::size_t pos = seq_.size();  // index of the vertex being added
    const bool closing = static_cast<int>(pos) == len - 1;
    for (VertexId w : g_.neighbors(last)) {
      ColorId col = g_.color(last, w);
      if (col == 0) continue;
      if (cycle && w <= seq_[0]) continue;
      if (closing && !cycle && w < seq_[0]) continue;
      if (on_path(w)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < pos; ++i) {
        if (cycle && closing && i == 0) continue;
        if (blocked_(seq_[i], w)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (!push_color(col)) continue;
      seq_.push_back(w);
      bool keep_going = true;
      if (closing) {
        if (cycle) {
          ColorId back = g_.color(w, seq_[0]);
          if (back != 0 && seq_[1] < w && push_color(back)) {
            if (distinct_ == spec_.colors) keep_going = emit();
            pop_color();
          }
        } else if (distinct_ == spec_.colors) {
          keep_going = emit();
        }
      } else if (color_feasible()) {
        keep_going = extend();
      }
      seq_.pop_back();
      pop_color();
      if (!keep_going) return false;
    }
    return true;
  }

  bool on_path(VertexId w) const {
    for (VertexId x : seq_) {
      if (x == w) return true;
    }
    return false;
  }

  bool emit() {
    Occurrence occ{seq_, cols_};
    return f_(occ);
  }

  const G& g_;
  const PatternSpec& spec_;
  F& f_;
  const B& blocked_;
  std::vector<VertexId> seq_;
  std::vector<ColorId> cols_;
  std::vector<int> counts_;
  int distinct_ = 0;
};

}  // namespace detail

/// Calls f(const Occurrence&) -> bool for every occurrence in canonical
/// order, stopping early when f returns false. Returns false iff stopped.
template <typename G, typename F>
bool for_each_occurrence(const G& g, const PatternSpec& spec, F&& f) {
  spec.validate();
  if (spec.mode == OccurrenceMode::Induced) {
    auto chord = [&g](VertexId a, VertexId b) { return g.color(a, b) != 0; };
    detail::Enumerator<G, std::remove_reference_t<F>, decltype(chord)> e(g, spec, f, chord);
    return e.run();
  }
  auto none = [](VertexId, VertexId) { return false; };
  detail::Enumerator<G, std::remove_reference_t<F>, decltype(none)> e(g, spec, f, none);
  return e.run();
}

/// Like for_each_occurrence in Subgraph mode, but skips every sequence with
/// a non-consecutive pair {a,b} for which blocked(a, b) holds.
template <typename G, typename B, typename F>
bool for_each_occurrence_avoiding(const G& g, const PatternSpec& spec, const B& blocked, F&& f) {
  spec.validate();
  detail::Enumerator<G, std::remove_reference_t<F>, B> e(g, spec, f, blocked);
  return e.run();
}

/// The canonically smallest occurrence, if any.
template <typename G>
std::optional<Occurrence> find_one(const G& g, const PatternSpec& spec) {
  std::optional<Occurrence> out;
  for_each_occurrence(g, spec, [&](const Occurrence& occ) {
    out = occ;
    return false;
  });
  return out;
}

template <typename G>
bool is_free(const G& g, const PatternSpec& spec) {
  return !find_one(g, spec).has_value();
}

inline constexpr std::size_t kDefaultOccurrenceCap = 10'000'000;

/// All occurrences in canonical order. Throws ResourceLimit past `cap`.
template <typename G>
std::vector<Occurrence> enumerate(const G& g, const PatternSpec& spec,
                                  std::size_t cap = kDefaultOccurrenceCap) {
  std::vector<Occurrence> out;
  for_each_occurrence(g, spec, [&](const Occurrence& occ) {
    if (out.size() >= cap) {
      throw Error(ErrorKind::ResourceLimit,
                  "more than " + std::to_string(cap) + " occurrences");
    }
    out.push_back(occ);
    return true;
  });
  return out;
}

template <typename G>
std::size_t count_occurrences(const G& g, const PatternSpec& spec) {
  std::size_t count = 0;
  for_each_occurrence(g, spec, [&](const Occurrence&) {
    ++count;
    return true;
  });
  return count;
}

/// Union of the edge sets of all induced occurrences.
template <typename G>
DeletionSet conflict_edges(const G& g, const PatternSpec& spec) {
  DeletionSet x;
  for_each_occurrence(g, spec.with_mode(OccurrenceMode::Induced), [&](const Occurrence& occ) {
    for (const auto& e : occurrence_edges(occ, spec.kind)) x.insert(e);
    return true;
  });
  return x;
}

/// 1-based, space-separated vertex sequence.
inline std::string format_occurrence(const Occurrence& occ) {
  std::string out;
  for (std::size_t i = 0; i < occ.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(occ.vertices[i] + 1);
  }
  return out;
}

}  // namespace ecdel
