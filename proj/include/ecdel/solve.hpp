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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecdel/classify.hpp"
#include "ecdel/error.hpp"
#include "ecdel/graph.hpp"
#include "ecdel/pattern.hpp"

namespace ecdel {

/// Mutable view over a ColoredGraph that supports deleting and restoring
/// edges in O(1). Adjacency lists are those of the source graph; deleted
/// entries read as color 0.
class WorkingGraph {
 public:
  explicit WorkingGraph(const ColoredGraph& g) : g_(&g), matrix_(flat(g)) {}

  int n() const { return g_->n(); }
  ColorId color(VertexId u, VertexId v) const { return matrix_[index(u, v)]; }
  bool adjacent(VertexId u, VertexId v) const { return color(u, v) != 0; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return g_->neighbors(v); }

  void remove(const Edge& e) {
    matrix_[index(e.u, e.v)] = 0;
    matrix_[index(e.v, e.u)] = 0;
  }
  void restore(const Edge& e) {
    auto col = static_cast<std::uint16_t>(g_->color(e.u, e.v));
    matrix_[index(e.u, e.v)] = col;
    matrix_[index(e.v, e.u)] = col;
  }

 private:
  static std::vector<std::uint16_t> flat(const ColoredGraph& g) {
    std::vector<std::uint16_t> m(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n()), 0);
    for (const auto& e : g.edges()) {
      m[static_cast<std::size_t>(e.u) * g.n() + e.v] = static_cast<std::uint16_t>(e.color);
      m[static_cast<std::size_t>(e.v) * g.n() + e.u] = static_cast<std::uint16_t>(e.color);
    }
    return m;
  }
  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(g_->n()) +
           static_cast<std::size_t>(v);
  }

  const ColoredGraph* g_;
  std::vector<std::uint16_t> matrix_;
};

enum class SolveStatus { Yes, No, Optimum };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Yes: return "yes";
    case SolveStatus::No: return "no";
    case SolveStatus::Optimum: return "optimum";
  }
  return "unknown";
}

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t patterns_enumerated = 0;
  std::uint64_t subsets_tried = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::No;
  DeletionSet solution;
  SolveStats stats;

  bool feasible() const { return status != SolveStatus::No; }
};

enum class Algorithm { Brute, Branch, Cnd, TClass, Auto };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Brute: return "brute";
    case Algorithm::Branch: return "branch";
    case Algorithm::Cnd: return "cnd";
    case Algorithm::TClass: return "t-class";
    case Algorithm::Auto: return "auto";
  }
  return "unknown";
}

/// Resource caps. Exceeding any of them raises ResourceLimit.
struct Limits {
  std::size_t occurrence_cap = kDefaultOccurrenceCap;
  std::size_t brute_edge_bound = 24;
  std::size_t cnd_bundle_cap = 20;
  std::uint64_t branch_node_cap = 200'000'000;
  /// Auto picks cnd only when gamma^2 + gamma stays within this.
  int cnd_gamma_threshold = 30;
};

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void verify_or_throw(const ColoredGraph& g, const PatternSpec& spec, const DeletionSet& s) {
  if (!is_free(remove_edges(g, s), spec)) {
    throw Error(ErrorKind::PreconditionViolated, "internal: solver produced an invalid solution");
  }
}

inline std::vector<Edge> edge_keys(const ColoredGraph& g) {
  std::vector<Edge> out;
  out.reserve(g.m());
  for (const auto& e : g.edges()) out.push_back(e.key());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute force

/// Calls f(const DeletionSet&) -> bool on every size-`size` edge subset whose
/// removal makes g spec-free, in lexicographic order of edge indices. Stops
/// when f returns false.
template <typename F>
void for_each_feasible_subset(const ColoredGraph& g, const PatternSpec& spec, std::size_t size,
                              SolveStats& stats, F&& f) {
  const auto keys = detail::edge_keys(g);
  const std::size_t m = keys.size();
  if (size > m) return;
  WorkingGraph wg(g);
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    ++stats.subsets_tried;
    for (std::size_t i : idx) wg.remove(keys[i]);
    bool free = is_free(wg, spec);
    for (std::size_t i : idx) wg.restore(keys[i]);
    if (free) {
      DeletionSet s;
      for (std::size_t i : idx) s.insert(keys[i]);
      if (!f(s)) return;
    }
    // Next combination.
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == m - size + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Minimum solution by exhaustive search over subsets of increasing size.
/// The first feasible subset found is the canonically smallest minimum.
inline SolveResult brute_force(const ColoredGraph& g, const PatternSpec& spec,
                               const Limits& limits = {}) {
  spec.validate();
  if (g.m() > limits.brute_edge_bound) {
    throw Error(ErrorKind::ResourceLimit,
                std::to_string(g.m()) + " edges exceed the brute-force bound of " +
                    std::to_string(limits.brute_edge_bound));
  }
  detail::Stopwatch clock;
  SolveResult r;
  for (std::size_t size = 0; size <= g.m(); ++size) {
    bool found = false;
    for_each_feasible_subset(g, spec, size, r.stats, [&](const DeletionSet& s) {
      r.solution = s;
      found = true;
      return false;
    });
    if (found) break;
  }
  r.status = SolveStatus::Optimum;
  detail::verify_or_throw(g, spec, r.solution);
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Every feasible subset of exactly `size` edges, in canonical order.
inline std::vector<DeletionSet> brute_force_all(const ColoredGraph& g, const PatternSpec& spec,
                                                std::size_t size, const Limits& limits = {}) {
  spec.validate();
  if (g.m() > limits.brute_edge_bound) {
    throw Error(ErrorKind::ResourceLimit, "too many edges for brute force");
  }
  SolveStats stats;
  std::vector<DeletionSet> out;
  for_each_feasible_subset(g, spec, size, stats, [&](const DeletionSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Bounded search tree

struct BranchOptions {
  /// Branch only on conflict edges of the input when it is non-cascading.
  /// Ignored for subgraph-mode patterns, where cascading is not defined.
  bool restrict_to_conflict_edges = true;
  Limits limits;
};

namespace detail {

class Brancher {
 public:
  Brancher(const ColoredGraph& g, const PatternSpec& spec, const BranchOptions& opts,
           SolveStats& stats)
      : g_(g), spec_(spec), opts_(opts), stats_(stats), wg_(g),
        deletable_(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n()), 1) {
    if (opts.restrict_to_conflict_edges && spec.mode == OccurrenceMode::Induced) {
      auto status = cascade_status(g, spec);
      if (status.non_cascading()) {
        std::fill(deletable_.begin(), deletable_.end(), 0);
        for (const auto& e : status.conflict) set_deletable(e, true);
      }
    }
  }

  /// Greedy packing of occurrences with pairwise disjoint deletable edges.
  int root_lower_bound() {
    auto occs = collect();
    if (has_undeletable(occs)) return std::numeric_limits<int>::max();
    return packing_bound(occs);
  }

  bool search(int k) {
    if (++stats_.nodes_explored > opts_.limits.branch_node_cap) {
      throw Error(ErrorKind::ResourceLimit,
                  "branch node cap of " + std::to_string(opts_.limits.branch_node_cap) +
                      " exceeded");
    }
    auto occs = collect();
    if (occs.empty()) return true;
    if (k == 0 || has_undeletable(occs)) return false;
    if (packing_bound(occs) > k) return false;

    const auto& pick = *std::min_element(
        occs.begin(), occs.end(),
        [](const Candidate& a, const Candidate& b) { return a.edges.size() < b.edges.size(); });
    const std::vector<Edge> branch_edges = pick.edges;
    bool found = false;
    std::size_t i = 0;
    for (; i < branch_edges.size(); ++i) {
      const Edge& e = branch_edges[i];
      wg_.remove(e);
      set_deletable(e, false);
      deleted_.push_back(e);
      found = search(k - 1);
      if (found) break;
      deleted_.pop_back();
      wg_.restore(e);
      // e stays undeletable for the remaining siblings.
    }
    std::size_t marked = found ? i : branch_edges.size();
    for (std::size_t j = 0; j < marked; ++j) set_deletable(branch_edges[j], true);
    if (found) set_deletable(branch_edges[i], true);
    return found;
  }

  const std::vector<Edge>& deleted() const { return deleted_; }

 private:
  struct Candidate {
    std::vector<Edge> edges;  // deletable edges, canonical order
  };

  bool deletable(const Edge& e) const {
    return deletable_[static_cast<std::size_t>(e.u) * g_.n() + e.v] != 0;
  }
  void set_deletable(const Edge& e, bool on) {
    deletable_[static_cast<std::size_t>(e.u) * g_.n() + e.v] = on ? 1 : 0;
  }

  std::vector<Candidate> collect() {
    std::vector<Candidate> out;
    for_each_occurrence(wg_, spec_, [&](const Occurrence& occ) {
      ++stats_.patterns_enumerated;
      if (out.size() >= opts_.limits.occurrence_cap) {
        throw Error(ErrorKind::ResourceLimit, "occurrence cap exceeded");
      }
      Candidate c;
      for (const auto& e : occurrence_edges(occ, spec_.kind)) {
        if (deletable(e)) c.edges.push_back(e);
      }
      std::sort(c.edges.begin(), c.edges.end());
      bool dead = c.edges.empty();
      out.push_back(std::move(c));
      return !dead;
    });
    return out;
  }

  static bool has_undeletable(const std::vector<Candidate>& occs) {
    return !occs.empty() && occs.back().edges.empty();
  }

  std::size_t cell(const Edge& e) const {
    return static_cast<std::size_t>(e.u) * static_cast<std::size_t>(g_.n()) +
           static_cast<std::size_t>(e.v);
  }

  // Occurrences with few deletable edges, then those whose edges are shared
  // by few other occurrences, are packed first.
  int packing_bound(const std::vector<Candidate>& occs) {
    used_.assign(static_cast<std::size_t>(g_.n()) * static_cast<std::size_t>(g_.n()), 0);
    for (const auto& occ : occs) {
      for (const auto& e : occ.edges) ++used_[cell(e)];
    }
    std::vector<std::pair<std::size_t, std::size_t>> key(occs.size());
    for (std::size_t i = 0; i < occs.size(); ++i) {
      std::size_t load = 0;
      for (const auto& e : occs[i].edges) load += used_[cell(e)];
      key[i] = {occs[i].edges.size(), load};
    }
    std::vector<std::size_t> order(occs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    std::fill(used_.begin(), used_.end(), 0);
    int bound = 0;
    for (std::size_t i : order) {
      bool clash = false;
      for (const auto& e : occs[i].edges) {
        if (used_[cell(e)]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (const auto& e : occs[i].edges) used_[cell(e)] = 1;
      ++bound;
    }
    return bound;
  }

  const ColoredGraph& g_;
  const PatternSpec& spec_;
  const BranchOptions& opts_;
  SolveStats& stats_;
  WorkingGraph wg_;
  std::vector<std::uint8_t> deletable_;
  std::vector<std::uint32_t> used_;
  std::vector<Edge> deleted_;
};

}  // namespace detail

/// Decides whether at most k deletions suffice. Each node picks the
/// occurrence with the fewest deletable edges and branches on them in
/// canonical order; branch i deletes e_i and keeps e_1..e_{i-1}.
inline SolveResult branch_solve(const ColoredGraph& g, const PatternSpec& spec, int k,
                                const BranchOptions& opts = {}) {
  spec.validate();
  detail::Stopwatch clock;
  SolveResult r;
  detail::Brancher b(g, spec, opts, r.stats);
  if (k >= 0 && b.search(k)) {
    r.status = SolveStatus::Yes;
    r.solution.insert(b.deleted().begin(), b.deleted().end());
    detail::verify_or_throw(g, spec, r.solution);
  } else {
    r.status = SolveStatus::No;
  }
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Minimum solution by iterative deepening over the budget, starting at the
/// packing lower bound.
inline SolveResult branch_optimize(const ColoredGraph& g, const PatternSpec& spec,
                                   const BranchOptions& opts = {}) {
  spec.validate();
  detail::Stopwatch clock;
  SolveResult r;
  int start = 0;
  {
    detail::Brancher probe(g, spec, opts, r.stats);
    start = probe.root_lower_bound();
  }
  if (start == std::numeric_limits<int>::max()) {
    throw Error(ErrorKind::PreconditionViolated, "internal: an occurrence has no deletable edge");
  }
  for (int k = start; k <= static_cast<int>(g.m()); ++k) {
    detail::Brancher b(g, spec, opts, r.stats);
    if (b.search(k)) {
      r.status = SolveStatus::Optimum;
      r.solution.insert(b.deleted().begin(), b.deleted().end());
      detail::verify_or_throw(g, spec, r.solution);
      break;
    }
  }
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

// ---------------------------------------------------------------------------
// Colored neighborhood diversity

/// Deletion units: all edges between two classes, and all edges inside a
/// clique class. Each bundle is sorted.
inline std::vector<std::vector<Edge>> cnd_bundles(const ColoredGraph& g, const ClassPartition& p) {
  const int gamma = p.gamma();
  std::vector<std::vector<std::vector<Edge>>> between(
      static_cast<std::size_t>(gamma), std::vector<std::vector<Edge>>(static_cast<std::size_t>(gamma)));
  for (const auto& e : g.edges()) {
    int a = p.class_of[e.u];
    int b = p.class_of[e.v];
    if (a > b) std::swap(a, b);
    between[a][b].push_back(e.key());
  }
  std::vector<std::vector<Edge>> out;
  for (int a = 0; a < gamma; ++a) {
    for (int b = a; b < gamma; ++b) {
      if (!between[a][b].empty()) out.push_back(std::move(between[a][b]));
    }
  }
  return out;
}

/// A set S is consistent with class K if every vertex outside K keeps either
/// all or none of its edges into K.
inline bool is_consistent(const ColoredGraph& g, const ClassPartition& p, const DeletionSet& s) {
  for (const auto& cls : p.classes) {
    if (cls.size() < 2) continue;
    for (VertexId x = 0; x < g.n(); ++x) {
      if (std::find(cls.begin(), cls.end(), x) != cls.end()) continue;
      int kept = 0, removed = 0;
      for (VertexId v : cls) {
        if (!g.adjacent(x, v)) continue;
        if (s.count(make_edge(x, v))) ++removed;
        else ++kept;
      }
      if (kept && removed) return false;
    }
  }
  return true;
}

/// Decides the budget-k instance by trying every union of bundles. Among the
/// minimum-size feasible unions the canonically smallest is returned.
inline SolveResult cnd_solve(const ColoredGraph& g, const PatternSpec& spec, int k,
                             const Limits& limits = {}) {
  spec.validate();
  if (!spec_is_color_diverse(spec)) {
    throw Error(ErrorKind::SpecNotColorDiverse,
                to_string(spec) +
                    " is not color diverse; e.g. a 2-colored C4 with colors b,b,r,r has a "
                    "size-1 solution but no consistent one");
  }
  if (spec.mode != OccurrenceMode::Induced) {
    throw Error(ErrorKind::InvalidSpec, "cnd requires induced occurrences");
  }
  detail::Stopwatch clock;
  SolveResult r;
  r.status = SolveStatus::No;
  auto partition = colored_classes(g);
  auto bundles = cnd_bundles(g, partition);
  if (bundles.size() > limits.cnd_bundle_cap) {
    throw Error(ErrorKind::ResourceLimit,
                std::to_string(bundles.size()) + " bundles exceed the cap of " +
                    std::to_string(limits.cnd_bundle_cap));
  }
  const std::size_t count = bundles.size();
  std::vector<std::pair<std::size_t, std::uint64_t>> masks;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::size_t size = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1) size += bundles[i].size();
    }
    if (k >= 0 && size <= static_cast<std::size_t>(k)) masks.emplace_back(size, mask);
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  WorkingGraph wg(g);
  std::optional<std::size_t> best_size;
  for (const auto& [size, mask] : masks) {
    if (best_size && size > *best_size) break;
    ++r.stats.subsets_tried;
    DeletionSet s;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1) s.insert(bundles[i].begin(), bundles[i].end());
    }
    for (const auto& e : s) wg.remove(e);
    bool free = is_free(wg, spec);
    for (const auto& e : s) wg.restore(e);
    if (!free) continue;
    if (!best_size || s < r.solution) r.solution = std::move(s);
    best_size = size;
    r.status = SolveStatus::Yes;
  }
  if (r.feasible()) detail::verify_or_throw(g, spec, r.solution);
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline SolveResult cnd_optimize(const ColoredGraph& g, const PatternSpec& spec,
                                const Limits& limits = {}) {
  auto r = cnd_solve(g, spec, static_cast<int>(g.m()), limits);
  r.status = SolveStatus::Optimum;
  return r;
}

// ---------------------------------------------------------------------------
// Bicolored P4 deletion on class T

namespace detail {

inline DeletionSet solve_fence(const ComponentDecomposition& d) {
  DeletionSet s;
  if (d.k1.size() == 2 && d.k2.size() == 2 && d.matching.size() == 2) return s;
  for (const auto& e : d.matching) s.insert(e);
  return s;
}

inline DeletionSet solve_clique_star(const ColoredGraph& g, const ComponentDecomposition& d) {
  auto cliques = d.blue_cliques;
  std::stable_sort(cliques.begin(), cliques.end(), [](const BlueClique& a, const BlueClique& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.center < b.center;
  });
  const auto sub = induced_subgraph(g, d.vertices);
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) local[sub.original[i]] = static_cast<int>(i);
  const auto spec = PatternSpec::path(4, 2);

  std::optional<DeletionSet> best;
  const std::size_t count = cliques.size();
  for (std::size_t p = 1; p <= count; ++p) {
    DeletionSet s;
    for (std::size_t q = 1; q < p; ++q) {
      VertexId cq = cliques[q].center;
      for (VertexId w : g.color_neighbors(cq, kRed)) s.insert(make_edge(cq, w));
    }
    for (std::size_t q = p; q < count; ++q) {
      VertexId cq = cliques[q].center;
      for (VertexId w : cliques[q].members) {
        if (w != cq) s.insert(make_edge(cq, w));
      }
    }
    if (best && s.size() >= best->size()) continue;
    DeletionSet local_s;
    for (const auto& e : s) local_s.insert(make_edge(local[e.u], local[e.v]));
    if (!is_free(remove_edges(sub.graph, local_s), spec)) continue;
    best = std::move(s);
  }
  if (!best) throw Error(ErrorKind::PreconditionViolated, "internal: no clique-star candidate verified");
  return *best;
}

}  // namespace detail

/// Exact bicolored P4 deletion on class T, component by component.
inline SolveResult solve_2p4d_on_T(const ColoredGraph& g) {
  detail::Stopwatch clock;
  auto dec = recognize_T(g);
  if (const auto* bad = dec.first_rejection()) {
    std::string msg = "component containing vertex " + std::to_string(bad->vertices.front() + 1);
    if (bad->witness) {
      msg += " has forbidden induced subgraph (";
      msg += bad->witness->type;
      msg += ") on";
      for (VertexId v : bad->witness->vertices) msg += " " + std::to_string(v + 1);
    }
    throw Error(ErrorKind::NotInClassT, msg);
  }
  SolveResult r;
  for (const auto& comp : dec.components) {
    DeletionSet part = comp.shape == ComponentShape::RbFence ? detail::solve_fence(comp)
                                                             : detail::solve_clique_star(g, comp);
    r.solution.insert(part.begin(), part.end());
  }
  r.status = SolveStatus::Optimum;
  detail::verify_or_throw(g, PatternSpec::path(4, 2), r.solution);
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

// ---------------------------------------------------------------------------
// Conflict-edge restriction

/// Returns S ∩ X for a non-cascading G, where X is the set of conflict edges.
inline DeletionSet restrict_solution(const ColoredGraph& g, const PatternSpec& spec,
                                     const DeletionSet& s) {
  spec.validate();
  auto status = cascade_status(g, spec);
  if (!status.non_cascading()) {
    throw Error(ErrorKind::PreconditionViolated, "graph is cascading");
  }
  for (const auto& e : s) {
    if (e.u < 0 || e.v >= g.n() || !g.has_edge(e)) {
      throw Error(ErrorKind::EdgeNotPresent,
                  "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
    }
  }
  for_each_occurrence(g, spec.with_mode(OccurrenceMode::Induced), [&](const Occurrence& occ) {
    for (const auto& e : occurrence_edges(occ, spec.kind)) {
      if (s.count(e)) return true;
    }
    throw Error(ErrorKind::PreconditionViolated,
                "occurrence " + format_occurrence(occ) + " is not broken");
  });
  DeletionSet out;
  for (const auto& e : s) {
    if (status.conflict.count(e)) out.insert(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch

struct SolveRequest {
  ColoredGraph graph;
  PatternSpec spec;
  /// Absent: optimize.
  std::optional<int> k;
  Algorithm algorithm = Algorithm::Auto;
  Limits limits;
  bool restrict_to_conflict_edges = true;
};

inline bool t_class_applicable(const ColoredGraph& g, const PatternSpec& spec) {
  if (spec != PatternSpec::path(4, 2)) return false;
  for (const auto& e : g.edges()) {
    if (e.color > 2) return false;
  }
  return recognize_T(g).accepted();
}

inline Algorithm resolve_algorithm(const SolveRequest& req) {
  if (req.algorithm != Algorithm::Auto) return req.algorithm;
  if (t_class_applicable(req.graph, req.spec)) return Algorithm::TClass;
  if (req.spec.mode == OccurrenceMode::Induced && spec_is_color_diverse(req.spec)) {
    int gamma = colored_classes(req.graph).gamma();
    if (gamma * gamma + gamma <= req.limits.cnd_gamma_threshold) return Algorithm::Cnd;
  }
  return Algorithm::Branch;
}

inline SolveResult solve(const SolveRequest& req) {
  req.spec.validate();
  const auto& g = req.graph;
  const auto& spec = req.spec;
  auto budgeted = [&](SolveResult r) {
    if (!req.k) return r;
    if (r.solution.size() <= static_cast<std::size_t>(*req.k)) {
      r.status = SolveStatus::Yes;
    } else {
      r.status = SolveStatus::No;
      r.solution.clear();
    }
    return r;
  };
  switch (resolve_algorithm(req)) {
    case Algorithm::Brute:
      return budgeted(brute_force(g, spec, req.limits));
    case Algorithm::Branch: {
      BranchOptions opts{req.restrict_to_conflict_edges, req.limits};
      if (req.k) return branch_solve(g, spec, *req.k, opts);
      return branch_optimize(g, spec, opts);
    }
    case Algorithm::Cnd:
      if (req.k) return cnd_solve(g, spec, *req.k, req.limits);
      return cnd_optimize(g, spec, req.limits);
    case Algorithm::TClass:
      if (spec != PatternSpec::path(4, 2)) {
        throw Error(ErrorKind::InvalidSpec, "t-class solves only the induced 2-colored P4");
      }
      return budgeted(solve_2p4d_on_T(g));
    case Algorithm::Auto:
      break;
  }
  throw Error(ErrorKind::InvalidSpec, "unresolved algorithm");
}

}  // namespace ecdel
