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
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ecdel/classify.hpp"
#include "ecdel/error.hpp"
#include "ecdel/graph.hpp"
#include "ecdel/pattern.hpp"

namespace ecdel {

// ---------------------------------------------------------------------------
// Source instances

/// 3-CNF in which every literal occurs exactly twice. Literals are signed,
/// 1-based variable indices.
struct CnfB2Formula {
  int eta = 0;
  std::vector<std::array<int, 3>> clauses;

  int mu() const { return static_cast<int>(clauses.size()); }

  void validate() const {
    if (eta < 1) throw Error(ErrorKind::MalformedFormula, "formula needs at least one variable");
    std::vector<int> pos(static_cast<std::size_t>(eta) + 1, 0), neg(pos);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      for (int lit : clauses[j]) {
        if (lit == 0 || std::abs(lit) > eta) {
          throw Error(ErrorKind::MalformedFormula,
                      "clause " + std::to_string(j + 1) + " has literal " + std::to_string(lit) +
                          " outside the variable range");
        }
        (lit > 0 ? pos : neg)[std::abs(lit)]++;
      }
    }
    for (int i = 1; i <= eta; ++i) {
      if (pos[i] != 2 || neg[i] != 2) {
        throw Error(ErrorKind::MalformedFormula,
                    "variable " + std::to_string(i) + " occurs " + std::to_string(pos[i]) +
                        " times positively and " + std::to_string(neg[i]) +
                        " times negatively; both must be 2");
      }
    }
  }

  bool satisfied_by(std::uint32_t assignment) const {
    for (const auto& clause : clauses) {
      bool sat = false;
      for (int lit : clause) {
        bool value = (assignment >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }
};

/// DIMACS CNF. Clauses may span lines; each ends with 0.
inline CnfB2Formula parse_dimacs(std::istream& in) {
  CnfB2Formula f;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long declared = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long long n = 0;
      if (have_header || !(tokens >> fmt >> n >> declared) || fmt != "cnf" || n < 1 ||
          declared < 0 || n > 64) {
        throw Error(ErrorKind::MalformedFormula, "expected 'p cnf <vars> <clauses>'", line_no);
      }
      f.eta = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorKind::MalformedFormula, "clause before header", line_no);
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      long long lit = 0;
      if (!detail::parse_int(tok, lit) || std::llabs(lit) > f.eta) {
        throw Error(ErrorKind::MalformedFormula, "bad literal '" + tok + "'", line_no);
      }
      if (lit == 0) {
        if (current.size() != 3) {
          throw Error(ErrorKind::MalformedFormula,
                      "clause with " + std::to_string(current.size()) + " literals", line_no);
        }
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
      } else {
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!have_header) throw Error(ErrorKind::MalformedFormula, "missing 'p cnf' header", line_no);
  if (!current.empty()) throw Error(ErrorKind::MalformedFormula, "unterminated clause", line_no);
  if (static_cast<long long>(f.clauses.size()) != declared) {
    throw Error(ErrorKind::MalformedFormula, "clause count differs from header");
  }
  f.validate();
  return f;
}

inline CnfB2Formula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string format_dimacs(const CnfB2Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.eta << ' ' << f.mu() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

struct VertexCoverInstance {
  /// Colors are ignored.
  ColoredGraph graph;
  int k = 0;
  /// parts[v] in {1,2,3}; empty when unknown.
  std::vector<int> parts;
};

struct HittingSetInstance {
  int eta = 0;
  /// 1-based elements.
  std::vector<std::vector<int>> sets;
  int k = 0;

  int mu() const { return static_cast<int>(sets.size()); }

  void validate() const {
    if (eta < 0 || k < 0) throw Error(ErrorKind::MalformedInstance, "negative size");
    std::vector<int> seen(static_cast<std::size_t>(eta) + 1, 0);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[j].empty()) {
        throw Error(ErrorKind::MalformedInstance, "set " + std::to_string(j + 1) + " is empty");
      }
      for (int x : sets[j]) {
        if (x < 1 || x > eta) {
          throw Error(ErrorKind::MalformedInstance,
                      "element " + std::to_string(x) + " outside [1," + std::to_string(eta) + "]");
        }
        seen[x] = 1;
      }
    }
    for (int i = 1; i <= eta; ++i) {
      if (!seen[i]) {
        throw Error(ErrorKind::MalformedInstance,
                    "element " + std::to_string(i) + " occurs in no set");
      }
    }
  }

  bool contains(int set, int element) const {
    const auto& s = sets[set];
    return std::find(s.begin(), s.end(), element) != s.end();
  }
};

/// One set per non-empty line, elements separated by whitespace. `sep` may
/// be ';' to accept the single-line CLI form "1;1 2;3".
inline HittingSetInstance parse_hitting_set(const std::string& text, int k, char sep = '\n') {
  HittingSetInstance inst;
  inst.k = k;
  std::string chunk;
  std::istringstream in(text);
  int max_element = 0;
  while (std::getline(in, chunk, sep)) {
    std::istringstream items(chunk);
    std::string tok;
    std::vector<int> set;
    while (items >> tok) {
      long long x = 0;
      if (!detail::parse_int(tok, x) || x < 1 || x > 64) {
        throw Error(ErrorKind::MalformedInstance, "bad element '" + tok + "'");
      }
      if (std::find(set.begin(), set.end(), x) == set.end()) set.push_back(static_cast<int>(x));
      max_element = std::max(max_element, static_cast<int>(x));
    }
    if (set.empty()) continue;
    std::sort(set.begin(), set.end());
    inst.sets.push_back(std::move(set));
  }
  inst.eta = max_element;
  inst.validate();
  return inst;
}

// ---------------------------------------------------------------------------
// Source oracles

inline bool sat_b2_brute(const CnfB2Formula& f) {
  if (f.eta > 20) throw Error(ErrorKind::ResourceLimit, "more than 20 variables");
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.eta); ++a) {
    if (f.satisfied_by(a)) return true;
  }
  return false;
}

/// Minimum vertex cover size.
inline int vc_brute(const ColoredGraph& h) {
  if (h.n() > 16) throw Error(ErrorKind::ResourceLimit, "more than 16 vertices");
  int best = h.n();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << h.n()); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool cover = std::all_of(h.edges().begin(), h.edges().end(), [&](const ColoredEdge& e) {
      return ((mask >> e.u) & 1) || ((mask >> e.v) & 1);
    });
    if (cover) best = size;
  }
  return best;
}

/// Minimum hitting set size.
inline int hs_brute(const HittingSetInstance& inst) {
  if (inst.eta > 16) throw Error(ErrorKind::ResourceLimit, "more than 16 elements");
  std::vector<std::uint32_t> masks;
  for (const auto& s : inst.sets) {
    std::uint32_t m = 0;
    for (int x : s) m |= std::uint32_t{1} << (x - 1);
    masks.push_back(m);
  }
  int best = inst.eta;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << inst.eta); ++pick) {
    int size = __builtin_popcount(pick);
    if (size >= best) continue;
    bool hits = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & pick) != 0; });
    if (hits) best = size;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Generated instances

/// Outcome of the structural checks a generator runs on its own output.
struct Validation {
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fact(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
  void check(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

struct GeneratedInstance {
  ColoredGraph graph;
  PatternSpec spec;
  int k = 0;
  std::string reduction;
  std::vector<std::pair<std::string, std::string>> params;
  /// Role name -> vertex. A vertex may carry several roles.
  std::vector<std::pair<std::string, VertexId>> labels;
  Validation validation;

  VertexId vertex(const std::string& role) const {
    for (const auto& [name, v] : labels) {
      if (name == role) return v;
    }
    throw Error(ErrorKind::InvalidParams, "no vertex labelled '" + role + "'");
  }
};

namespace detail {

inline std::string sup(const std::string& base, int a, int b) {
  return base + "^{" + std::to_string(a) + "," + std::to_string(b) + "}";
}
inline std::string sup(const std::string& base, int a) {
  return base + "^" + std::to_string(a);
}
inline std::string sub(const std::string& base, int i) { return base + "_" + std::to_string(i); }

/// Periodic chain coloring: edge s gets s mod (l-1) when that lies in
/// (0, c), otherwise color c.
inline ColorId chain_color(int s, int l, int c) {
  int r = s % (l - 1);
  return (r > 0 && r < c) ? r : c;
}

inline std::string girth_text(const std::optional<int>& g) {
  return g ? std::to_string(*g) : "inf";
}

}  // namespace detail

/// A path on d(l-1) vertices with the periodic chain coloring.
inline ColoredGraph gen_path_chain(int c, int l, int d) {
  if (l < 3 || c < 1 || c > l - 1 || d < 1) {
    throw Error(ErrorKind::InvalidParams, "need l >= 3, 1 <= c <= l-1, d >= 1");
  }
  GraphBuilder b;
  const int n = d * (l - 1);
  b.add_vertices(n);
  for (int s = 1; s < n; ++s) b.add_edge(s - 1, s, detail::chain_color(s, l, c));
  return b.build(c);
}

/// The d-1 edges {v_i, v_{i+1}} with i divisible by l-1 (1-based i).
inline DeletionSet path_chain_solution(int l, int d) {
  DeletionSet s;
  for (int i = l - 1; i < d * (l - 1); i += l - 1) s.insert(make_edge(i - 1, i));
  return s;
}

/// (3,B2)-SAT to induced c-colored P_l deletion with clause gadgets of three
/// arms and variable gadgets of four chains plus a connector.
inline GeneratedInstance gen_cpld_b2sat(const CnfB2Formula& phi, int l, int c, int d) {
  if (l < 4 || c < 2 || c > l - 2 || d < 1) {
    throw Error(ErrorKind::InvalidParams, "need l >= 4, 2 <= c <= l-2, d >= 1");
  }
  phi.validate();
  const int eta = phi.eta;
  const int mu = phi.mu();
  const int z = d * (l - 1) + 1;
  GraphBuilder b;
  GeneratedInstance out;
  auto label = [&](const std::string& name, VertexId v) { out.labels.emplace_back(name, v); };

  // arm[j][p][s] = vertex u_j^{p,s}, s in [1, l-1]; s = 2 is filled in later.
  std::vector<std::array<std::vector<VertexId>, 3>> arm(static_cast<std::size_t>(mu));
  for (int j = 0; j < mu; ++j) {
    VertexId uj = b.add_vertex();
    label(detail::sub("u", j + 1), uj);
    for (int p = 0; p < 3; ++p) {
      auto& a = arm[j][p];
      a.assign(static_cast<std::size_t>(l), -1);
      a[1] = uj;
      label(detail::sup(detail::sub("u", j + 1), p + 1, 1), uj);
      for (int s = 3; s <= l - 1; ++s) {
        a[s] = b.add_vertex();
        label(detail::sup(detail::sub("u", j + 1), p + 1, s), a[s]);
      }
    }
  }
  // chain[i][lit][q][s]: lit 0 = T, 1 = F.
  std::vector<std::array<std::array<std::vector<VertexId>, 2>, 2>> chain(static_cast<std::size_t>(eta));
  for (int i = 0; i < eta; ++i) {
    for (int lit = 0; lit < 2; ++lit) {
      const std::string name = lit == 0 ? "t" : "f";
      VertexId root = b.add_vertex();
      label(detail::sub(name, i + 1), root);
      for (int q = 0; q < 2; ++q) {
        auto& ch = chain[i][lit][q];
        ch.assign(static_cast<std::size_t>(z) + 1, -1);
        ch[1] = root;
        label(detail::sup(detail::sub(name, i + 1), q + 1, 1), root);
        for (int s = 2; s <= z; ++s) {
          ch[s] = b.add_vertex();
          label(detail::sup(detail::sub(name, i + 1), q + 1, s), ch[s]);
        }
        for (int s = 1; s < z; ++s) b.add_edge(ch[s], ch[s + 1], detail::chain_color(s, l, c));
      }
    }
    VertexId ti = chain[i][0][0][1];
    VertexId fi = chain[i][1][0][1];
    if (l == 4) {
      b.add_edge(ti, fi, 2);
    } else {
      VertexId prev = ti;
      for (int w = 1; w <= l - 4; ++w) {
        VertexId wv = b.add_vertex();
        label(detail::sup(detail::sub("w", i + 1), w), wv);
        b.add_edge(prev, wv, std::min(1 + w, c));
        prev = wv;
      }
      b.add_edge(prev, fi, std::min(l - 3 + 1, c));
    }
  }
  std::map<int, int> seen;
  for (int j = 0; j < mu; ++j) {
    for (int p = 0; p < 3; ++p) {
      int lit = phi.clauses[j][p];
      int q = seen[lit]++;
      int i = std::abs(lit) - 1;
      VertexId v = chain[i][lit > 0 ? 0 : 1][q][z];
      arm[j][p][2] = v;
      label(detail::sup(detail::sub("u", j + 1), p + 1, 2), v);
      for (int s = 1; s <= l - 2; ++s) {
        b.add_edge(arm[j][p][s], arm[j][p][s + 1], s < c ? s : c);
      }
    }
  }
  out.graph = b.build(c);
  out.spec = PatternSpec::path(l, c);
  out.k = 4 * d * eta + 2 * mu;
  out.reduction = "cpld-b2sat";
  out.params = {{"l", std::to_string(l)}, {"c", std::to_string(c)}, {"d", std::to_string(d)},
                {"eta", std::to_string(eta)}, {"mu", std::to_string(mu)},
                {"connector", "colors 2..c, padded with c"}};

  auto stats = structural_stats(out.graph);
  auto& val = out.validation;
  val.fact("max_degree", std::to_string(stats.max_degree));
  val.fact("girth", detail::girth_text(stats.girth));
  val.check(stats.max_degree == 3, "max degree is not 3");
  // A clause with a repeated literal closes a cycle through both chains of
  // that literal: 2 * d * (l-1) + 2 edges, which equals 2dl only for d = 1.
  val.check(!stats.girth || *stats.girth >= 2 * d * (l - 1) + 2,
            "girth below 2d(l-1)+2");
  return out;
}

/// Lifts a bicolored P3 instance to (l-1)-colored P_l by hanging deg(v)
/// arms of l-3 new vertices (colors 3..l-1) on every vertex v.
inline GeneratedInstance gen_lift_2p3d(const ColoredGraph& g2, int k, int l) {
  if (l < 4) throw Error(ErrorKind::InvalidParams, "need l >= 4");
  if (k < 0) throw Error(ErrorKind::InvalidParams, "negative budget");
  for (const auto& e : g2.edges()) {
    if (e.color > 2) throw Error(ErrorKind::InvalidParams, "source must be bicolored");
  }
  GraphBuilder b;
  b.add_vertices(g2.n());
  for (const auto& e : g2.edges()) b.add_edge(e.u, e.v, e.color);
  GeneratedInstance out;
  for (VertexId v = 0; v < g2.n(); ++v) {
    for (int a = 1; a <= g2.degree(v); ++a) {
      VertexId prev = v;
      for (int s = 1; s <= l - 3; ++s) {
        VertexId x = b.add_vertex();
        out.labels.emplace_back("a_" + std::to_string(v + 1) + "^{" + std::to_string(a) + "," +
                                    std::to_string(s) + "}",
                                x);
        b.add_edge(prev, x, 2 + s);
        prev = x;
      }
    }
  }
  out.graph = b.build(l - 1);
  out.spec = PatternSpec::path(l, l - 1);
  out.k = k;
  out.reduction = "lift-2p3d";
  out.params = {{"l", std::to_string(l)}, {"source_n", std::to_string(g2.n())}};
  auto& val = out.validation;
  int in_max = 0, out_max = 0;
  for (VertexId v = 0; v < g2.n(); ++v) {
    in_max = std::max(in_max, g2.degree(v));
    val.check(out.graph.degree(v) == 2 * g2.degree(v),
              "vertex " + std::to_string(v + 1) + " degree not doubled");
  }
  for (VertexId v = 0; v < out.graph.n(); ++v) out_max = std::max(out_max, out.graph.degree(v));
  val.fact("max_degree", std::to_string(out_max));
  val.check(out_max == 2 * in_max, "max degree is not twice the source maximum");
  return out;
}

struct Subdivision {
  ColoredGraph graph;
  /// parts[v] in {1,2,3}.
  std::vector<int> parts;
};

/// Replaces every edge {u,v} (u < v) by u-x-y-v. Originals form part 1,
/// x-vertices part 2 and y-vertices part 3.
inline Subdivision two_subdivision(const ColoredGraph& g) {
  GraphBuilder b;
  b.add_vertices(g.n());
  std::vector<int> parts(static_cast<std::size_t>(g.n()), 1);
  for (const auto& e : g.edges()) {
    VertexId x = b.add_vertex();
    VertexId y = b.add_vertex();
    parts.push_back(2);
    parts.push_back(3);
    b.add_edge(e.u, x, 1);
    b.add_edge(x, y, 1);
    b.add_edge(y, e.v, 1);
  }
  return {b.build(1), std::move(parts)};
}

/// Vertex cover on a triangle-free tripartite graph to induced c-colored C_l
/// deletion: an apex joined to every vertex in its part color, each edge
/// subdivided into a path carrying the remaining colors, then colors >= c
/// merged into c.
inline GeneratedInstance gen_ccld_vc(const VertexCoverInstance& h, int l, int c) {
  if (l < 3 || c < 1 || c > l) throw Error(ErrorKind::InvalidParams, "need l >= 3, 1 <= c <= l");
  const auto& hg = h.graph;
  if (static_cast<int>(h.parts.size()) != hg.n()) {
    throw Error(ErrorKind::NotTripartite, "tripartition missing or wrong size");
  }
  for (VertexId v = 0; v < hg.n(); ++v) {
    if (h.parts[v] < 1 || h.parts[v] > 3) {
      throw Error(ErrorKind::NotTripartite, "vertex " + std::to_string(v + 1) + " has no part");
    }
  }
  for (const auto& e : hg.edges()) {
    if (h.parts[e.u] == h.parts[e.v]) {
      throw Error(ErrorKind::NotTripartite, "edge {" + std::to_string(e.u + 1) + "," +
                                                std::to_string(e.v + 1) + "} inside one part");
    }
  }
  for (const auto& e : hg.edges()) {
    for (VertexId w : hg.neighbors(e.u)) {
      if (w > e.v && hg.adjacent(w, e.v)) {
        throw Error(ErrorKind::TriangleFound, "triangle " + std::to_string(e.u + 1) + " " +
                                                  std::to_string(e.v + 1) + " " +
                                                  std::to_string(w + 1));
      }
    }
  }
  GeneratedInstance out;
  GraphBuilder b;
  b.add_vertices(hg.n());
  for (VertexId v = 0; v < hg.n(); ++v) out.labels.emplace_back(detail::sub("v", v + 1), v);
  for (const auto& e : hg.edges()) {
    const int psi = 6 - h.parts[e.u] - h.parts[e.v];
    if (l == 3) {
      b.add_edge(e.u, e.v, psi);
      continue;
    }
    VertexId prev = e.u;
    for (int i = 1; i <= l - 3; ++i) {
      VertexId w = b.add_vertex();
      out.labels.emplace_back("w_" + std::to_string(i) + "^{" + std::to_string(e.u + 1) + "," +
                                  std::to_string(e.v + 1) + "}",
                              w);
      b.add_edge(prev, w, i == 1 ? psi : i + 2);
      prev = w;
    }
    b.add_edge(prev, e.v, l);
  }
  VertexId alpha = b.add_vertex();
  out.labels.emplace_back("alpha", alpha);
  for (VertexId v = 0; v < hg.n(); ++v) b.add_edge(v, alpha, h.parts[v]);
  const ColoredGraph full = b.build(std::max(l, 3));
  out.graph = recolor_to_c(full, c);
  out.spec = PatternSpec::cycle(l, c);
  out.k = h.k;
  out.reduction = "ccld-vc";
  out.params = {{"l", std::to_string(l)}, {"c", std::to_string(c)}};

  auto& val = out.validation;
  auto girth = ecdel::girth(out.graph);
  val.fact("girth", detail::girth_text(girth));
  if (hg.m() > 0) val.check(girth && *girth == l, "girth differs from l");
  std::size_t any_colored = 0;
  for (int cc = 1; cc <= c; ++cc) {
    any_colored += count_occurrences(out.graph, PatternSpec::cycle(l, cc, OccurrenceMode::Subgraph));
  }
  auto target = count_occurrences(out.graph, PatternSpec::cycle(l, c, OccurrenceMode::Subgraph));
  val.fact("cycles", std::to_string(any_colored));
  val.check(any_colored == target, "some C_l is not c-colored");
  val.check(target == hg.m(), "C_l count differs from the source edge count");
  return out;
}

/// Fixed inter-gadget edges of the hitting-set reductions. `Published` adds
/// the ten edges per shared element; `Closed` additionally joins v^p and
/// u_1^p to every vertex of each gadget sharing an element with F_p, which
/// gives every path that leaves its own gadget a conflict-free chord.
enum class HsFixedEdges { Published, Closed };

namespace detail {

struct HsLayout {
  std::vector<VertexId> path_start;  // v^j
  std::vector<VertexId> path_end;    // last vertex of the subset path
  int l = 0;
};

inline HsLayout build_hs_paths(const HittingSetInstance& inst, HsFixedEdges variant,
                               GraphBuilder& b, GeneratedInstance& out) {
  constexpr ColorId blue = 1, red = 2, yellow = 3;
  const int eta = inst.eta;
  auto label = [&](const std::string& name, VertexId v) { out.labels.emplace_back(name, v); };
  std::vector<VertexId> w(static_cast<std::size_t>(eta) + 1), wt(w);
  for (int i = 1; i <= eta; ++i) {
    w[i] = b.add_vertex();
    wt[i] = b.add_vertex();
    label(sub("w", i), w[i]);
    label(sub("wt", i), wt[i]);
    b.add_edge(w[i], wt[i], blue);
  }
  HsLayout layout;
  layout.l = 1 + 3 * eta;
  const int mu = inst.mu();
  std::vector<VertexId> v(static_cast<std::size_t>(mu));
  std::vector<std::vector<VertexId>> u(static_cast<std::size_t>(mu),
                                       std::vector<VertexId>(static_cast<std::size_t>(eta) + 2, -1));
  for (int j = 0; j < mu; ++j) {
    v[j] = b.add_vertex();
    label(sup("v", j + 1), v[j]);
    for (int i = 1; i <= eta; ++i) {
      u[j][i] = b.add_vertex();
      label(sup(sub("u", i), j + 1), u[j][i]);
    }
  }
  std::set<Edge> fixed;
  std::vector<std::vector<VertexId>> members(static_cast<std::size_t>(mu));
  for (int j = 0; j < mu; ++j) {
    members[j].push_back(v[j]);
    for (int i = 1; i <= eta; ++i) members[j].push_back(u[j][i]);
    b.add_edge(v[j], u[j][1], yellow);
    VertexId end = -1;
    for (int i = 1; i <= eta; ++i) {
      VertexId a, bt;
      if (inst.contains(j, i)) {
        a = w[i];
        bt = wt[i];
      } else {
        a = b.add_vertex();
        bt = b.add_vertex();
        label(sup(sub("w", i), j + 1), a);
        label(sup(sub("wt", i), j + 1), bt);
        members[j].push_back(a);
        members[j].push_back(bt);
        b.add_edge(a, bt, red);
      }
      b.add_edge(u[j][i], a, red);
      if (i < eta) b.add_edge(bt, u[j][i + 1], red);
      end = bt;
    }
    layout.path_start.push_back(v[j]);
    layout.path_end.push_back(end);
  }
  // Fixed red edges between subset gadgets sharing an element.
  for (int p = 0; p < mu; ++p) {
    for (int q = p + 1; q < mu; ++q) {
      for (int i = 1; i <= eta; ++i) {
        if (!inst.contains(p, i) || !inst.contains(q, i)) continue;
        for (int x : {i, i + 1}) {
          if (x > eta) continue;
          fixed.insert(make_edge(u[p][x], u[q][x]));
          fixed.insert(make_edge(v[p], u[q][x]));
          fixed.insert(make_edge(v[q], u[p][x]));
          fixed.insert(make_edge(u[p][1], u[q][x]));
          fixed.insert(make_edge(u[q][1], u[p][x]));
        }
      }
    }
  }
  if (variant == HsFixedEdges::Closed) {
    for (int p = 0; p < mu; ++p) {
      for (int q = 0; q < mu; ++q) {
        if (p == q) continue;
        bool share = false;
        for (int x : inst.sets[p]) share = share || inst.contains(q, x);
        if (!share) continue;
        for (VertexId y : members[q]) {
          fixed.insert(make_edge(v[p], y));
          fixed.insert(make_edge(u[p][1], y));
        }
      }
    }
  }
  for (const auto& e : fixed) b.add_edge(e.u, e.v, red);
  out.params.emplace_back("fixed_edges", std::to_string(fixed.size()));
  out.params.emplace_back("fixed_variant", variant == HsFixedEdges::Closed ? "closed" : "published");
  return layout;
}

}  // namespace detail

/// Hitting set to induced 3-colored P_{1+3 eta} deletion.
inline GeneratedInstance gen_cpd_hs(const HittingSetInstance& inst,
                                    HsFixedEdges variant = HsFixedEdges::Published) {
  inst.validate();
  if (inst.eta < 1) throw Error(ErrorKind::MalformedInstance, "empty universe");
  GeneratedInstance out;
  GraphBuilder b;
  auto layout = detail::build_hs_paths(inst, variant, b, out);
  out.graph = b.build(3);
  out.spec = PatternSpec::path(layout.l, 3);
  out.k = inst.k;
  out.reduction = "cpd-hs";
  out.params.insert(out.params.begin(), {{"eta", std::to_string(inst.eta)},
                                         {"mu", std::to_string(inst.mu())},
                                         {"l", std::to_string(layout.l)}});
  auto& val = out.validation;
  auto census = count_occurrences(out.graph, out.spec);
  auto cascade = cascade_status(out.graph, out.spec);
  val.fact("census", std::to_string(census));
  val.fact("cascade", std::string(to_string(cascade.status)));
  val.check(census == static_cast<std::size_t>(inst.mu()), "census differs from |F|");
  val.check(cascade.non_cascading(), "output is cascading");
  return out;
}

/// Hitting set to induced 4-colored C_{2+3 eta} deletion: the path instance
/// plus k+1 extra vertices joined in color 4 to every path endpoint.
inline GeneratedInstance gen_ccd_hs(const HittingSetInstance& inst,
                                    HsFixedEdges variant = HsFixedEdges::Published) {
  inst.validate();
  if (inst.eta < 1) throw Error(ErrorKind::MalformedInstance, "empty universe");
  GeneratedInstance out;
  GraphBuilder b;
  auto layout = detail::build_hs_paths(inst, variant, b, out);
  std::vector<VertexId> ends = layout.path_start;
  ends.insert(ends.end(), layout.path_end.begin(), layout.path_end.end());
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  for (int s = 1; s <= inst.k + 1; ++s) {
    VertexId q = b.add_vertex();
    out.labels.emplace_back(detail::sub("q", s), q);
    for (VertexId x : ends) b.add_edge(q, x, 4);
  }
  out.graph = b.build(4);
  out.spec = PatternSpec::cycle(layout.l + 1, 4);
  out.k = inst.k;
  out.reduction = "ccd-hs";
  out.params.insert(out.params.begin(), {{"eta", std::to_string(inst.eta)},
                                         {"mu", std::to_string(inst.mu())},
                                         {"l", std::to_string(layout.l + 1)},
                                         {"q", std::to_string(inst.k + 1)}});
  auto& val = out.validation;
  auto census = count_occurrences(out.graph, out.spec);
  auto cascade = cascade_status(out.graph, out.spec);
  val.fact("census", std::to_string(census));
  val.fact("cascade", std::string(to_string(cascade.status)));
  val.check(census == static_cast<std::size_t>(inst.mu()) * static_cast<std::size_t>(inst.k + 1),
            "census differs from |F|(k+1)");
  val.check(cascade.non_cascading(), "output is cascading");
  return out;
}

/// (3,B2)-SAT to bicolored P4 deletion on double cluster graphs of maximum
/// degree five.
inline GeneratedInstance gen_2p4d_b2sat(const CnfB2Formula& phi) {
  constexpr ColorId blue = 1, red = 2;
  phi.validate();
  const int eta = phi.eta;
  const int mu = phi.mu();
  GraphBuilder b;
  GeneratedInstance out;
  auto label = [&](const std::string& name, VertexId v) { out.labels.emplace_back(name, v); };

  std::vector<std::array<VertexId, 3>> dv(static_cast<std::size_t>(mu));
  for (int i = 0; i < mu; ++i) {
    for (int z = 0; z < 3; ++z) {
      dv[i][z] = b.add_vertex();
      label(detail::sup(detail::sub("d", i + 1), z + 1), dv[i][z]);
    }
    b.add_edge(dv[i][0], dv[i][1], blue);
    b.add_edge(dv[i][0], dv[i][2], blue);
    b.add_edge(dv[i][1], dv[i][2], blue);
  }
  // tf[j][0][y] = t_j^y, tf[j][1][y] = f_j^y.
  std::vector<std::array<std::array<VertexId, 2>, 2>> tf(static_cast<std::size_t>(eta));
  for (int j = 0; j < eta; ++j) {
    std::array<VertexId, 5> r{};
    std::array<VertexId, 11> p{}, q{};
    const std::string js = std::to_string(j + 1);
    for (int s = 1; s <= 4; ++s) {
      r[s] = b.add_vertex();
      label("r_" + js + "^" + std::to_string(s), r[s]);
    }
    for (int s = 1; s <= 10; ++s) {
      p[s] = b.add_vertex();
      label("p_" + js + "^" + std::to_string(s), p[s]);
    }
    for (int s = 1; s <= 10; ++s) {
      q[s] = b.add_vertex();
      label("q_" + js + "^" + std::to_string(s), q[s]);
    }
    for (int y = 0; y < 2; ++y) {
      tf[j][0][y] = b.add_vertex();
      label("t_" + js + "^" + std::to_string(y + 1), tf[j][0][y]);
    }
    for (int y = 0; y < 2; ++y) {
      tf[j][1][y] = b.add_vertex();
      label("f_" + js + "^" + std::to_string(y + 1), tf[j][1][y]);
    }
    for (int a = 1; a <= 4; ++a) {
      for (int c2 = a + 1; c2 <= 4; ++c2) b.add_edge(r[a], r[c2], red);
    }
    auto triangle = [&](VertexId x, VertexId y, VertexId z) {
      b.add_edge(x, y, blue);
      b.add_edge(x, z, blue);
      b.add_edge(y, z, blue);
    };
    triangle(r[1], p[1], p[2]);
    triangle(r[2], q[1], q[2]);
    triangle(p[3], p[5], p[7]);
    triangle(q[3], q[5], q[7]);
    triangle(p[4], p[6], p[8]);
    triangle(q[4], q[6], q[8]);
    b.add_edge(p[9], tf[j][0][0], blue);
    b.add_edge(p[10], tf[j][0][1], blue);
    b.add_edge(q[9], tf[j][1][0], blue);
    b.add_edge(q[10], tf[j][1][1], blue);
    for (auto [x, y] : {std::pair{p[1], p[3]}, {p[2], p[4]}, {p[5], p[9]}, {p[6], p[10]},
                        {q[1], q[3]}, {q[2], q[4]}, {q[5], q[9]}, {q[6], q[10]}}) {
      b.add_edge(x, y, red);
    }
  }
  std::map<int, int> seen;
  for (int i = 0; i < mu; ++i) {
    for (int z = 0; z < 3; ++z) {
      int lit = phi.clauses[i][z];
      int y = seen[lit]++;
      VertexId cz = tf[std::abs(lit) - 1][lit > 0 ? 0 : 1][y];
      label(detail::sup(detail::sub("c", i + 1), z + 1), cz);
      b.add_edge(dv[i][z], cz, red);
    }
  }
  out.graph = b.build(2);
  out.spec = PatternSpec::path(4, 2);
  out.k = 9 * eta + 2 * mu;
  out.reduction = "2p4d-b2sat";
  out.params = {{"eta", std::to_string(eta)}, {"mu", std::to_string(mu)}};
  auto stats = structural_stats(out.graph);
  auto& val = out.validation;
  val.fact("max_degree", std::to_string(stats.max_degree));
  val.fact("blue_cluster", stats.per_color_is_cluster[0] ? "true" : "false");
  val.fact("red_cluster", stats.per_color_is_cluster[1] ? "true" : "false");
  val.check(stats.max_degree == 5, "max degree is not 5");
  val.check(stats.per_color_is_cluster[0] && stats.per_color_is_cluster[1],
            "a color class is not a cluster graph");
  return out;
}

// ---------------------------------------------------------------------------
// (3,B2)-SAT catalog

/// Every (3,B2) formula on `eta` variables, as a sorted list of clauses with
/// sorted literals (signed order, negatives first). With `up_to_symmetry`,
/// only the lexicographically smallest member of each orbit under variable
/// renaming and polarity flips is kept.
inline std::vector<CnfB2Formula> b2_catalog(int eta, bool up_to_symmetry = false) {
  if (eta < 1 || eta > 3 || eta % 3 != 0) {
    throw Error(ErrorKind::InvalidParams, "catalog is available for eta = 3 only");
  }
  // Literal slots: each literal twice.
  std::vector<int> lits;
  for (int i = 1; i <= eta; ++i) {
    for (int r = 0; r < 2; ++r) {
      lits.push_back(i);
      lits.push_back(-i);
    }
  }
  std::sort(lits.begin(), lits.end());
  std::vector<std::array<int, 3>> clause_pool;
  for (std::size_t a = 0; a < lits.size(); ++a) {
    for (std::size_t b2 = a + 1; b2 < lits.size(); ++b2) {
      for (std::size_t c = b2 + 1; c < lits.size(); ++c) {
        clause_pool.push_back({lits[a], lits[b2], lits[c]});
      }
    }
  }
  std::sort(clause_pool.begin(), clause_pool.end());
  clause_pool.erase(std::unique(clause_pool.begin(), clause_pool.end()), clause_pool.end());

  const int mu = 4 * eta / 3;
  std::set<std::vector<std::array<int, 3>>> found;
  std::vector<std::array<int, 3>> current;
  std::map<int, int> budget;
  for (int x : lits) budget[x]++;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == mu) {
      for (const auto& [lit, left] : budget) {
        if (left != 0) return;
      }
      found.insert(current);
      return;
    }
    for (std::size_t i = from; i < clause_pool.size(); ++i) {
      const auto& cl = clause_pool[i];
      bool ok = true;
      for (int x : cl) {
        if (--budget[x] < 0) ok = false;
      }
      if (ok) {
        current.push_back(cl);
        self(self, i);
        current.pop_back();
      }
      for (int x : cl) ++budget[x];
    }
  };
  rec(rec, 0);

  auto canonical = [&](const std::vector<std::array<int, 3>>& f) {
    std::vector<int> perm(static_cast<std::size_t>(eta));
    for (int i = 0; i < eta; ++i) perm[i] = i + 1;
    std::vector<std::array<int, 3>> best = f;
    do {
      for (int flips = 0; flips < (1 << eta); ++flips) {
        std::vector<std::array<int, 3>> g;
        for (const auto& cl : f) {
          std::array<int, 3> m{};
          for (int t = 0; t < 3; ++t) {
            int v = std::abs(cl[t]);
            int nv = perm[v - 1];
            bool neg = (cl[t] < 0) != static_cast<bool>((flips >> (v - 1)) & 1);
            m[t] = neg ? -nv : nv;
          }
          std::sort(m.begin(), m.end());
          g.push_back(m);
        }
        std::sort(g.begin(), g.end());
        if (g < best) best = g;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::vector<CnfB2Formula> out;
  std::set<std::vector<std::array<int, 3>>> reps;
  for (const auto& f : found) {
    if (up_to_symmetry) {
      auto c = canonical(f);
      if (!reps.insert(c).second) continue;
      out.push_back({eta, c});
    } else {
      out.push_back({eta, f});
    }
  }
  return out;
}

}  // namespace ecdel
