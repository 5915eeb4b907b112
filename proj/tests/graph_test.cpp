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


#include <gtest/gtest.h>

#include <sstream>

#include "ecdel/graph.hpp"
#include "ecdel/pattern.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace ecdel {
namespace {

ErrorKind parse_error(const std::string& text, std::optional<int>* line = nullptr) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorKind::InvalidParams;
}

TEST(Parse, TwinCycleFixture) {
  auto g = fixture::load(fixture::kTwinCycle);
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_EQ(g.c(), 2);
  EXPECT_EQ(g.color(0, 2), 1);
  EXPECT_EQ(g.color(1, 2), 1);
  EXPECT_EQ(g.color(0, 3), 2);
  EXPECT_EQ(g.color(3, 1), 2);
  EXPECT_EQ(g.color(0, 1), 0);
}

TEST(Parse, CommentsAndBlankLines) {
  auto g = parse_graph("c hello\n\np ecg 3 1 1\nc mid\ne 3 1 1");
  EXPECT_EQ(g.m(), 1u);
  EXPECT_EQ(g.edges()[0].u, 0);
  EXPECT_EQ(g.edges()[0].v, 2);
}

TEST(Parse, Errors) {
  std::optional<int> line;
  EXPECT_EQ(parse_error("p ecg 2 2 1\ne 1 2 1\ne 2 1 1", &line), ErrorKind::DuplicateEdge);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(parse_error("p ecg 2 1 1\ne 1 1 1", &line), ErrorKind::LoopEdge);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(parse_error("p ecg 2 1 1\ne 1 3 1"), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(parse_error("p ecg 2 1 1\ne 1 2 2"), ErrorKind::ColorOutOfRange);
  EXPECT_EQ(parse_error("p ecg 2 1 1\ne 1 2 0"), ErrorKind::ColorOutOfRange);
  EXPECT_EQ(parse_error("p ecg 2 2 1\ne 1 2 1", &line), ErrorKind::MalformedHeader);
  EXPECT_EQ(line, 1);
  EXPECT_EQ(parse_error("e 1 2 1\np ecg 2 1 1"), ErrorKind::MalformedHeader);
  EXPECT_EQ(parse_error("p graph 2 1 1\ne 1 2 1"), ErrorKind::MalformedHeader);
  EXPECT_EQ(parse_error("p ecg 2 1 1\ne 1 2 x"), ErrorKind::MalformedHeader);
  EXPECT_EQ(parse_error("p ecg 2 1 1\nq 1 2 1"), ErrorKind::MalformedHeader);
  EXPECT_EQ(parse_error(""), ErrorKind::MalformedHeader);
}

TEST(Parse, UnusedColorsAccepted) {
  auto g = parse_graph("p ecg 2 1 5\ne 1 2 3\n");
  EXPECT_EQ(g.c(), 5);
  EXPECT_EQ(g.empty_colors(), (std::vector<ColorId>{1, 2, 4, 5}));
}

TEST(Serialize, CanonicalOrder) {
  auto g = parse_graph("p ecg 3 2 2\ne 3 2 2\ne 2 1 1\n");
  EXPECT_EQ(serialize_graph(g), "p ecg 3 2 2\ne 1 2 1\ne 2 3 2\n");
}

TEST(Property, RoundTrip) {
  oracle::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    int n = oracle::uniform(rng, 0, 9);
    auto g = oracle::random_graph(rng, n, oracle::uniform(rng, 0, 20), oracle::uniform(rng, 1, 4));
    auto text = serialize_graph(g);
    auto h = parse_graph(text);
    EXPECT_EQ(g, h);
    EXPECT_EQ(serialize_graph(h), text);
  }
}

TEST(RemoveEdges, Examples) {
  auto g = fixture::load(fixture::kTwinCycle);
  EXPECT_EQ(remove_edges(g, {}), g);
  auto h = remove_edges(g, {make_edge(0, 2)});
  EXPECT_EQ(h.m(), 3u);
  EXPECT_EQ(h.n(), 4);
  EXPECT_TRUE(is_free(h, PatternSpec::cycle(4, 2)));
  auto p = parse_graph("p ecg 3 2 1\ne 1 2 1\ne 2 3 1\n");
  EXPECT_EQ(remove_edges(p, {make_edge(0, 1), make_edge(1, 2)}).m(), 0u);
  try {
    remove_edges(g, {make_edge(0, 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EdgeNotPresent);
  }
}

TEST(Property, RemoveThenRestore) {
  oracle::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    auto g = oracle::random_graph(rng, oracle::uniform(rng, 2, 8), oracle::uniform(rng, 0, 15), 3);
    DeletionSet s;
    std::vector<ColoredEdge> removed;
    for (const auto& e : g.edges()) {
      if (oracle::uniform(rng, 0, 2) == 0) {
        s.insert(e.key());
        removed.push_back(e);
      }
    }
    auto h = remove_edges(g, s);
    EXPECT_EQ(h.m(), g.m() - s.size());
    auto before = g.color_counts();
    auto after = h.color_counts();
    for (const auto& e : removed) ++after[e.color - 1];
    EXPECT_EQ(before, after);
    EXPECT_EQ(add_edges(h, removed), g);
  }
}

TEST(InducedSubgraph, Examples) {
  auto g = fixture::load(fixture::kTwinCycle);
  auto all = induced_subgraph(g, {0, 1, 2, 3});
  EXPECT_EQ(all.graph, g);
  EXPECT_EQ(all.original, (std::vector<VertexId>{0, 1, 2, 3}));
  auto uwv = induced_subgraph(g, {0, 2, 1});
  EXPECT_EQ(uwv.graph.m(), 2u);
  EXPECT_EQ(uwv.graph.color(0, 2), 1);
  EXPECT_EQ(uwv.graph.color(1, 2), 1);
  EXPECT_EQ(uwv.graph.color(0, 1), 0);
  EXPECT_THROW(induced_subgraph(g, {7}), Error);
}

TEST(Property, InducedSubgraphMatchesFilter) {
  oracle::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    int n = oracle::uniform(rng, 1, 8);
    auto g = oracle::random_graph(rng, n, oracle::uniform(rng, 0, 20), 3);
    std::vector<VertexId> pick;
    for (VertexId v = 0; v < n; ++v) {
      if (oracle::uniform(rng, 0, 1)) pick.push_back(v);
    }
    auto sub = induced_subgraph(g, pick);
    ASSERT_EQ(sub.graph.n(), static_cast<int>(pick.size()));
    for (VertexId a = 0; a < sub.graph.n(); ++a) {
      for (VertexId b = 0; b < sub.graph.n(); ++b) {
        if (a == b) continue;
        EXPECT_EQ(sub.graph.color(a, b), g.color(sub.original[a], sub.original[b]));
      }
    }
  }
}

TEST(Stats, Examples) {
  auto empty = ColoredGraph(4, 2, {});
  auto s = structural_stats(empty);
  EXPECT_EQ(s.max_degree, 0);
  EXPECT_FALSE(s.girth.has_value());
  EXPECT_EQ(s.component_count, 4);
  EXPECT_EQ(s.per_color_is_cluster, (std::vector<bool>{true, true}));

  auto f = structural_stats(fixture::load(fixture::kTwinCycle));
  EXPECT_EQ(f.max_degree, 2);
  EXPECT_EQ(f.girth, 4);
  EXPECT_EQ(f.component_count, 1);
  EXPECT_EQ(f.per_color_is_cluster, (std::vector<bool>{false, false}));

  auto tri = structural_stats(parse_graph("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n"));
  EXPECT_EQ(tri.girth, 3);
  EXPECT_TRUE(tri.per_color_is_cluster[0]);

  auto p3 = structural_stats(parse_graph("p ecg 3 2 1\ne 1 2 1\ne 2 3 1\n"));
  EXPECT_FALSE(p3.per_color_is_cluster[0]);
}

// Shortest cycle by trying every cycle length and color count.
std::optional<int> girth_oracle(const ColoredGraph& g) {
  for (int len = 3; len <= g.n(); ++len) {
    for (int c = 1; c <= std::min(len, g.c()); ++c) {
      if (!oracle::naive_is_free(g, PatternSpec::cycle(len, c, OccurrenceMode::Subgraph))) return len;
    }
  }
  return std::nullopt;
}

TEST(Property, GirthMatchesCycleSearch) {
  oracle::Rng rng(14);
  for (int t = 0; t < 150; ++t) {
    auto g = oracle::random_graph(rng, oracle::uniform(rng, 1, 7), oracle::uniform(rng, 0, 10), 2);
    EXPECT_EQ(girth(g), girth_oracle(g)) << serialize_graph(g);
  }
}

TEST(Property, ClusterMeansNoMonochromaticInducedP3) {
  oracle::Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(rng, oracle::uniform(rng, 1, 7), oracle::uniform(rng, 0, 14), 2);
    for (ColorId i = 1; i <= 2; ++i) {
      std::vector<ColoredEdge> only;
      for (const auto& e : g.edges()) {
        if (e.color == i) only.push_back(e);
      }
      ColoredGraph h(g.n(), 2, only);
      EXPECT_EQ(color_is_cluster(g, i), oracle::naive_is_free(h, PatternSpec::path(3, 1)));
    }
  }
}

TEST(Components, Basic) {
  auto g = parse_graph("p ecg 5 2 1\ne 1 3 1\ne 4 5 1\n");
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{1}));
  EXPECT_EQ(comps[2], (std::vector<VertexId>{3, 4}));
}

TEST(Builder, Validates) {
  GraphBuilder b;
  VertexId a = b.add_vertex();
  VertexId c = b.add_vertex();
  b.add_edge(a, c, 3);
  EXPECT_THROW(b.build(2), Error);
  EXPECT_EQ(b.build(3).m(), 1u);
}

}  // namespace
}  // namespace ecdel
