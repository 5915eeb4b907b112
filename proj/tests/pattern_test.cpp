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

#include "ecdel/pattern.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace ecdel {
namespace {

std::set<std::vector<VertexId>> as_set(const std::vector<Occurrence>& occs) {
  std::set<std::vector<VertexId>> out;
  for (const auto& o : occs) out.insert(o.vertices);
  return out;
}

std::vector<PatternSpec> small_specs() {
  std::vector<PatternSpec> out;
  for (auto mode : {OccurrenceMode::Induced, OccurrenceMode::Subgraph}) {
    for (int l = 1; l <= 5; ++l) {
      for (int c = 1; c <= 3; ++c) out.push_back(PatternSpec::path(l, c, mode));
    }
    for (int l = 3; l <= 5; ++l) {
      for (int c = 1; c <= 3; ++c) out.push_back(PatternSpec::cycle(l, c, mode));
    }
  }
  return out;
}

TEST(FindOne, TwinCycle) {
  auto g = fixture::load(fixture::kTwinCycle);
  auto occ = find_one(g, PatternSpec::cycle(4, 2));
  ASSERT_TRUE(occ);
  EXPECT_EQ(occ->vertices, (std::vector<VertexId>{0, 2, 1, 3}));
  EXPECT_EQ(occ->colors, (std::vector<ColorId>{1, 1, 2, 2}));
}

TEST(FindOne, Edgeless) {
  ColoredGraph g(5, 3, {});
  for (const auto& spec : small_specs()) EXPECT_FALSE(find_one(g, spec)) << to_string(spec);
}

TEST(FindOne, BicoloredP3) {
  auto g = fixture::load(fixture::kBicolored5);
  auto occ = find_one(g, PatternSpec::path(3, 2));
  ASSERT_TRUE(occ);
  EXPECT_EQ(format_occurrence(*occ), "1 3 4");
}

TEST(Enumerate, MonochromaticP5HasThreeP3) {
  auto g = parse_graph("p ecg 5 4 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\n");
  EXPECT_EQ(enumerate(g, PatternSpec::path(3, 1)).size(), 3u);
  EXPECT_EQ(enumerate(g, PatternSpec::path(3, 2)).size(), 0u);
}

TEST(Enumerate, ColorsNeedNotBeTheFirstOnes) {
  auto g = parse_graph("p ecg 3 2 3\ne 1 2 3\ne 2 3 3\n");
  EXPECT_EQ(enumerate(g, PatternSpec::path(3, 1)).size(), 1u);
}

TEST(Enumerate, CapRaises) {
  auto g = parse_graph("p ecg 5 4 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\n");
  try {
    enumerate(g, PatternSpec::path(2, 1), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
  EXPECT_EQ(enumerate(g, PatternSpec::path(2, 1), 4).size(), 4u);
}

TEST(Spec, Validation) {
  ColoredGraph g(3, 1, {});
  EXPECT_THROW(find_one(g, PatternSpec::cycle(2, 1)), Error);
  EXPECT_THROW(find_one(g, PatternSpec::path(0, 1)), Error);
  EXPECT_THROW(find_one(g, PatternSpec::path(3, 0)), Error);
}

TEST(Property, EnumerateMatchesNaiveSequences) {
  oracle::Rng rng(21);
  const auto specs = small_specs();
  for (int t = 0; t < 120; ++t) {
    auto g = oracle::random_graph(rng, oracle::uniform(rng, 1, 7), oracle::uniform(rng, 0, 14),
                                  oracle::uniform(rng, 1, 3));
    for (const auto& spec : specs) {
      auto got = enumerate(g, spec);
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
      EXPECT_EQ(as_set(got), oracle::naive_occurrences(g, spec))
          << to_string(spec) << "\n" << serialize_graph(g);
      for (const auto& occ : got) EXPECT_TRUE(verify_occurrence(g, spec, occ));
    }
  }
}

TEST(Property, InducedIsSubsetOfSubgraph) {
  oracle::Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 7, oracle::uniform(rng, 4, 14), 3);
    for (const auto& spec : small_specs()) {
      if (spec.mode != OccurrenceMode::Induced) continue;
      auto ind = as_set(enumerate(g, spec));
      auto sub = as_set(enumerate(g, spec.with_mode(OccurrenceMode::Subgraph)));
      EXPECT_TRUE(std::includes(sub.begin(), sub.end(), ind.begin(), ind.end()));
    }
  }
}

TEST(Property, SubgraphModeIsMonotone) {
  oracle::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 7, oracle::uniform(rng, 4, 14), 3);
    DeletionSet s;
    for (const auto& e : g.edges()) {
      if (oracle::uniform(rng, 0, 2) == 0) s.insert(e.key());
    }
    auto h = remove_edges(g, s);
    for (const auto& spec : small_specs()) {
      if (spec.mode != OccurrenceMode::Subgraph) continue;
      auto before = as_set(enumerate(g, spec));
      auto after = as_set(enumerate(h, spec));
      EXPECT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end()));
    }
  }
}

TEST(Asymmetry, DeletionCreatesInducedOccurrence) {
  auto tri = parse_graph("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  auto spec = PatternSpec::path(3, 1);
  EXPECT_TRUE(is_free(tri, spec));
  EXPECT_FALSE(is_free(remove_edges(tri, {make_edge(0, 2)}), spec));
}

TEST(ConflictEdges, Examples) {
  auto g = fixture::load(fixture::kTwinCycle);
  EXPECT_EQ(conflict_edges(g, PatternSpec::cycle(4, 2)).size(), 4u);
  EXPECT_TRUE(conflict_edges(g, PatternSpec::cycle(4, 1)).empty());
  EXPECT_EQ(conflict_edges(g, PatternSpec::cycle(4, 2, OccurrenceMode::Subgraph)).size(), 4u);
}

TEST(Property, ConflictEdgesAreUnionOfInducedOccurrences) {
  oracle::Rng rng(24);
  for (int t = 0; t < 150; ++t) {
    auto g = oracle::random_graph(rng, 7, oracle::uniform(rng, 0, 14), 3);
    for (const auto& spec : small_specs()) {
      if (spec.mode != OccurrenceMode::Induced) continue;
      DeletionSet expect;
      for (const auto& seq : oracle::naive_occurrences(g, spec)) {
        for (const auto& e : occurrence_edges(Occurrence{seq, {}}, spec.kind)) expect.insert(e);
      }
      EXPECT_EQ(conflict_edges(g, spec), expect);
    }
  }
}

TEST(Format, OneBased) {
  Occurrence occ{{0, 4, 2}, {1, 1}};
  EXPECT_EQ(format_occurrence(occ), "1 5 3");
}

}  // namespace
}  // namespace ecdel
