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

#include "ecdel/generate.hpp"
#include "ecdel/solve.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace ecdel {
namespace {

const CnfB2Formula kUnsat{3, {{{1, 1, 3}}, {{-1, -1, 3}}, {{2, 2, -3}}, {{-2, -2, -3}}}};

CnfB2Formula first_satisfiable() {
  for (const auto& f : b2_catalog(3, true)) {
    if (sat_b2_brute(f)) return f;
  }
  throw std::logic_error("catalog has no satisfiable formula");
}

TEST(PathChain, Examples) {
  auto short_chain = gen_path_chain(2, 4, 1);
  EXPECT_EQ(short_chain.n(), 3);
  EXPECT_EQ(short_chain.color(0, 1), 1);
  EXPECT_EQ(short_chain.color(1, 2), 2);
  EXPECT_TRUE(brute_force(short_chain, PatternSpec::path(4, 2)).solution.empty());

  auto g = gen_path_chain(2, 4, 2);
  std::vector<ColorId> colors;
  for (const auto& e : g.edges()) colors.push_back(e.color);
  EXPECT_EQ(colors, (std::vector<ColorId>{1, 2, 2, 1, 2}));

  auto arms = gen_path_chain(3, 5, 2);
  EXPECT_EQ(arms.n(), 8);
  EXPECT_THROW(gen_path_chain(4, 4, 1), Error);
}

TEST(Property, EveryWindowIsAnOccurrence) {
  for (int l = 3; l <= 6; ++l) {
    for (int c = 1; c <= l - 1; ++c) {
      for (int d = 1; d <= 3; ++d) {
        auto g = gen_path_chain(c, l, d);
        auto occ = enumerate(g, PatternSpec::path(l, c));
        std::size_t windows = g.n() >= l ? static_cast<std::size_t>(g.n() - l + 1) : 0;
        EXPECT_EQ(occ.size(), windows) << c << " " << l << " " << d;
      }
    }
  }
}

TEST(PathChain, UniqueMinimum) {
  for (int d : {2, 3}) {
    for (int l : {4, 5}) {
      auto g = gen_path_chain(2, l, d);
      auto spec = PatternSpec::path(l, 2);
      EXPECT_TRUE(brute_force_all(g, spec, static_cast<std::size_t>(d - 2)).empty());
      auto all = brute_force_all(g, spec, static_cast<std::size_t>(d - 1));
      ASSERT_EQ(all.size(), 1u);
      EXPECT_EQ(all[0], path_chain_solution(l, d));
    }
  }
}

TEST(Formula, DimacsRoundTrip) {
  auto text = format_dimacs(kUnsat);
  auto f = parse_dimacs(text);
  EXPECT_EQ(f.clauses, kUnsat.clauses);
  EXPECT_EQ(format_dimacs(f), text);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), Error);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n"), Error);
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), Error);
}

TEST(Oracles, Examples) {
  EXPECT_EQ(hs_brute(parse_hitting_set("", 0)), 0);
  EXPECT_EQ(vc_brute(parse_graph("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n")), 2);
  auto sat = first_satisfiable();
  bool sweep = false;
  for (std::uint32_t a = 0; a < 8; ++a) sweep = sweep || sat.satisfied_by(a);
  EXPECT_TRUE(sweep);
  EXPECT_TRUE(sat_b2_brute(sat));
  EXPECT_FALSE(sat_b2_brute(kUnsat));
}

TEST(Catalog, Counts) {
  auto all = b2_catalog(3);
  auto reps = b2_catalog(3, true);
  EXPECT_EQ(all.size(), 715u);
  EXPECT_EQ(reps.size(), 35u);
  int sat = 0;
  for (const auto& f : reps) {
    f.validate();
    sat += sat_b2_brute(f);
  }
  EXPECT_EQ(sat, 34);
}

TEST(CpldB2Sat, Structure) {
  auto inst = gen_cpld_b2sat(first_satisfiable(), 4, 2, 1);
  EXPECT_EQ(inst.k, 20);
  EXPECT_TRUE(inst.validation.ok());
  auto stats = structural_stats(inst.graph);
  EXPECT_EQ(stats.max_degree, 3);
  ASSERT_TRUE(stats.girth);
  EXPECT_GE(*stats.girth, 8);
  EXPECT_EQ(inst.vertex("u_1^{1,1}"), inst.vertex("u_1"));
  EXPECT_EQ(inst.vertex("t_1^{1,1}"), inst.vertex("t_1"));
  auto wider = gen_cpld_b2sat(kUnsat, 5, 3, 2);
  EXPECT_TRUE(wider.validation.ok());
  EXPECT_EQ(wider.k, 4 * 2 * 3 + 2 * 4);
  EXPECT_NO_THROW(wider.vertex("w_1^1"));
  EXPECT_THROW(gen_cpld_b2sat(kUnsat, 4, 3, 1), Error);
}

TEST(CpldB2Sat, SatisfiabilityDecidesBudget) {
  auto sat = gen_cpld_b2sat(first_satisfiable(), 4, 2, 1);
  auto yes = branch_solve(sat.graph, sat.spec, sat.k);
  ASSERT_EQ(yes.status, SolveStatus::Yes);
  auto unsat = gen_cpld_b2sat(kUnsat, 4, 2, 1);
  EXPECT_EQ(branch_solve(unsat.graph, unsat.spec, unsat.k).status, SolveStatus::No);

  // Each variable gadget takes exactly 4d deletions.
  for (int i = 1; i <= 3; ++i) {
    std::set<VertexId> gadget;
    for (const auto& [name, v] : sat.labels) {
      std::string t = "t_" + std::to_string(i), f = "f_" + std::to_string(i);
      if (name.rfind(t, 0) == 0 || name.rfind(f, 0) == 0) gadget.insert(v);
    }
    int inside = 0;
    for (const auto& e : yes.solution) inside += gadget.count(e.u) && gadget.count(e.v);
    EXPECT_EQ(inside, 4) << "variable " << i;
  }
}

TEST(Lift, Shape) {
  auto g = fixture::load(fixture::kBicolored5);
  auto inst = gen_lift_2p3d(g, 1, 5);
  EXPECT_TRUE(inst.validation.ok());
  EXPECT_EQ(inst.graph.n(), 5 + 2 * static_cast<int>(g.m()) * 2);
  EXPECT_EQ(inst.spec, PatternSpec::path(5, 4));
  for (VertexId v = 0; v < g.n(); ++v) EXPECT_EQ(inst.graph.degree(v), 2 * g.degree(v));
  EXPECT_EQ(inst.graph.color(inst.vertex("a_3^{1,1}"), 2), 3);
  EXPECT_THROW(gen_lift_2p3d(g, 1, 3), Error);
}

TEST(Lift, SmallPathNeedsOneDeletion) {
  auto p3 = parse_graph("p ecg 3 2 2\ne 1 2 1\ne 2 3 2\n");
  auto inst = gen_lift_2p3d(p3, 1, 4);
  EXPECT_EQ(inst.graph.n(), 7);
  EXPECT_EQ(brute_force(inst.graph, inst.spec).solution.size(), 1u);
}

TEST(Property, LiftPreservesOptimumAndMapsBack) {
  oracle::Rng rng(51);
  int tested = 0;
  while (tested < 40) {
    auto g = oracle::random_graph(rng, oracle::uniform(rng, 2, 6), oracle::uniform(rng, 1, 7), 2);
    auto inst = gen_lift_2p3d(g, 0, 4);
    if (inst.graph.m() > 24) continue;
    ++tested;
    auto src = brute_force(g, PatternSpec::path(3, 2));
    auto dst = branch_optimize(inst.graph, inst.spec);
    EXPECT_EQ(src.solution.size(), dst.solution.size()) << serialize_graph(g);
    DeletionSet back;
    for (const auto& e : dst.solution) {
      if (inst.graph.color(e.u, e.v) <= 2) back.insert(e);
    }
    EXPECT_TRUE(is_free(remove_edges(g, back), PatternSpec::path(3, 2)));
  }
}

TEST(Subdivision, Examples) {
  auto edge = two_subdivision(parse_graph("p ecg 2 1 1\ne 1 2 1\n"));
  EXPECT_EQ(edge.graph.n(), 4);
  EXPECT_EQ(edge.graph.m(), 3u);
  EXPECT_EQ(edge.parts, (std::vector<int>{1, 1, 2, 3}));
  auto tri = two_subdivision(parse_graph("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n"));
  EXPECT_EQ(tri.graph.n(), 9);
  EXPECT_EQ(girth(tri.graph), 9);
  auto k4 = two_subdivision(
      parse_graph("p ecg 4 6 1\ne 1 2 1\ne 1 3 1\ne 1 4 1\ne 2 3 1\ne 2 4 1\ne 3 4 1\n"));
  EXPECT_EQ(k4.graph.n(), 16);
  EXPECT_EQ(k4.graph.m(), 18u);
  EXPECT_EQ(girth(k4.graph), 9);
  for (const auto& e : k4.graph.edges()) EXPECT_NE(k4.parts[e.u], k4.parts[e.v]);
}

TEST(CcldVc, Errors) {
  auto tri = parse_graph("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  EXPECT_THROW(gen_ccld_vc({tri, 1, {1, 2, 3}}, 4, 2), Error);
  try {
    gen_ccld_vc({tri, 1, {1, 2, 3}}, 4, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TriangleFound);
  }
  auto p3 = parse_graph("p ecg 3 2 1\ne 1 2 1\ne 2 3 1\n");
  try {
    gen_ccld_vc({p3, 1, {1, 1, 2}}, 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTripartite);
  }
}

TEST(CcldVc, ApexShape) {
  auto p3 = parse_graph("p ecg 3 2 1\ne 1 2 1\ne 2 3 1\n");
  auto l3 = gen_ccld_vc({p3, 1, {1, 2, 3}}, 3, 3);
  EXPECT_EQ(l3.graph.n(), 4);
  EXPECT_EQ(l3.graph.color(0, 1), 3);
  EXPECT_EQ(l3.graph.color(l3.vertex("alpha"), 2), 3);
  auto l4 = gen_ccld_vc({p3, 1, {1, 2, 3}}, 4, 4);
  EXPECT_EQ(l4.graph.n(), 6);
  EXPECT_TRUE(l4.validation.ok());
  EXPECT_EQ(l4.graph.color(l4.vertex("w_1^{1,2}"), 1), 4);
}

TEST(CcldVc, VertexCoverMatchesDeletion) {
  auto sub = two_subdivision(parse_graph("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n"));
  const int vc = vc_brute(sub.graph);
  for (int l = 3; l <= 5; ++l) {
    for (int c = 1; c <= std::min(l, 3); ++c) {
      auto inst = gen_ccld_vc({sub.graph, vc, sub.parts}, l, c);
      EXPECT_TRUE(inst.validation.ok()) << l << " " << c;
      EXPECT_EQ(static_cast<int>(branch_optimize(inst.graph, inst.spec).solution.size()), vc)
          << l << " " << c;
    }
  }
}

TEST(CpdHs, ThreeSetFamily) {
  auto inst = gen_cpd_hs(parse_hitting_set("1\n1 2\n3", 1));
  EXPECT_EQ(inst.spec, PatternSpec::path(10, 3));
  EXPECT_EQ(inst.graph.c(), 3);
  EXPECT_TRUE(inst.validation.ok());
  EXPECT_EQ(count_occurrences(inst.graph, inst.spec), 3u);
  EXPECT_NO_THROW(inst.vertex("v^2"));
  EXPECT_NO_THROW(inst.vertex("wt_1"));
}

TEST(CpdHs, TwoSingletons) {
  auto inst = gen_cpd_hs(parse_hitting_set("1\n2", 2));
  EXPECT_EQ(hs_brute(parse_hitting_set("1\n2", 2)), 2);
  EXPECT_EQ(brute_force(inst.graph, inst.spec).solution.size(), 2u);
  EXPECT_EQ(cascade_status(inst.graph, inst.spec).status, Cascade::StrictlyNonCascading);
}

TEST(CpdHs, PublishedFixedEdgesMissAChord) {
  // Known defect of the published construction: an induced path crosses two
  // subset gadgets through a fixed edge.
  auto hs = parse_hitting_set("2\n1 2", 1);
  auto inst = gen_cpd_hs(hs);
  EXPECT_FALSE(inst.validation.ok());
  EXPECT_EQ(count_occurrences(inst.graph, inst.spec), 3u);
  EXPECT_EQ(cascade_status(inst.graph, inst.spec).status, Cascade::Cascading);
  EXPECT_EQ(branch_optimize(inst.graph, inst.spec).solution.size(), 2u);
  auto closed = gen_cpd_hs(hs, HsFixedEdges::Closed);
  EXPECT_TRUE(closed.validation.ok());
  EXPECT_EQ(branch_optimize(closed.graph, closed.spec).solution.size(), 1u);
}

TEST(Property, ClosedHsVariantMatchesOptimum) {
  for (int eta = 1; eta <= 2; ++eta) {
    for (int fam = 1; fam < (1 << ((1 << eta) - 1)); ++fam) {
      HittingSetInstance hs;
      hs.eta = eta;
      for (int s = 1; s < (1 << eta); ++s) {
        if (!(fam >> (s - 1) & 1)) continue;
        std::vector<int> set;
        for (int x = 0; x < eta; ++x) {
          if (s >> x & 1) set.push_back(x + 1);
        }
        hs.sets.push_back(set);
      }
      try {
        hs.validate();
      } catch (const Error&) {
        continue;
      }
      hs.k = hs_brute(hs);
      auto p = gen_cpd_hs(hs, HsFixedEdges::Closed);
      auto c = gen_ccd_hs(hs, HsFixedEdges::Closed);
      EXPECT_TRUE(p.validation.ok());
      EXPECT_TRUE(c.validation.ok());
      EXPECT_EQ(static_cast<int>(branch_optimize(p.graph, p.spec).solution.size()), hs.k);
      EXPECT_EQ(static_cast<int>(branch_optimize(c.graph, c.spec).solution.size()), hs.k);
    }
  }
}

TEST(CcdHs, Census) {
  auto inst = gen_ccd_hs(parse_hitting_set("1\n2", 2));
  EXPECT_EQ(inst.spec, PatternSpec::cycle(8, 4));
  EXPECT_NO_THROW(inst.vertex("q_3"));
  EXPECT_THROW(inst.vertex("q_4"), Error);
  EXPECT_EQ(count_occurrences(inst.graph, inst.spec), 6u);
  EXPECT_TRUE(inst.validation.ok());
  EXPECT_EQ(branch_solve(inst.graph, inst.spec, 2).status, SolveStatus::Yes);
  EXPECT_EQ(branch_solve(inst.graph, inst.spec, 1).status, SolveStatus::No);
}

TEST(HsInstance, Errors) {
  EXPECT_THROW(parse_hitting_set("1\n3", 1), Error);
  EXPECT_THROW(parse_hitting_set("1 x", 1), Error);
  auto cli = parse_hitting_set("1;1 2;3", 1, ';');
  EXPECT_EQ(cli.eta, 3);
  EXPECT_EQ(cli.mu(), 3);
}

TEST(TwoP4D, Structure) {
  for (const auto& f : b2_catalog(3, true)) {
    auto inst = gen_2p4d_b2sat(f);
    EXPECT_EQ(inst.k, 35);
    EXPECT_TRUE(inst.validation.ok());
    EXPECT_FALSE(recognize_T(inst.graph).accepted());
  }
  auto inst = gen_2p4d_b2sat(kUnsat);
  EXPECT_NO_THROW(inst.vertex("r_1^4"));
  EXPECT_NO_THROW(inst.vertex("d_4^3"));
  EXPECT_NO_THROW(inst.vertex("c_4^3"));
}

}  // namespace
}  // namespace ecdel
