#include <gtest/gtest.h>

#include <set>

#include "ncpath/chordal.hpp"
#include "ncpath/testkit/exhaustive.hpp"
#include "ncpath/testkit/generators.hpp"
#include "ncpath/testkit/oracles.hpp"

using namespace ncpath;

namespace {

Graph make(int n, std::vector<Edge> e) { return Graph::from_edges(n, e); }
Graph c4() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph k3() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph p4() { return make(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph sun3() {
  return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}
Graph net() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }
Graph claw() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }

Peo peo_of(const Graph& g) { return std::get<Peo>(chordality(g)); }

// Full structural audit of a clique tree against g.
::testing::AssertionResult audit(const Graph& g, const CliqueTree& t) {
  const int nodes = t.node_count();
  auto cliques = t.cliques.to_vectors();
  auto sorted = cliques;
  std::sort(sorted.begin(), sorted.end());
  if (g.n() <= 16 && sorted != testkit::oracle_maximal_cliques(g))
    return ::testing::AssertionFailure() << "cliques differ from maximal cliques";
  if (nodes > g.n()) return ::testing::AssertionFailure() << "too many nodes";
  if (t.total_size > static_cast<std::size_t>(g.n() + 2 * g.m()))
    return ::testing::AssertionFailure() << "size bound";
  if (static_cast<int>(t.edges.size()) != nodes - 1) return ::testing::AssertionFailure() << "not a tree";
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [a, b] = t.edges[e];
    std::vector<Vertex> inter;
    std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(), cliques[b].end(),
                          std::back_inserter(inter));
    if (inter.empty()) return ::testing::AssertionFailure() << "empty separator";
    std::vector<Vertex> sep(t.separators[e].begin(), t.separators[e].end());
    if (sep != inter) return ::testing::AssertionFailure() << "separator mismatch";
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    auto occ = t.occ[v];
    if (occ.empty()) return ::testing::AssertionFailure() << "vertex without clique";
    std::set<int> in(occ.begin(), occ.end());
    std::set<int> seen{occ[0]};
    std::vector<int> stack{occ[0]};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto arc : t.adj[x])
        if (in.count(arc.to) && !seen.count(arc.to)) {
          seen.insert(arc.to);
          stack.push_back(arc.to);
        }
    }
    if (seen.size() != in.size()) return ::testing::AssertionFailure() << "occ not connected for " << v;
  }
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      auto ou = t.occ[u], ov = t.occ[v];
      std::vector<int> inter;
      std::set_intersection(ou.begin(), ou.end(), ov.begin(), ov.end(), std::back_inserter(inter));
      if (inter.empty() == g.adjacent(u, v))
        return ::testing::AssertionFailure() << "intersection graph differs at " << u << "," << v;
    }
  return ::testing::AssertionSuccess();
}

}  // namespace

TEST(Chordality, C4GivesItsHole) {
  auto r = chordality(c4());
  ASSERT_TRUE(std::holds_alternative<Hole>(r));
  auto cyc = std::get<Hole>(r).cycle;
  EXPECT_TRUE(is_hole(c4(), cyc));
  std::sort(cyc.begin(), cyc.end());
  EXPECT_EQ(cyc, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Chordality, CompleteAndSunAreChordal) {
  EXPECT_TRUE(is_peo(k3(), peo_of(k3()).order));
  EXPECT_TRUE(is_peo(sun3(), peo_of(sun3()).order));
}

TEST(Chordality, CheckPeoRejectsBadOrder) {
  // Eliminating the center of P3 first is not perfect.
  Graph p3 = make(3, {{0, 1}, {1, 2}});
  auto bad = check_peo(p3, std::vector<Vertex>{1, 0, 2});
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->v, 1);
  EXPECT_THROW(check_peo(p3, std::vector<Vertex>{0, 0, 1}), GraphError);
}

TEST(Chordality, ExhaustiveAgreesWithHoleSearch) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      auto r = chordality(g);
      const bool oracle_chordal = !testkit::oracle_forbidden(g, WitnessKind::Hole).has_value();
      ASSERT_EQ(std::holds_alternative<Peo>(r), oracle_chordal) << serialize(g);
      ASSERT_EQ(oracle_chordal, testkit::oracle_chordal(g));
      if (auto* p = std::get_if<Peo>(&r)) {
        ASSERT_TRUE(is_peo(g, p->order));
      } else {
        ASSERT_TRUE(is_hole(g, std::get<Hole>(r).cycle)) << serialize(g);
      }
    }
}

TEST(Chordality, RandomLargerNonChordalHolesAreInduced) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    testkit::Rng rng(seed);
    const int n = 30;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(0.12)) e.emplace_back(u, v);
    Graph g = Graph::from_edges(n, e);
    auto r = chordality(g);
    ASSERT_EQ(std::holds_alternative<Peo>(r), testkit::oracle_chordal(g));
    if (auto* h = std::get_if<Hole>(&r)) {
      ASSERT_TRUE(is_hole(g, h->cycle));
    }
  }
}

TEST(CliqueTree, Complete) {
  auto t = clique_tree(k3(), peo_of(k3()));
  EXPECT_EQ(t.node_count(), 1);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(t.occ.row_size(v), 1u);
}

TEST(CliqueTree, PathP4) {
  auto t = clique_tree(p4(), peo_of(p4()));
  EXPECT_EQ(t.node_count(), 3);
  EXPECT_EQ(t.occ.row_size(1), 2u);
  EXPECT_TRUE(audit(p4(), t));
}

TEST(CliqueTree, SunIsAStar) {
  Graph g = sun3();
  auto t = clique_tree(g, peo_of(g));
  ASSERT_EQ(t.node_count(), 4);
  int center = -1;
  for (int x = 0; x < 4; ++x)
    if (t.adj.row_size(x) == 3) center = x;
  ASSERT_NE(center, -1);
  EXPECT_EQ(std::vector<Vertex>(t.cliques[center].begin(), t.cliques[center].end()),
            (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(audit(g, t));
}

TEST(CliqueTree, RejectsInvalidPeoAndDisconnected) {
  EXPECT_THROW(clique_tree(p4(), Peo{{1, 0, 2, 3}}), GraphError);
  Graph two = make(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(clique_tree(two, peo_of(two)), DisconnectedError);
}

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(k3(), peo_of(k3())), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_EQ(maximal_cliques(claw(), peo_of(claw())),
            (std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(maximal_cliques(net(), peo_of(net())),
            (std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 3}, {1, 4}, {2, 5}}));
}

TEST(CliqueTree, ExhaustiveChordalGraphs) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      auto r = chordality(g);
      if (!std::holds_alternative<Peo>(r)) continue;
      ASSERT_TRUE(audit(g, clique_tree(g, std::get<Peo>(r)))) << serialize(g);
    }
}

TEST(CliqueTree, RandomChordalFromManyOrders) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Graph g = testkit::gen({testkit::GenKind::RandomChordal, 14, seed, {}});
    testkit::Rng rng(seed);
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Vertex> init(g.n());
      std::iota(init.begin(), init.end(), 0);
      rng.shuffle(std::span<Vertex>(init));
      auto visit = lex_bfs(g, init);
      Peo peo{{visit.rbegin(), visit.rend()}};
      ASSERT_TRUE(is_peo(g, peo.order));
      ASSERT_TRUE(audit(g, clique_tree(g, peo))) << serialize(g);
    }
  }
}

TEST(CliqueTree, UniqueForClawFreeChordal) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Graph g = testkit::gen({testkit::GenKind::RandomHostTreeNcPaths, 40, seed, {}});
    auto ref = canonical_form(clique_tree(g, peo_of(g)));
    testkit::Rng rng(seed * 7 + 1);
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<Vertex> init(g.n());
      std::iota(init.begin(), init.end(), 0);
      rng.shuffle(std::span<Vertex>(init));
      auto visit = lex_bfs(g, init);
      ASSERT_EQ(canonical_form(clique_tree(g, Peo{{visit.rbegin(), visit.rend()}})), ref);
    }
  }
}

TEST(LexBfs, ProperIntervalOrderOnGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Graph g = testkit::gen({testkit::GenKind::RandomProperInterval, 30, seed, {}});
    auto order = proper_interval_order(g);
    ASSERT_TRUE(order.has_value());
    EXPECT_TRUE(is_umbrella_order(g, *order));
  }
  EXPECT_FALSE(proper_interval_order(claw()).has_value());
  EXPECT_FALSE(proper_interval_order(net()).has_value());
}
