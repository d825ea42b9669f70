#include <gtest/gtest.h>

#include "ncpath/hamiltonicity.hpp"
#include "ncpath/testkit/exhaustive.hpp"
#include "ncpath/testkit/generators.hpp"
#include "ncpath/testkit/oracles.hpp"

using namespace ncpath;

namespace {

Graph make(int n, std::vector<Edge> e) { return Graph::from_edges(n, e); }
Graph sun3() {
  return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}
Graph net() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }
Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}

bool is_member(const Graph& g) { return recognize(g, TargetClass::NcPathTree).verdict == Verdict::Member; }

void expect_sequence(const Graph& g, const std::vector<Vertex>& seq, bool cyclic) {
  ASSERT_EQ(static_cast<int>(seq.size()), g.n());
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.n(); ++i) ASSERT_EQ(sorted[i], i);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) ASSERT_TRUE(g.adjacent(seq[i], seq[i + 1]));
  if (cyclic) {
    ASSERT_TRUE(g.adjacent(seq.back(), seq.front()));
  }
}

void expect_spanning_tree(const Graph& g, const SpanResult& t) {
  ASSERT_EQ(static_cast<int>(t.edges.size()), g.n() - 1);
  std::vector<int> parent(g.n());
  for (int i = 0; i < g.n(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> deg(g.n(), 0);
  for (auto [u, v] : t.edges) {
    ASSERT_TRUE(g.adjacent(u, v));
    ASSERT_NE(find(u), find(v)) << "cycle";
    parent[find(u)] = find(v);
    ++deg[u];
    ++deg[v];
  }
  ASSERT_EQ(t.leaf_count, static_cast<int>(std::count(deg.begin(), deg.end(), 1)));
}

void expect_trace_valid(const Graph& g, const NcModel& m, const TraceMultigraph& t) {
  std::vector<int> deg(m.tree.node_count(), 0), seen(g.n(), 0);
  for (const auto& e : t.edges) {
    deg[e.a] += 1;
    deg[e.b] += 1;
    ASSERT_FALSE(e.payload.empty());
    for (std::size_t i = 0; i + 1 < e.payload.size(); ++i) ASSERT_TRUE(g.adjacent(e.payload[i], e.payload[i + 1]));
    ASSERT_TRUE(m.in_path(e.payload.front(), e.a));
    ASSERT_TRUE(m.in_path(e.payload.back(), e.b));
    for (Vertex v : e.payload) ++seen[v];
  }
  for (int d : deg) ASSERT_EQ(d % 2, 0);
  for (int s : seen) ASSERT_EQ(s, 1);
}

}  // namespace

TEST(Trace, SunHasJunctionTriangle) {
  Graph g = sun3();
  NcModel m = nc_model_of(g);
  auto t = build_trace(g, m);
  EXPECT_EQ(t.nodes.size(), 3u);
  int hops = 0;
  for (const auto& e : t.edges) hops += e.kind == TraceEdgeKind::JunctionHop;
  EXPECT_EQ(hops, 3);
  expect_trace_valid(g, m, t);
}

TEST(Trace, ProperIntervalGivesDoubleEdge) {
  // Two triangles glued along the edge 1-2 plus a third one on 2-3: one mixed node.
  Graph g = make(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  NcModel m = nc_model_of(g);
  auto t = build_trace(g, m);
  EXPECT_EQ(t.nodes.size(), 2u);
  int chains = 0;
  for (const auto& e : t.edges) chains += e.kind == TraceEdgeKind::ChainPath;
  EXPECT_EQ(chains, 2);
  expect_trace_valid(g, m, t);
  EXPECT_THROW(build_trace(net(), nc_model_of(net())), GraphError);
}

TEST(TwoPaths, CliqueSplit) {
  // Two triangles sharing the edge {1,2}: the aux graph of the single host edge is K2 plus sentinels.
  Graph g = make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  NcModel m = nc_model_of(g);
  ASSERT_EQ(m.pieces.size(), 1u);
  auto tp = two_paths(m.aux[0]);
  EXPECT_EQ(tp.first, (std::vector<Vertex>{1}));
  EXPECT_EQ(tp.second, (std::vector<Vertex>{2}));
  EXPECT_EQ(aux_hamiltonian_path(m.aux[0]), (std::vector<Vertex>{1, 2}));
}

TEST(HamCycle, Examples) {
  auto sun = hamiltonian_cycle(sun3());
  ASSERT_TRUE(std::holds_alternative<SpanResult>(sun));
  expect_sequence(sun3(), std::get<SpanResult>(sun).sequence, true);
  auto n = hamiltonian_cycle(net());
  ASSERT_TRUE(std::holds_alternative<NotBiconnected>(n));
  EXPECT_EQ(std::get<NotBiconnected>(n).cut_vertex, 0);
  auto k3 = hamiltonian_cycle(make(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(std::get<SpanResult>(k3).sequence, (std::vector<Vertex>{0, 1, 2}));
  auto k2 = hamiltonian_cycle(path(2));
  EXPECT_EQ(std::get<NotBiconnected>(k2).cut_vertex, -1);
  EXPECT_THROW(hamiltonian_cycle(make(4, {{0, 1}, {0, 2}, {0, 3}})), NotMemberError);
}

TEST(HamPath, Examples) {
  Graph bowtie = make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto b = hamiltonian_path(bowtie);
  ASSERT_TRUE(std::holds_alternative<SpanResult>(b));
  expect_sequence(bowtie, std::get<SpanResult>(b).sequence, false);
  auto n = hamiltonian_path(net());
  ASSERT_TRUE(std::holds_alternative<TooManyLeaves>(n));
  EXPECT_EQ(std::get<TooManyLeaves>(n).leaves, 3);
  auto s = hamiltonian_path(sun3());
  ASSERT_TRUE(std::holds_alternative<SpanResult>(s));
  expect_sequence(sun3(), std::get<SpanResult>(s).sequence, false);
  EXPECT_EQ(std::get<SpanResult>(hamiltonian_path(path(1))).sequence, (std::vector<Vertex>{0}));
}

TEST(MinLeaf, Examples) {
  auto n = min_leaf_spanning_tree(net());
  expect_spanning_tree(net(), n);
  EXPECT_EQ(n.leaf_count, 3);
  auto p = min_leaf_spanning_tree(path(5));
  EXPECT_EQ(p.leaf_count, 2);
  expect_spanning_tree(path(5), p);
  Graph fan = make(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
  // Three triangles on a common vertex contain the claw (0; 1, 3, 5).
  EXPECT_THROW(min_leaf_spanning_tree(fan), NotMemberError);
  EXPECT_EQ(min_leaf_spanning_tree(path(1)).leaf_count, 0);
}

TEST(Hamiltonicity, ExhaustiveAgainstOracle) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      if (!is_member(g)) continue;
      NcModel m = nc_model_of(g);
      auto c = hamiltonian_cycle(g, m);
      ASSERT_EQ(std::holds_alternative<SpanResult>(c), testkit::oracle_hamiltonian_cycle(g)) << serialize(g);
      if (auto* r = std::get_if<SpanResult>(&c)) {
        expect_sequence(g, r->sequence, true);
        if (!m.pieces.empty()) expect_trace_valid(g, m, build_trace(g, m));
      }
      auto p = hamiltonian_path(g);
      ASSERT_EQ(std::holds_alternative<SpanResult>(p), testkit::oracle_hamiltonian_path(g)) << serialize(g);
      if (auto* r = std::get_if<SpanResult>(&p)) expect_sequence(g, r->sequence, false);
      auto t = min_leaf_spanning_tree(g);
      expect_spanning_tree(g, t);
      ASSERT_EQ(t.leaf_count, testkit::oracle_min_leaf(g)) << serialize(g);
      if (HasFatalFailure()) return;
    }
}

TEST(Hamiltonicity, RandomAgainstOracle) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    testkit::GenSpec spec{testkit::GenKind::RandomHostTreeNcPaths, 9 + static_cast<int>(seed % 3), seed, {}};
    spec.params.min_cover = 1 + static_cast<int>(seed % 2);
    Graph g = testkit::gen(spec);
    if (g.n() > 11) continue;
    auto c = hamiltonian_cycle(g);
    ASSERT_EQ(std::holds_alternative<SpanResult>(c), testkit::oracle_hamiltonian_cycle(g)) << serialize(g);
    auto p = hamiltonian_path(g);
    ASSERT_EQ(std::holds_alternative<SpanResult>(p), testkit::oracle_hamiltonian_path(g)) << serialize(g);
    auto t = min_leaf_spanning_tree(g);
    expect_spanning_tree(g, t);
    ASSERT_EQ(t.leaf_count, testkit::oracle_min_leaf(g)) << serialize(g);
  }
}

TEST(Hamiltonicity, LargeBiconnectedInstances) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    testkit::GenSpec spec{testkit::GenKind::RandomHostTreeNcPaths, 3000, seed, {}};
    spec.params.min_cover = 2;
    Graph g = testkit::gen(spec);
    NcModel m = nc_model_of(g);
    expect_trace_valid(g, m, build_trace(g, m));
    auto c = hamiltonian_cycle(g, m);
    ASSERT_TRUE(std::holds_alternative<SpanResult>(c)) << seed;
    expect_sequence(g, std::get<SpanResult>(c).sequence, true);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = testkit::gen({testkit::GenKind::RandomHostTreeNcPaths, 3000, seed, {}});
    auto t = min_leaf_spanning_tree(g);
    expect_spanning_tree(g, t);
    EXPECT_EQ(t.leaf_count, block_cut_tree(g).cut_vertices.empty() ? 2 : block_cut_tree(g).leaf_count);
  }
}
