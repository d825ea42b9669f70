#include <gtest/gtest.h>

#include "ncpath/blocks.hpp"
#include "ncpath/graph.hpp"
#include "ncpath/testkit/exhaustive.hpp"
#include "ncpath/testkit/generators.hpp"
#include "ncpath/testkit/oracles.hpp"

using namespace ncpath;

namespace {
Graph make(int n, std::vector<Edge> e) { return Graph::from_edges(n, e); }
Graph net() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }
}  // namespace

TEST(Parse, StarFromEdgeList) {
  Graph g = parse_graph("4 3\n0 1\n0 2\n0 3");
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 3);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(Parse, TriangleWithComments) {
  Graph g = parse_graph("# a triangle\n3 3\n0 1\n# middle\n1 2\n0 2\n");
  EXPECT_EQ(g, make(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(Parse, RejectsSelfLoop) {
  try {
    parse_graph("2 1\n0 0");
    FAIL() << "expected an error";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Parse, RejectsDuplicateEdge) {
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0"), GraphError);
}

TEST(Parse, RejectsOutOfRangeAndBadHeader) {
  EXPECT_THROW(parse_graph("2 1\n0 2"), GraphError);
  EXPECT_THROW(parse_graph("2\n0 1"), GraphError);
  EXPECT_THROW(parse_graph("2 2\n0 1"), GraphError);
  EXPECT_THROW(parse_graph("x 1\n0 1"), GraphError);
  EXPECT_THROW(parse_graph(""), GraphError);
}

TEST(Parse, DimacsIsOneBased) {
  Graph g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs);
  EXPECT_EQ(g, make(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(parse_graph("p edge 3 1\ne 0 1\n", Format::Dimacs), GraphError);
}

TEST(Parse, SerializeRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    testkit::GenSpec spec{testkit::GenKind::RandomChordal, 25, seed, {}};
    Graph g = testkit::gen(spec);
    EXPECT_EQ(parse_graph(serialize(g)), g);
    EXPECT_EQ(parse_graph(serialize(g, Format::Dimacs), Format::Dimacs), g);
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(make(3, {{0, 1}, {1, 2}, {0, 2}})).size(), 1u);
  auto two = connected_components(make(4, {{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1], std::vector<Vertex>{3});
  EXPECT_EQ(connected_components(make(3, {})).size(), 3u);
}

TEST(Components, RequireConnectedNamesSeparatedVertices) {
  try {
    require_connected(make(4, {{0, 1}, {2, 3}}));
    FAIL();
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.first, 0);
    EXPECT_EQ(e.second, 2);
  }
}

TEST(Blocks, Triangle) {
  auto bc = block_cut_tree(make(3, {{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_EQ(bc.blocks.size(), 1u);
  EXPECT_EQ(bc.blocks[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(bc.cut_vertices.empty());
  EXPECT_EQ(bc.leaf_count, 1);
}

TEST(Blocks, PathP4) {
  auto bc = block_cut_tree(make(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(bc.blocks.size(), 3u);
  EXPECT_EQ(bc.cut_vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(bc.leaf_count, 2);
  EXPECT_TRUE(bc.is_path());
}

TEST(Blocks, NetMatchesBruteForce) {
  Graph g = net();
  auto bc = block_cut_tree(g);
  EXPECT_EQ(bc.blocks, testkit::oracle_blocks(g));
  EXPECT_EQ(bc.cut_vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(bc.leaf_count, 3);
}

TEST(Blocks, SingleVertexAndDisconnected) {
  auto bc = block_cut_tree(make(1, {}));
  EXPECT_EQ(bc.blocks.size(), 1u);
  EXPECT_EQ(bc.leaf_count, 1);
  EXPECT_THROW(block_cut_tree(make(3, {{0, 1}})), DisconnectedError);
}

TEST(Blocks, ExhaustiveAgainstOracle) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      auto bc = block_cut_tree(g);
      ASSERT_EQ(bc.blocks, testkit::oracle_blocks(g)) << serialize(g);
      ASSERT_EQ(bc.cut_vertices, testkit::oracle_cut_vertices(g)) << serialize(g);
      int leaves = 0;
      for (const auto& cuts : bc.block_cuts) leaves += cuts.size() == 1;
      ASSERT_EQ(bc.leaf_count, bc.cut_vertices.empty() ? 1 : leaves);
      // Acyclic and connected incidence structure: a tree on blocks + cut vertices.
      ASSERT_EQ(bc.tree_edges.size(), bc.blocks.size() + bc.cut_vertices.size() - 1);
    }
}

TEST(Blocks, LongPathNeedsNoRecursion) {
  const int n = 1'000'000;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  auto bc = block_cut_tree(Graph::from_edges(n, e));
  EXPECT_EQ(bc.blocks.size(), static_cast<std::size_t>(n - 1));
  EXPECT_EQ(bc.leaf_count, 2);
}

TEST(Twins, Examples) {
  auto k3 = twin_partition(make(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(k3.classes.size(), 1u);
  auto p4 = twin_partition(make(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(p4.classes.size(), 4u);
  auto k4 = twin_partition(make(4, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {3, 2}}));
  ASSERT_EQ(k4.classes.size(), 1u);
  EXPECT_EQ(k4.classes[0].size(), 4u);
}

TEST(Twins, ExactOnSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testkit::all_graphs(n, false)) {
      auto tp = twin_partition(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          std::vector<Vertex> nu(g.neighbors(u).begin(), g.neighbors(u).end());
          std::vector<Vertex> nv(g.neighbors(v).begin(), g.neighbors(v).end());
          nu.push_back(u);
          nv.push_back(v);
          std::sort(nu.begin(), nu.end());
          std::sort(nv.begin(), nv.end());
          ASSERT_EQ(tp.class_of[u] == tp.class_of[v], nu == nv);
          if (tp.class_of[u] == tp.class_of[v]) {
            ASSERT_EQ(g.degree(u), g.degree(v));
          }
        }
    }
}

TEST(Induced, SubgraphMapsBack) {
  Graph g = net();
  auto sub = induced_subgraph(g, std::vector<Vertex>{5, 0, 2});
  EXPECT_EQ(sub.to_original, (std::vector<Vertex>{0, 2, 5}));
  EXPECT_EQ(sub.graph, make(3, {{0, 1}, {1, 2}}));
}
