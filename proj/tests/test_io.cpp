#include <gtest/gtest.h>

#include "ncpath/io.hpp"
#include "ncpath/testkit/generators.hpp"

using namespace ncpath;
using namespace ncpath::io;

namespace {

Graph make(int n, std::vector<Edge> e) { return Graph::from_edges(n, e); }
Graph sun3() {
  return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}
Graph net() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Certificate round_trip(const Certificate& c) {
  return certificate_from_json(Json::parse(to_json(c).dump()));
}

}  // namespace

TEST(Digest, KnownValues) {
  EXPECT_EQ(hex_digest(""), "cbf29ce484222325");
  EXPECT_EQ(hex_digest("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(hex_digest("foobar"), "85944171f73967e8");
}

TEST(CertificateJson, RoundTripStillVerifies) {
  const TargetClass classes[] = {TargetClass::Chordal, TargetClass::NcPathTree, TargetClass::NcPathRTree,
                                 TargetClass::ProperInterval};
  for (const Graph& g : {sun3(), net(), make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})})
    for (auto cls : classes) {
      auto c = recognize(g, cls);
      auto back = round_trip(c);
      EXPECT_EQ(back.verdict, c.verdict);
      Json expect = to_json(c);
      if (expect.contains("model")) expect["model"].erase("pieces");
      EXPECT_EQ(to_json(back), expect);
      EXPECT_TRUE(verify_certificate(g, back)) << to_json(c).dump();
    }
}

TEST(CertificateJson, RandomMembersRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Graph g = testkit::gen({testkit::GenKind::RandomHostTreeNcPaths, 5 + static_cast<int>(seed % 60), seed, {}});
    auto back = round_trip(recognize(g, TargetClass::NcPathTree));
    ASSERT_EQ(back.verdict, Verdict::Member);
    ASSERT_TRUE(verify_certificate(g, back)) << seed;
  }
}

TEST(CertificateJson, TamperedInputFails) {
  const Graph g = sun3();
  Json j = to_json(recognize(g, TargetClass::NcPathTree));
  Json dropped = j;
  dropped["model"]["nodes"][0]["clique"].erase(0);
  EXPECT_FALSE(verify_certificate(g, certificate_from_json(dropped)));

  Json flipped = j;
  flipped["verdict"] = "non-member";
  EXPECT_FALSE(verify_certificate(g, certificate_from_json(flipped)));

  Json bogus = to_json(recognize(net(), TargetClass::ProperInterval));
  bogus["witness"]["vertices"] = {0, 1, 2, 3, 4, 5};
  EXPECT_FALSE(verify_certificate(sun3(), certificate_from_json(bogus)));

  Json bad_class = j;
  bad_class["class"] = "planar";
  EXPECT_THROW(certificate_from_json(bad_class), GraphError);
}

TEST(CertificateJson, Fields) {
  Json j = to_json(recognize(net(), TargetClass::ProperInterval));
  EXPECT_EQ(j["class"], "proper-interval");
  EXPECT_EQ(j["verdict"], "non-member");
  EXPECT_EQ(j["witness"]["kind"], "net");
  EXPECT_FALSE(j.contains("model"));

  Json m = to_json(recognize(sun3(), TargetClass::NcPathTree));
  EXPECT_EQ(m["model"]["shape"], "tree");
  EXPECT_EQ(m["model"]["nodes"].size(), 4u);
  EXPECT_EQ(m["model"]["edges"].size(), 3u);
  EXPECT_EQ(m["model"]["pieces"][0]["kind"], "junction-star");
}

TEST(ResultJson, DominationAndSpans) {
  Json d = to_json(mcds(sun3()));
  EXPECT_EQ(d["kind"], "mcds");
  EXPECT_EQ(d["size"], 2);
  EXPECT_EQ(d["complete_graph"], false);
  EXPECT_FALSE(to_json(mids(sun3())).contains("complete_graph"));

  Json hc = to_json(hamiltonian_cycle(sun3()));
  EXPECT_EQ(hc["kind"], "hamcycle");
  EXPECT_EQ(hc["sequence"].size(), 6u);
  Json no = to_json(hamiltonian_cycle(net()));
  EXPECT_EQ(no["exists"], false);
  EXPECT_TRUE(no["obstruction"].contains("cut_vertex"));
  Json tiny = to_json(hamiltonian_cycle(make(2, {{0, 1}})));
  EXPECT_EQ(tiny["obstruction"]["too_few_vertices"], 2);

  Json hp = to_json(hamiltonian_path(net()));
  EXPECT_EQ(hp["obstruction"]["block_cut_tree_leaves"], 3);
  Json tree = to_json(min_leaf_spanning_tree(net()));
  EXPECT_EQ(tree["kind"], "spanning-tree");
  EXPECT_EQ(tree["edges"].size(), 5u);
  EXPECT_EQ(tree["leaf_count"], 3);
}

TEST(ResultJson, Trace) {
  Json t = to_json(build_trace(sun3(), nc_model_of(sun3())));
  EXPECT_EQ(t["nodes"].size(), 3u);
  EXPECT_EQ(t["edges"].size(), 6u);
  int hops = 0, loops = 0;
  for (const auto& e : t["edges"]) {
    hops += e["kind"] == "junction-hop";
    loops += e["kind"] == "self-loop";
  }
  EXPECT_EQ(hops, 3);
  EXPECT_EQ(loops, 3);
}

TEST(Dot, ContainsNodesAndEdges) {
  const std::string md = model_to_dot(nc_model_of(sun3()));
  EXPECT_NE(md.find("graph model"), std::string::npos);
  EXPECT_NE(md.find("n3"), std::string::npos);
  EXPECT_NE(md.find("junction"), std::string::npos);
  EXPECT_NE(md.find("lightgrey"), std::string::npos);
  const std::vector<Vertex> hi{1};
  const std::string gd = graph_to_dot(net(), hi);
  EXPECT_NE(gd.find("2 -- 5;"), std::string::npos);
  EXPECT_NE(gd.find("1 [style=filled"), std::string::npos);
}

TEST(RunReport, Fields) {
  RunReport r{"mcds", "x.txt", hex_digest("abc"), 12, Json{{"size", 1}}, "verified"};
  Json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input", "digest", "wall_ns", "result", "verification"}));
  EXPECT_EQ(j["verification"], "verified");
}
