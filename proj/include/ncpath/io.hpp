#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncpath/domination.hpp"
#include "ncpath/hamiltonicity.hpp"
#include "ncpath/recognition.hpp"

namespace ncpath::io {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex_digest(std::string_view bytes) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a(bytes);
  return os.str();
}

inline NodeClass node_class_from_string(std::string_view s) {
  for (auto c : {NodeClass::Terminal, NodeClass::Mixed, NodeClass::Junction})
    if (to_string(c) == s) return c;
  throw GraphError("unknown node class '" + std::string(s) + "'");
}

inline HostShape host_shape_from_string(std::string_view s) {
  for (auto h : {HostShape::Tree, HostShape::RootedTree, HostShape::Path})
    if (to_string(h) == s) return h;
  throw GraphError("unknown host shape '" + std::string(s) + "'");
}

inline Json to_json(const Witness& w) {
  Json j{{"kind", to_string(w.kind)}, {"vertices", w.vertices}};
  if (w.kind == WitnessKind::Claw) j["center"] = w.center;
  return j;
}

inline Witness witness_from_json(const Json& j) {
  Witness w;
  w.kind = witness_kind_from_string(j.at("kind").get<std::string>());
  w.vertices = j.at("vertices").get<std::vector<Vertex>>();
  if (j.contains("center")) w.center = j.at("center").get<Vertex>();
  return w;
}

inline Json model_to_json(const NcModel& m) {
  Json nodes = Json::array();
  for (std::size_t x = 0; x < m.tree.cliques.size(); ++x) {
    auto c = m.tree.cliques[x];
    Json node{{"id", x}, {"clique", std::vector<Vertex>(c.begin(), c.end())}};
    if (!m.node_class.empty()) node["class"] = to_string(m.node_class[x]);
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (auto [a, b] : m.tree.edges) edges.push_back({a, b});
  Json j{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (!m.pieces.empty()) {
    Json pieces = Json::array();
    for (const auto& p : m.pieces)
      pieces.push_back({{"kind", p.kind == PieceKind::JunctionStar ? "junction-star" : "terminal-path"}, {"nodes", p.nodes}});
    j["pieces"] = std::move(pieces);
  }
  return j;
}

// Rebuilds only what verification reads: cliques, host edges and node classes.
inline NcModel model_from_json(const Json& j) {
  NcModel m;
  for (const auto& node : j.at("nodes")) {
    auto clique = node.at("clique").get<std::vector<Vertex>>();
    m.tree.cliques.add_row(clique);
    if (node.contains("class")) m.node_class.push_back(node_class_from_string(node.at("class").get<std::string>()));
  }
  for (const auto& e : j.at("edges")) m.tree.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return m;
}

inline Json to_json(const Certificate& c) {
  Json j{{"class", to_string(c.target)}, {"verdict", to_string(c.verdict)}};
  if (c.payload) {
    Json model = model_to_json(c.payload->model);
    model["shape"] = to_string(c.payload->shape);
    if (c.payload->shape == HostShape::RootedTree) model["root"] = c.payload->root;
    j["model"] = std::move(model);
  }
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.target = target_class_from_string(j.at("class").get<std::string>());
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "member" && verdict != "non-member") throw GraphError("unknown verdict '" + verdict + "'");
  c.verdict = verdict == "member" ? Verdict::Member : Verdict::NonMember;
  if (j.contains("model")) {
    const auto& mj = j.at("model");
    ModelPayload p;
    p.model = model_from_json(mj);
    if (mj.contains("shape")) p.shape = host_shape_from_string(mj.at("shape").get<std::string>());
    if (mj.contains("root")) p.root = mj.at("root").get<int>();
    c.payload = std::move(p);
  }
  if (j.contains("witness")) c.witness = witness_from_json(j.at("witness"));
  return c;
}

inline Json to_json(const DomResult& r) {
  Json j{{"kind", to_string(r.kind)}, {"size", r.size()}, {"vertices", r.vertices}, {"optimal", true}};
  if (r.kind == DomKind::MCDS) j["complete_graph"] = r.complete_graph;
  return j;
}

inline Json to_json(const SpanResult& r) {
  Json j{{"kind", to_string(r.kind)}};
  if (r.kind == SpanKind::SpanningTree) {
    Json edges = Json::array();
    for (auto [u, v] : r.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
  } else {
    j["sequence"] = r.sequence;
  }
  j["leaf_count"] = r.leaf_count;
  return j;
}

inline Json to_json(const CycleOutcome& c) {
  if (auto* r = std::get_if<SpanResult>(&c)) return to_json(*r);
  const auto& nb = std::get<NotBiconnected>(c);
  Json j{{"kind", "hamcycle"}, {"exists", false}};
  if (nb.cut_vertex >= 0)
    j["obstruction"] = {{"cut_vertex", nb.cut_vertex}};
  else
    j["obstruction"] = {{"too_few_vertices", nb.n}};
  return j;
}

inline Json to_json(const PathOutcome& p) {
  if (auto* r = std::get_if<SpanResult>(&p)) return to_json(*r);
  return Json{{"kind", "hampath"}, {"exists", false}, {"obstruction", {{"block_cut_tree_leaves", std::get<TooManyLeaves>(p).leaves}}}};
}

inline Json to_json(const TraceMultigraph& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", to_string(e.kind)}, {"payload", e.payload}});
  return Json{{"nodes", t.nodes}, {"edges", std::move(edges)}};
}

/// Graphviz rendering of a model: one box per host node labelled with its clique and class.
inline std::string model_to_dot(const NcModel& m) {
  std::ostringstream os;
  os << "graph model {\n  node [shape=box];\n";
  for (std::size_t x = 0; x < m.tree.cliques.size(); ++x) {
    os << "  n" << x << " [label=\"" << x << ": {";
    auto c = m.tree.cliques[x];
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
    if (!m.node_class.empty()) {
      os << "\\n" << to_string(m.node_class[x]);
      if (m.node_class[x] == NodeClass::Junction) os << "\" style=filled fillcolor=\"lightgrey";
    }
    os << "\"];\n";
  }
  for (std::size_t e = 0; e < m.tree.edges.size(); ++e) {
    os << "  n" << m.tree.edges[e].first << " -- n" << m.tree.edges[e].second;
    if (!m.tree.separators.empty()) {
      os << " [label=\"";
      auto s = m.tree.separators[e];
      for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
      os << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string graph_to_dot(const Graph& g, std::span<const Vertex> highlight = {}) {
  std::vector<char> hi(g.n(), 0);
  for (Vertex v : highlight) hi[v] = 1;
  std::ostringstream os;
  os << "graph g {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (hi[v]) os << " [style=filled fillcolor=\"lightgrey\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// One line of CLI output.
struct RunReport {
  std::string command;
  std::string input;
  std::string digest;
  std::int64_t wall_ns = 0;
  Json result;
  std::string verification = "not-applicable";  // "verified" or "failed" when a certificate was checked
};

inline Json to_json(const RunReport& r) {
  return Json{{"command", r.command}, {"input", r.input},       {"digest", r.digest},
              {"wall_ns", r.wall_ns}, {"result", r.result},     {"verification", r.verification}};
}

}  // namespace ncpath::io
