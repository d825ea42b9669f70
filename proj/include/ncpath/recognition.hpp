#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncpath/chordal.hpp"
#include "ncpath/nc_model.hpp"
#include "ncpath/witness.hpp"

namespace ncpath {

enum class TargetClass { Chordal, NcPathTree, NcPathRTree, ProperInterval };

inline std::string_view to_string(TargetClass c) {
  switch (c) {
    case TargetClass::Chordal: return "chordal";
    case TargetClass::NcPathTree: return "nc-path-tree";
    case TargetClass::NcPathRTree: return "nc-path-rtree";
    case TargetClass::ProperInterval: return "proper-interval";
  }
  return "?";
}

inline TargetClass target_class_from_string(std::string_view s) {
  for (auto c : {TargetClass::Chordal, TargetClass::NcPathTree, TargetClass::NcPathRTree, TargetClass::ProperInterval})
    if (to_string(c) == s) return c;
  throw GraphError("unknown class '" + std::string(s) + "'");
}

enum class Verdict { Member, NonMember };

inline std::string_view to_string(Verdict v) { return v == Verdict::Member ? "member" : "non-member"; }

enum class HostShape { Tree, RootedTree, Path };

inline std::string_view to_string(HostShape h) {
  switch (h) {
    case HostShape::Tree: return "tree";
    case HostShape::RootedTree: return "rooted-tree";
    case HostShape::Path: return "path";
  }
  return "?";
}

/// Model half of a member certificate. For the chordal class only the clique tree is filled.
struct ModelPayload {
  NcModel model;
  HostShape shape = HostShape::Tree;
  int root = -1;  // rooted-tree hosts only
};

struct Certificate {
  TargetClass target = TargetClass::NcPathTree;
  Verdict verdict = Verdict::Member;
  std::optional<ModelPayload> payload;  // member
  std::optional<Witness> witness;       // non-member
};

/// Thrown where a chordal input is required; carries the hole that proves otherwise.
class NotChordalError : public GraphError {
 public:
  explicit NotChordalError(Hole h) : GraphError("graph is not chordal"), hole(std::move(h)) {}
  Hole hole;
};

namespace detail {

// Ends of the path of v and, for each end, its neighbor on the path (or -1 for a single node).
struct PathEnds {
  int e1 = -1, t1 = -1, e2 = -1, t2 = -1;
};

inline PathEnds path_ends_in(const CliqueTree& t, Vertex v) {
  PathEnds p;
  auto occ = t.occ[v];
  for (int x : occ) {
    int inside = 0, last = -1;
    for (auto arc : t.adj[x])
      if (std::binary_search(occ.begin(), occ.end(), arc.to)) {
        ++inside;
        last = arc.to;
      }
    if (inside > 1) continue;
    if (p.e1 < 0) {
      p.e1 = x;
      p.t1 = last;
    } else {
      p.e2 = x;
      p.t2 = last;
    }
  }
  return p;
}

inline Witness claw_of(Vertex center, Vertex a, Vertex b, Vertex c) {
  return Witness{WitnessKind::Claw, {center, a, b, c}, center};
}

inline Witness crossing_claw(const CliqueTree& t, CrossingPair cp) {
  const PathEnds p = path_ends_in(t, cp.outer);
  const Vertex a1 = lowest_difference(t.cliques[p.e1], t.cliques[p.t1]);
  const Vertex a2 = lowest_difference(t.cliques[p.e2], t.cliques[p.t2]);
  return claw_of(cp.outer, cp.inner, a1, a2);
}

}  // namespace detail

/// Turns an annotate failure into an induced claw of g.
inline Witness extract_claw(const Graph& g, const CliqueTree& t, const CrossReport& r) {
  (void)g;
  return std::visit(
      [&](const auto& rep) -> Witness {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, NonPathVertex>) {
          Vertex leaves[3];
          for (int i = 0; i < 3; ++i)
            leaves[i] = detail::lowest_difference(t.cliques[rep.branches[i]], t.cliques[rep.node]);
          return detail::claw_of(rep.v, leaves[0], leaves[1], leaves[2]);
        } else if constexpr (std::is_same_v<R, ProperIntervalFailure>) {
          return detail::claw_of(rep.claw[0], rep.claw[1], rep.claw[2], rep.claw[3]);
        } else {
          return detail::crossing_claw(t, rep.pair);
        }
      },
      r);
}

/// 3-sun around a junction star: inner triple from the three classes, outer triple hanging off
/// the three neighbors.
inline Witness three_sun_at(const NcModel& m, const ModelPiece& star) {
  auto cls = junction_classes(m, star);
  const auto& t = m.tree;
  const int x = star.nodes[0];
  Vertex u[3];
  for (int i = 0; i < 3; ++i) u[i] = detail::lowest_difference(t.cliques[star.nodes[i + 1]], t.cliques[x]);
  return Witness{WitnessKind::ThreeSun, {cls[0][0], cls[1][0], cls[2][0], u[1], u[2], u[0]}, -1};
}

/// Net around a terminal of degree at least three, using its first three neighbors.
inline Witness net_at(const NcModel& m, int x) {
  const auto& t = m.tree;
  Witness w{WitnessKind::Net, std::vector<Vertex>(6), -1};
  for (int i = 0; i < 3; ++i) {
    const TreeArc arc = t.adj[x][i];
    w.vertices[i] = t.separators[arc.edge][0];
    w.vertices[i + 3] = detail::lowest_difference(t.cliques[arc.to], t.cliques[x]);
  }
  return w;
}

namespace detail {

inline Certificate non_member(TargetClass c, Witness w) {
  return Certificate{c, Verdict::NonMember, std::nullopt, std::move(w)};
}

}  // namespace detail

/// Certifying recognition of a connected graph.
inline Certificate recognize(const Graph& g, TargetClass target) {
  require_connected(g);
  auto ch = chordality(g);
  if (auto* h = std::get_if<Hole>(&ch)) return detail::non_member(target, Witness{WitnessKind::Hole, h->cycle, -1});
  CliqueTree t = clique_tree(g, std::get<Peo>(ch));
  if (target == TargetClass::Chordal) {
    ModelPayload p;
    p.model.tree = std::move(t);
    return Certificate{target, Verdict::Member, std::move(p), std::nullopt};
  }
  auto annotated = annotate(g, t);
  if (auto* r = std::get_if<CrossReport>(&annotated)) return detail::non_member(target, extract_claw(g, t, *r));
  ModelPayload p;
  p.model = std::move(std::get<NcModel>(annotated));
  const NcModel& m = p.model;
  if (target != TargetClass::NcPathTree) {
    for (const auto& piece : m.pieces)
      if (piece.kind == PieceKind::JunctionStar) return detail::non_member(target, three_sun_at(m, piece));
  }
  if (target == TargetClass::ProperInterval) {
    for (int x = 0; x < m.tree.node_count(); ++x)
      if (m.degree(x) >= 3) return detail::non_member(target, net_at(m, x));
    p.shape = HostShape::Path;
  } else if (target == TargetClass::NcPathRTree) {
    p.shape = HostShape::RootedTree;
    for (int x = 0; x < m.tree.node_count() && p.root < 0; ++x)
      if (m.node_class[x] == NodeClass::Terminal) p.root = x;
  }
  return Certificate{target, Verdict::Member, std::move(p), std::nullopt};
}

/// Result of the claw search: either a claw, or the model that certifies its absence.
struct ClawSearch {
  std::optional<Witness> claw;
  std::vector<NcModel> models;  // one per connected component when claw-free
};

/// Claw detection on a chordal graph; throws NotChordalError with a hole otherwise.
inline ClawSearch find_claw_chordal(const Graph& g) {
  ClawSearch out;
  auto comps = connected_components(g);
  for (const auto& comp : comps) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    auto ch = chordality(sub.graph);
    if (auto* h = std::get_if<Hole>(&ch)) {
      Hole mapped;
      for (Vertex v : h->cycle) mapped.cycle.push_back(sub.to_original[v]);
      throw NotChordalError(std::move(mapped));
    }
    CliqueTree t = clique_tree(sub.graph, std::get<Peo>(ch));
    auto annotated = annotate(sub.graph, t);
    if (auto* r = std::get_if<CrossReport>(&annotated)) {
      Witness w = extract_claw(sub.graph, t, *r);
      for (Vertex& v : w.vertices) v = sub.to_original[v];
      w.center = w.vertices[0];
      out.claw = std::move(w);
      out.models.clear();
      return out;
    }
    out.models.push_back(std::move(std::get<NcModel>(annotated)));
  }
  return out;
}

/// Thrown by the optimization routines when the input lies outside the class; carries the
/// refuting witness.
class NotMemberError : public GraphError {
 public:
  NotMemberError(TargetClass c, Witness w)
      : GraphError("graph is not " + std::string(to_string(c)) + ": found " + std::string(to_string(w.kind))),
        target(c),
        witness(std::move(w)) {}
  TargetClass target;
  Witness witness;
};

/// The model of a connected NC-path-tree graph, or NotMemberError.
inline NcModel nc_model_of(const Graph& g) {
  Certificate c = recognize(g, TargetClass::NcPathTree);
  if (c.verdict == Verdict::NonMember) throw NotMemberError(c.target, *c.witness);
  return std::move(c.payload->model);
}

struct VerifyResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Witness kinds that refute membership in each class.
inline bool witness_refutes(WitnessKind k, TargetClass c) {
  switch (c) {
    case TargetClass::Chordal: return k == WitnessKind::Hole;
    case TargetClass::NcPathTree: return k == WitnessKind::Hole || k == WitnessKind::Claw;
    case TargetClass::NcPathRTree: return k != WitnessKind::Net;
    case TargetClass::ProperInterval: return true;
  }
  return false;
}

namespace detail {

inline VerifyResult fail(std::string why) { return VerifyResult{false, std::move(why)}; }

// Checks a model against g without trusting anything but the cliques and tree edges.
inline VerifyResult verify_model(const Graph& g, TargetClass target, const ModelPayload& p) {
  const CliqueTree& t = p.model.tree;
  const int n = g.n();
  const int nodes = t.node_count();
  if (nodes < 1) return fail("model has no nodes");
  if (static_cast<int>(t.edges.size()) != nodes - 1) return fail("host has the wrong number of edges");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(2 * t.edges.size());
  for (auto [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return fail("host edge out of range");
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  const auto tadj = Jagged<int>::from_pairs(nodes, arcs);
  const int root = target == TargetClass::NcPathRTree ? p.root : 0;
  if (root < 0 || root >= nodes) return fail("root is not a host node");
  std::vector<int> parent(nodes, -2), order{root};
  order.reserve(nodes);
  parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : tadj[order[i]])
      if (parent[y] == -2) {
        parent[y] = order[i];
        order.push_back(y);
      }
  if (static_cast<int>(order.size()) != nodes) return fail("host is not a tree");

  // occ[v] lists the nodes of v in ascending order; slot[v] is where its row starts.
  std::vector<std::size_t> slot(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 0; x < nodes; ++x) {
    auto c = t.cliques[x];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n) return fail("clique member out of range");
      if (i > 0 && c[i - 1] >= c[i]) return fail("clique not strictly sorted");
      ++slot[c[i] + 1];
    }
  }
  for (int v = 0; v < n; ++v) slot[v + 1] += slot[v];
  std::vector<int> occ_data(slot[n]);
  {
    std::vector<std::size_t> fill(slot.begin(), slot.end() - 1);
    for (int x = 0; x < nodes; ++x)
      for (Vertex v : t.cliques[x]) occ_data[fill[v]++] = x;
  }
  auto occ = [&](Vertex v) { return std::span<const int>(occ_data.data() + slot[v], slot[v + 1] - slot[v]); };
  for (Vertex v = 0; v < n; ++v)
    if (slot[v] == slot[v + 1]) return fail("vertex " + std::to_string(v) + " lies on no node");
  auto on = [&](Vertex v, int x) {
    auto o = occ(v);
    return std::binary_search(o.begin(), o.end(), x);
  };

  // Subtrees: exactly one occurrence per vertex whose parent is off the subtree.
  // children[slot[v] + i] counts the nodes of v whose parent is occ(v)[i].
  std::vector<int> top(n, -1);
  std::vector<int> children(slot[n], 0);
  for (Vertex v = 0; v < n; ++v) {
    auto o = occ(v);
    for (int x : o) {
      const int px = parent[x];
      auto it = px >= 0 ? std::lower_bound(o.begin(), o.end(), px) : o.end();
      if (it != o.end() && *it == px) {
        ++children[slot[v] + (it - o.begin())];
      } else {
        if (top[v] >= 0) return fail("nodes of vertex " + std::to_string(v) + " are not connected");
        top[v] = x;
      }
    }
  }
  // Every node is a clique: each vertex is adjacent to everything at its top node.
  std::vector<int> mark(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) mark[w] = v;
    for (Vertex w : t.cliques[top[v]])
      if (w != v && mark[w] != v)
        return fail("vertices " + std::to_string(v) + " and " + std::to_string(w) + " share a node but are not adjacent");
  }
  // Every edge is represented.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !on(v, top[u]) && !on(u, top[v]))
        return fail("edge " + std::to_string(u) + " " + std::to_string(v) + " is not represented");
  if (target == TargetClass::Chordal) return {};

  std::vector<std::pair<int, int>> ends(n, {-1, -1});
  std::vector<char> any_leaf(nodes, 0), any_inner(nodes, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto o = occ(v);
    for (std::size_t i = 0; i < o.size(); ++i) {
      const int x = o[i];
      const int d = children[slot[v] + i] + (x == top[v] ? 0 : 1);
      if (d > 2) return fail("nodes of vertex " + std::to_string(v) + " do not form a path");
      if (d <= 1) {
        any_leaf[x] = 1;
        (ends[v].first < 0 ? ends[v].first : ends[v].second) = x;
      } else {
        any_inner[x] = 1;
      }
    }
  }
  for (auto& e : ends)
    if (e.second < 0) e.second = e.first;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      const bool u_out = !on(v, ends[u].first) && !on(v, ends[u].second);
      const bool v_out = !on(u, ends[v].first) && !on(u, ends[v].second);
      if (u_out || v_out) return fail("paths of " + std::to_string(u) + " and " + std::to_string(v) + " cross");
    }
  const auto& cls = p.model.node_class;
  if (!cls.empty()) {
    if (static_cast<int>(cls.size()) != nodes) return fail("node classes do not match the host");
    for (int x = 0; x < nodes; ++x) {
      const NodeClass want = !any_inner[x] ? NodeClass::Terminal : (!any_leaf[x] ? NodeClass::Junction : NodeClass::Mixed);
      if (cls[x] != want) return fail("node " + std::to_string(x) + " is misclassified");
    }
  }
  if (target == TargetClass::ProperInterval)
    for (int x = 0; x < nodes; ++x)
      if (tadj.row_size(x) > 2) return fail("host is not a path");
  if (target == TargetClass::NcPathRTree)
    for (Vertex v = 0; v < n; ++v) {
      auto o = occ(v);
      auto it = std::lower_bound(o.begin(), o.end(), top[v]);
      if (children[slot[v] + (it - o.begin())] > 1)
        return fail("path of vertex " + std::to_string(v) + " is not directed towards the root");
    }
  return {};
}

}  // namespace detail

/// Checks a certificate against g and its target class, with a reason on failure.
inline VerifyResult verify_certificate(const Graph& g, const Certificate& c) {
  if (c.verdict == Verdict::Member) {
    if (!c.payload) return detail::fail("member certificate without a model");
    return detail::verify_model(g, c.target, *c.payload);
  }
  if (!c.witness) return detail::fail("non-member certificate without a witness");
  if (!witness_refutes(c.witness->kind, c.target))
    return detail::fail(std::string(to_string(c.witness->kind)) + " does not refute " + std::string(to_string(c.target)));
  if (!is_valid_witness(g, *c.witness)) return detail::fail("witness is not an induced " + std::string(to_string(c.witness->kind)));
  return {};
}

}  // namespace ncpath
