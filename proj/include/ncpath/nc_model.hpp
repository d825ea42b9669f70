#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "ncpath/chordal.hpp"

namespace ncpath {

enum class NodeClass : std::uint8_t { Terminal, Mixed, Junction };

inline std::string_view to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Terminal: return "terminal";
    case NodeClass::Mixed: return "mixed";
    case NodeClass::Junction: return "junction";
  }
  return "?";
}

enum class PieceKind : std::uint8_t { JunctionStar, TerminalPath };

/// Star: the junction followed by its three neighbors in ascending order.
/// Path: z_1..z_k with terminal ends and mixed interior, z_1 < z_k.
struct ModelPiece {
  PieceKind kind = PieceKind::TerminalPath;
  std::vector<int> nodes;
  friend bool operator==(const ModelPiece&, const ModelPiece&) = default;
};

/// Interval graph standing in for one terminal-to-terminal path. Index 0 is the sentinel u_1,
/// the last index is u_k, the rest are original vertices in ascending id order.
struct AuxGraph {
  Graph graph;
  std::vector<Vertex> vertex_map;  // -1 at the sentinels
  std::vector<int> l, r;           // clique positions 0..k-1 along the path
  std::vector<int> order;          // sorted by (l, r, index): an umbrella order when proper
  int k = 0;
  Vertex stand_in_first = -1;      // lowest id in G_{z_1} \ G_{z_2}
  Vertex stand_in_last = -1;       // lowest id in G_{z_k} \ G_{z_{k-1}}

  int u1() const { return 0; }
  int uk() const { return graph.n() - 1; }
  // Original vertex for an aux vertex, sentinels replaced by their stand-ins.
  Vertex original(int a) const {
    if (a == u1()) return stand_in_first;
    if (a == uk()) return stand_in_last;
    return vertex_map[a];
  }
};

struct EdgeSlot {
  int piece = -1;
  int position = -1;  // index of the edge inside its piece
};

struct NcModel {
  CliqueTree tree;
  Jagged<char> leaf;  // leaf[x][i] == 1 iff node x is an end of the path of tree.cliques[x][i]
  std::vector<NodeClass> node_class;
  std::vector<std::pair<int, int>> path_ends;  // per vertex, first <= second
  std::vector<ModelPiece> pieces;
  std::vector<AuxGraph> aux;  // aligned with pieces, empty for stars
  std::vector<EdgeSlot> edge_piece;

  int degree(int x) const { return static_cast<int>(tree.adj.row_size(x)); }
  bool in_path(Vertex v, int x) const {
    auto o = tree.occ[v];
    return std::binary_search(o.begin(), o.end(), x);
  }
};

// Violations reported by annotate. The crossing pairs satisfy: outer ~ inner and neither end of
// the path of outer lies on the path of inner.
struct CrossingPair {
  Vertex outer = -1;
  Vertex inner = -1;
};

struct NonPathVertex {
  Vertex v = -1;
  int node = -1;
  std::array<int, 3> branches{};  // three neighbors of node on the subtree of v
};

struct MixedHighDegree {
  int node = -1;
  CrossingPair pair;
};

struct JunctionViolation {
  int node = -1;
  int neighbor = -1;  // the non-terminal neighbor, or -1 when the junction has degree >= 4
  CrossingPair pair;
};

struct ProperIntervalFailure {
  int piece = -1;
  std::array<int, 4> aux_claw{};   // center, nested vertex, left and right blockers
  std::array<Vertex, 4> claw{};    // the same four mapped to original vertices
};

using CrossReport = std::variant<NonPathVertex, MixedHighDegree, JunctionViolation, ProperIntervalFailure>;

namespace detail {

inline bool sorted_contains(std::span<const int> s, int x) { return std::binary_search(s.begin(), s.end(), x); }

inline std::optional<CrossingPair> find_crossing(const Graph& g, const CliqueTree& t,
                                                 const std::vector<std::pair<int, int>>& ends,
                                                 std::vector<Vertex> cand) {
  std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
    return std::tie(ends[a], a) < std::tie(ends[b], b);
  });
  cand.erase(std::unique(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return ends[a] == ends[b]; }),
             cand.end());
  for (Vertex a : cand)
    for (Vertex b : cand) {
      if (a == b || !g.adjacent(a, b)) continue;
      auto ob = t.occ[b];
      if (!sorted_contains(ob, ends[a].first) && !sorted_contains(ob, ends[a].second))
        return CrossingPair{a, b};
    }
  return std::nullopt;
}

// Crossing pair among the vertices on x and its neighbors, else anywhere.
inline CrossingPair crossing_near(const Graph& g, const CliqueTree& t,
                                  const std::vector<std::pair<int, int>>& ends, int x) {
  std::vector<Vertex> cand(t.cliques[x].begin(), t.cliques[x].end());
  for (auto arc : t.adj[x]) cand.insert(cand.end(), t.cliques[arc.to].begin(), t.cliques[arc.to].end());
  if (auto p = find_crossing(g, t, ends, std::move(cand))) return *p;
  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  if (auto p = find_crossing(g, t, ends, std::move(all))) return *p;
  throw std::logic_error("structural violation without a crossing pair");
}

inline Vertex lowest_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (Vertex v : a)
    if (!std::binary_search(b.begin(), b.end(), v)) return v;
  throw std::logic_error("clique contained in a neighboring clique");
}

}  // namespace detail

/// Builds the auxiliary interval graph of a terminal-to-terminal path piece.
inline AuxGraph build_aux_graph(const Graph& g, const NcModel& m, const ModelPiece& p) {
  const auto& t = m.tree;
  const auto& z = p.nodes;
  const int k = static_cast<int>(z.size());
  if (p.kind != PieceKind::TerminalPath || k < 2) throw std::invalid_argument("aux graph needs a path piece");
  std::vector<Vertex> inner;
  if (k == 2) {
    int edge = -1;
    for (auto arc : t.adj[z[0]])
      if (arc.to == z[1]) edge = arc.edge;
    inner.assign(t.separators[edge].begin(), t.separators[edge].end());
  } else {
    for (int i = 1; i + 1 < k; ++i) inner.insert(inner.end(), t.cliques[z[i]].begin(), t.cliques[z[i]].end());
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  }
  std::vector<std::pair<int, int>> node_pos(k);
  for (int i = 0; i < k; ++i) node_pos[i] = {z[i], i};
  std::sort(node_pos.begin(), node_pos.end());
  auto pos = [&](int x) {
    auto it = std::lower_bound(node_pos.begin(), node_pos.end(), std::make_pair(x, -1));
    return (it != node_pos.end() && it->first == x) ? it->second : -1;
  };
  const int count = static_cast<int>(inner.size()) + 2;
  AuxGraph a;
  a.k = k;
  a.vertex_map.assign(count, -1);
  a.l.assign(count, 0);
  a.r.assign(count, 0);
  a.l[count - 1] = a.r[count - 1] = k - 1;
  for (int i = 0; i < static_cast<int>(inner.size()); ++i) {
    const Vertex v = inner[i];
    a.vertex_map[i + 1] = v;
    int p1 = pos(m.path_ends[v].first), p2 = pos(m.path_ends[v].second);
    if (p1 < 0 || p2 < 0) throw std::logic_error("vertex path leaves its piece");
    if (p1 > p2) std::swap(p1, p2);
    a.l[i + 1] = p1;
    a.r[i + 1] = p2;
  }
  std::vector<Edge> edges;
  auto local = [&](Vertex v) {
    auto it = std::lower_bound(inner.begin(), inner.end(), v);
    return (it != inner.end() && *it == v) ? static_cast<int>(it - inner.begin()) + 1 : -1;
  };
  for (int i = 1; i + 1 < count; ++i) {
    for (Vertex w : g.neighbors(a.vertex_map[i]))
      if (w > a.vertex_map[i])
        if (int j = local(w); j > 0) edges.emplace_back(i, j);
    if (a.l[i] == 0) edges.emplace_back(0, i);
    if (a.r[i] == k - 1) edges.emplace_back(i, count - 1);
  }
  a.graph = Graph::from_edges(count, edges);
  a.stand_in_first = detail::lowest_difference(t.cliques[z[0]], t.cliques[z[1]]);
  a.stand_in_last = detail::lowest_difference(t.cliques[z[k - 1]], t.cliques[z[k - 2]]);
  a.order.resize(count);
  for (int i = 0; i < count; ++i) a.order[i] = i;
  std::sort(a.order.begin(), a.order.end(),
            [&](int x, int y) { return std::tie(a.l[x], a.r[x], x) < std::tie(a.l[y], a.r[y], y); });
  return a;
}

/// A pair of aux vertices whose intervals nest strictly at both ends, if any.
inline std::optional<std::pair<int, int>> strict_nesting(const AuxGraph& a) {
  int best = -1;
  const int count = a.graph.n();
  for (int i = 0; i < count;) {
    int j = i;
    while (j < count && a.l[a.order[j]] == a.l[a.order[i]]) ++j;
    if (best >= 0)
      for (int q = i; q < j; ++q)
        if (a.r[a.order[q]] < a.r[best]) return std::make_pair(best, a.order[q]);
    for (int q = i; q < j; ++q)
      if (best < 0 || a.r[a.order[q]] > a.r[best]) best = a.order[q];
    i = j;
  }
  return std::nullopt;
}

/// Claw (center, nested, left, right) in the aux graph built from a strict nesting.
inline std::array<int, 4> nesting_claw(const AuxGraph& a, int outer, int inner) {
  int left = -1, right = -1;
  for (int v = 0; v < a.graph.n(); ++v) {
    if (left < 0 && a.r[v] == a.l[outer]) left = v;
    if (right < 0 && a.l[v] == a.r[outer]) right = v;
  }
  if (left < 0 || right < 0) throw std::logic_error("clique path is not maximal");
  return {outer, inner, left, right};
}

/// Sequence of the non-sentinel aux vertices (original ids) along the umbrella order; a
/// Hamiltonian path of the interior when the aux graph is connected and proper.
inline std::vector<Vertex> aux_hamiltonian_path(const AuxGraph& a) {
  std::vector<Vertex> out;
  out.reserve(a.order.size());
  for (int v : a.order)
    if (v != a.u1() && v != a.uk()) out.push_back(a.vertex_map[v]);
  return out;
}

struct TwoPaths {
  std::vector<Vertex> first;   // interiors of two internally disjoint u_1-u_k paths that
  std::vector<Vertex> second;  // together cover every non-sentinel vertex
};

/// Splits the umbrella order into even and odd positions. Needs v_i ~ v_{i+2} throughout,
/// which holds exactly when the aux graph is 2-connected.
inline TwoPaths two_paths(const AuxGraph& a) {
  const auto& o = a.order;
  const int count = static_cast<int>(o.size());
  for (int i = 0; i + 2 < count; ++i)
    if (!a.graph.adjacent(o[i], o[i + 2])) throw GraphError("aux graph is not 2-connected");
  TwoPaths tp;
  for (int i = 1; i + 1 < count; ++i) (i % 2 == 1 ? tp.first : tp.second).push_back(a.vertex_map[o[i]]);
  return tp;
}

/// Classes of a junction star by the pair of neighbors they reach: (y1,y2), (y2,y3), (y3,y1).
inline std::array<std::vector<Vertex>, 3> junction_classes(const NcModel& m, const ModelPiece& star) {
  std::array<std::vector<Vertex>, 3> cls;
  const int x = star.nodes[0];
  for (Vertex v : m.tree.cliques[x]) {
    const bool h1 = m.in_path(v, star.nodes[1]), h2 = m.in_path(v, star.nodes[2]);
    cls[h1 && h2 ? 0 : (h2 ? 1 : 2)].push_back(v);
  }
  return cls;
}

/// Vertices whose whole path is the single node x.
inline std::vector<Vertex> private_vertices(const NcModel& m, int x) {
  std::vector<Vertex> out;
  for (Vertex v : m.tree.cliques[x])
    if (m.path_ends[v].first == x && m.path_ends[v].second == x) out.push_back(v);
  return out;
}

/// Annotates a clique tree and splits it into pieces, or localizes why it is no NC model.
inline std::variant<NcModel, CrossReport> annotate(const Graph& g, CliqueTree t) {
  const int nodes = t.node_count();
  std::vector<std::size_t> base(nodes + 1, 0);
  for (int x = 0; x < nodes; ++x) base[x + 1] = base[x] + t.cliques.row_size(x);
  auto slot = [&](int x, Vertex v) {
    auto row = t.cliques[x];
    return base[x] + static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), v) - row.begin());
  };
  std::vector<int> deg(base[nodes], 0);
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    for (Vertex v : t.separators[e]) {
      ++deg[slot(t.edges[e].first, v)];
      ++deg[slot(t.edges[e].second, v)];
    }
  for (int x = 0; x < nodes; ++x)
    for (std::size_t i = 0; i < t.cliques.row_size(x); ++i) {
      if (deg[base[x] + i] < 3) continue;
      NonPathVertex np{t.cliques[x][i], x, {}};
      int found = 0;
      for (auto arc : t.adj[x]) {
        auto sep = t.separators[arc.edge];
        if (found < 3 && std::binary_search(sep.begin(), sep.end(), np.v)) np.branches[found++] = arc.to;
      }
      return CrossReport{np};
    }

  NcModel m;
  m.path_ends.assign(g.n(), {-1, -1});
  m.node_class.resize(nodes);
  m.leaf.reserve(nodes, base[nodes]);
  for (int x = 0; x < nodes; ++x) {
    bool any_leaf = false, any_inner = false;
    for (std::size_t i = 0; i < t.cliques.row_size(x); ++i) {
      const bool leaf = deg[base[x] + i] <= 1;
      m.leaf.push_back(leaf ? 1 : 0);
      (leaf ? any_leaf : any_inner) = true;
      if (leaf) {
        auto& e = m.path_ends[t.cliques[x][i]];
        (e.first < 0 ? e.first : e.second) = x;
      }
    }
    m.leaf.close_row();
    m.node_class[x] = !any_inner ? NodeClass::Terminal : (!any_leaf ? NodeClass::Junction : NodeClass::Mixed);
  }
  for (auto& e : m.path_ends)
    if (e.second < 0) e.second = e.first;

  for (int x = 0; x < nodes; ++x) {
    const int d = static_cast<int>(t.adj.row_size(x));
    if (m.node_class[x] == NodeClass::Mixed && d >= 3)
      return CrossReport{MixedHighDegree{x, detail::crossing_near(g, t, m.path_ends, x)}};
    if (m.node_class[x] != NodeClass::Junction) continue;
    if (d < 3) throw std::logic_error("junction of degree below three");
    if (d >= 4) return CrossReport{JunctionViolation{x, -1, detail::crossing_near(g, t, m.path_ends, x)}};
    for (auto arc : t.adj[x])
      if (m.node_class[arc.to] != NodeClass::Terminal)
        return CrossReport{JunctionViolation{x, arc.to, detail::crossing_near(g, t, m.path_ends, x)}};
  }

  m.edge_piece.assign(t.edges.size(), EdgeSlot{});
  for (int x = 0; x < nodes; ++x) {
    if (m.node_class[x] != NodeClass::Junction) continue;
    ModelPiece star{PieceKind::JunctionStar, {x}};
    for (auto arc : t.adj[x]) star.nodes.push_back(arc.to);
    std::sort(star.nodes.begin() + 1, star.nodes.end());
    const int id = static_cast<int>(m.pieces.size());
    for (auto arc : t.adj[x])
      m.edge_piece[arc.edge] = {id, static_cast<int>(std::find(star.nodes.begin() + 1, star.nodes.end(), arc.to) -
                                                     star.nodes.begin()) - 1};
    m.pieces.push_back(std::move(star));
  }
  for (int x = 0; x < nodes; ++x) {
    if (m.node_class[x] != NodeClass::Terminal) continue;
    for (auto start : t.adj[x]) {
      if (m.edge_piece[start.edge].piece >= 0) continue;
      const int id = static_cast<int>(m.pieces.size());
      ModelPiece path{PieceKind::TerminalPath, {x}};
      TreeArc arc = start;
      for (int position = 0;; ++position) {
        m.edge_piece[arc.edge] = {id, position};
        path.nodes.push_back(arc.to);
        if (m.node_class[arc.to] == NodeClass::Terminal) break;
        const int came = arc.edge;
        for (auto next : t.adj[arc.to])
          if (next.edge != came) {
            arc = next;
            break;
          }
      }
      m.pieces.push_back(std::move(path));
    }
  }
  m.tree = std::move(t);

  m.aux.resize(m.pieces.size());
  for (std::size_t p = 0; p < m.pieces.size(); ++p) {
    if (m.pieces[p].kind != PieceKind::TerminalPath) continue;
    m.aux[p] = build_aux_graph(g, m, m.pieces[p]);
    if (auto nest = strict_nesting(m.aux[p])) {
      ProperIntervalFailure f;
      f.piece = static_cast<int>(p);
      f.aux_claw = nesting_claw(m.aux[p], nest->first, nest->second);
      for (int i = 0; i < 4; ++i) f.claw[i] = m.aux[p].original(f.aux_claw[i]);
      return CrossReport{f};
    }
  }
  return m;
}

/// Edge partition of the host tree computed by annotate.
inline const std::vector<ModelPiece>& partition_edges(const NcModel& m) { return m.pieces; }

}  // namespace ncpath
