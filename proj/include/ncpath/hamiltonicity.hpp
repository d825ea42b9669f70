#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ncpath/blocks.hpp"
#include "ncpath/nc_model.hpp"
#include "ncpath/recognition.hpp"

namespace ncpath {

enum class TraceEdgeKind { ChainPath, JunctionHop, SelfLoop };

inline std::string_view to_string(TraceEdgeKind k) {
  switch (k) {
    case TraceEdgeKind::ChainPath: return "terminal-pair-path";
    case TraceEdgeKind::JunctionHop: return "junction-hop";
    case TraceEdgeKind::SelfLoop: return "self-loop";
  }
  return "?";
}

struct TraceEdge {
  int a = -1, b = -1;            // host nodes; a == b for self-loops
  TraceEdgeKind kind = TraceEdgeKind::ChainPath;
  std::vector<Vertex> payload;   // path in g from a vertex on node a to a vertex on node b
};

/// Eulerian multigraph over the terminal nodes whose tours spell Hamiltonian cycles.
struct TraceMultigraph {
  std::vector<int> nodes;  // terminal nodes, ascending
  std::vector<TraceEdge> edges;
};

enum class SpanKind { HamCycle, HamPath, SpanningTree };

inline std::string_view to_string(SpanKind k) {
  switch (k) {
    case SpanKind::HamCycle: return "hamcycle";
    case SpanKind::HamPath: return "hampath";
    case SpanKind::SpanningTree: return "spanning-tree";
  }
  return "?";
}

struct SpanResult {
  SpanKind kind = SpanKind::HamCycle;
  std::vector<Vertex> sequence;  // cycle or path
  std::vector<Edge> edges;       // spanning tree
  int leaf_count = 0;
};

struct NotBiconnected {
  Vertex cut_vertex = -1;  // -1 when the obstruction is n < 3
  int n = 0;
};

struct TooManyLeaves {
  int leaves = 0;
};

using CycleOutcome = std::variant<SpanResult, NotBiconnected>;
using PathOutcome = std::variant<SpanResult, TooManyLeaves>;

namespace detail {

inline void add_chain_double(TraceMultigraph& t, const NcModel& m, int p) {
  const auto& z = m.pieces[p].nodes;
  auto tp = two_paths(m.aux[p]);
  t.edges.push_back({z.front(), z.back(), TraceEdgeKind::ChainPath, std::move(tp.first)});
  t.edges.push_back({z.front(), z.back(), TraceEdgeKind::ChainPath, std::move(tp.second)});
}

inline void add_junction_triangle(TraceMultigraph& t, const NcModel& m, int p) {
  const auto& y = m.pieces[p].nodes;
  auto cls = junction_classes(m, m.pieces[p]);
  for (int c = 0; c < 3; ++c)
    t.edges.push_back({y[c + 1], y[(c + 1) % 3 + 1], TraceEdgeKind::JunctionHop, std::move(cls[c])});
}

// Hierholzer over a multigraph given by endpoint pairs; returns (edge, forward) along the tour.
inline std::vector<std::pair<int, bool>> euler_tour(int nodes, const std::vector<TraceEdge>& edges, int start) {
  std::vector<std::vector<int>> inc(nodes);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    inc[edges[e].a].push_back(e);
    if (edges[e].b != edges[e].a) inc[edges[e].b].push_back(e);
  }
  std::vector<std::size_t> next(nodes, 0);
  std::vector<char> used(edges.size(), 0);
  struct Step {
    int node, edge;
    bool forward;
  };
  std::vector<Step> stack{{start, -1, true}};
  std::vector<std::pair<int, bool>> tour;
  while (!stack.empty()) {
    const int v = stack.back().node;
    while (next[v] < inc[v].size() && used[inc[v][next[v]]]) ++next[v];
    if (next[v] == inc[v].size()) {
      if (stack.back().edge >= 0) tour.emplace_back(stack.back().edge, stack.back().forward);
      stack.pop_back();
      continue;
    }
    const int e = inc[v][next[v]];
    used[e] = 1;
    const bool forward = edges[e].a == v;
    stack.push_back({forward ? edges[e].b : edges[e].a, e, forward});
  }
  if (tour.size() != edges.size()) throw std::logic_error("trace multigraph is disconnected");
  std::reverse(tour.begin(), tour.end());
  return tour;
}

inline void append_tour(std::vector<Vertex>& out, const std::vector<TraceEdge>& edges,
                        const std::vector<std::pair<int, bool>>& tour) {
  for (auto [e, forward] : tour) {
    const auto& p = edges[e].payload;
    if (forward)
      out.insert(out.end(), p.begin(), p.end());
    else
      out.insert(out.end(), p.rbegin(), p.rend());
  }
}

inline bool is_complete(const Graph& g) {
  return 2 * g.m() == static_cast<std::int64_t>(g.n()) * (g.n() - 1);
}

inline std::vector<Vertex> cycle_in_block(const Graph& g, const NcModel& m);

// Hamiltonian path of a 2-connected member from s to t; both must be private to terminals.
inline std::vector<Vertex> route(const Graph& g, const NcModel& m, Vertex s, Vertex t) {
  if (is_complete(g)) {
    std::vector<Vertex> out{s};
    for (Vertex v = 0; v < g.n(); ++v)
      if (v != s && v != t) out.push_back(v);
    out.push_back(t);
    return out;
  }
  const auto& tree = m.tree;
  auto terminal_of = [&](Vertex v) {
    const int x = m.path_ends[v].first;
    if (x != m.path_ends[v].second || m.node_class[x] != NodeClass::Terminal)
      throw std::logic_error("route end is not private to a terminal node");
    return x;
  };
  const int xs = terminal_of(s), xt = terminal_of(t);
  // Host path from xs to xt.
  const int nodes = tree.node_count();
  std::vector<int> parent_edge(nodes, -2), queue{xs};
  parent_edge[xs] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto arc : tree.adj[queue[i]])
      if (parent_edge[arc.to] == -2) {
        parent_edge[arc.to] = arc.edge;
        queue.push_back(arc.to);
      }
  std::vector<char> on_path(m.pieces.size(), 0);
  std::vector<int> entry(m.pieces.size(), -1), exit(m.pieces.size(), -1);
  for (int x = xt; x != xs;) {
    const int e = parent_edge[x];
    const int y = tree.edges[e].first == x ? tree.edges[e].second : tree.edges[e].first;
    const int p = m.edge_piece[e].piece;
    on_path[p] = 1;
    if (m.node_class[x] == NodeClass::Terminal) exit[p] = x;
    if (m.node_class[y] == NodeClass::Terminal) entry[p] = y;
    x = y;
  }
  TraceMultigraph trace;
  for (int p = 0; p < static_cast<int>(m.pieces.size()); ++p) {
    const auto& pc = m.pieces[p];
    if (!on_path[p]) {
      if (pc.kind == PieceKind::TerminalPath)
        add_chain_double(trace, m, p);
      else
        add_junction_triangle(trace, m, p);
      continue;
    }
    if (pc.kind == PieceKind::TerminalPath) {
      auto hp = aux_hamiltonian_path(m.aux[p]);
      if (pc.nodes.front() != entry[p]) std::reverse(hp.begin(), hp.end());
      trace.edges.push_back({entry[p], exit[p], TraceEdgeKind::ChainPath, std::move(hp)});
      continue;
    }
    auto cls = junction_classes(m, pc);
    auto index = [&](int y) { return static_cast<int>(std::find(pc.nodes.begin() + 1, pc.nodes.end(), y) - pc.nodes.begin()) - 1; };
    const int a = index(entry[p]), b = index(exit[p]), c = 3 - a - b;
    // Class joining neighbor indices i and j.
    auto joining = [&](int i, int j) -> const std::vector<Vertex>& {
      for (int k = 0; k < 3; ++k)
        if ((k == i && (k + 1) % 3 == j) || (k == j && (k + 1) % 3 == i)) return cls[k];
      throw std::logic_error("bad junction indices");
    };
    std::vector<Vertex> first = joining(a, b);
    const auto& side = joining(a, c);
    first.insert(first.end(), side.begin(), side.end());
    trace.edges.push_back({entry[p], pc.nodes[c + 1], TraceEdgeKind::JunctionHop, std::move(first)});
    trace.edges.push_back({pc.nodes[c + 1], exit[p], TraceEdgeKind::JunctionHop, joining(c, b)});
  }
  for (int x = 0; x < nodes; ++x) {
    if (m.node_class[x] != NodeClass::Terminal || x == xs || x == xt) continue;
    auto priv = private_vertices(m, x);
    if (!priv.empty()) trace.edges.push_back({x, x, TraceEdgeKind::SelfLoop, std::move(priv)});
  }
  std::vector<Vertex> out{s};
  for (Vertex v : private_vertices(m, xs))
    if (v != s && v != t) out.push_back(v);
  append_tour(out, trace.edges, euler_tour(nodes, trace.edges, xs));
  if (xt != xs)
    for (Vertex v : private_vertices(m, xt))
      if (v != s && v != t) out.push_back(v);
  out.push_back(t);
  return out;
}

inline void check_sequence(const Graph& g, const std::vector<Vertex>& seq, bool cyclic) {
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : seq) {
    if (v < 0 || v >= g.n() || seen[v]) throw std::logic_error("sequence repeats or leaves the graph");
    seen[v] = 1;
  }
  if (static_cast<int>(seq.size()) != g.n()) throw std::logic_error("sequence is not spanning");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[i + 1])) throw std::logic_error("sequence uses a non-edge");
  if (cyclic && seq.size() >= 3 && !g.adjacent(seq.back(), seq.front()))
    throw std::logic_error("cycle does not close");
}

}  // namespace detail

/// Builds the trace multigraph of a 2-connected member with at least one piece.
inline TraceMultigraph build_trace(const Graph& g, const NcModel& m) {
  if (g.n() < 3) throw GraphError("trace multigraph needs at least three vertices");
  if (!is_biconnected(g)) throw GraphError("trace multigraph needs a 2-connected graph");
  TraceMultigraph t;
  for (int x = 0; x < m.tree.node_count(); ++x)
    if (m.node_class[x] == NodeClass::Terminal) t.nodes.push_back(x);
  for (int p = 0; p < static_cast<int>(m.pieces.size()); ++p) {
    if (m.pieces[p].kind == PieceKind::TerminalPath)
      detail::add_chain_double(t, m, p);
    else
      detail::add_junction_triangle(t, m, p);
  }
  for (int x : t.nodes) {
    auto priv = private_vertices(m, x);
    if (!priv.empty()) t.edges.push_back({x, x, TraceEdgeKind::SelfLoop, std::move(priv)});
  }
  return t;
}

namespace detail {

inline std::vector<Vertex> cycle_in_block(const Graph& g, const NcModel& m) {
  std::vector<Vertex> out;
  if (m.pieces.empty()) {
    for (Vertex v = 0; v < g.n(); ++v) out.push_back(v);
    return out;
  }
  TraceMultigraph t = build_trace(g, m);
  append_tour(out, t.edges, euler_tour(m.tree.node_count(), t.edges, t.nodes.front()));
  auto low = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), low, out.end());
  return out;
}

inline Vertex first_cut_vertex(const Graph& g) {
  auto bc = block_cut_tree(g);
  return bc.cut_vertices.empty() ? -1 : bc.cut_vertices.front();
}

// Hamiltonian path of block b, starting at `from` (or anywhere if -1) and ending at `to` (or anywhere if -1).
inline std::vector<Vertex> block_path(const Graph& g, const std::vector<Vertex>& block, Vertex from, Vertex to) {
  if (block.size() == 1) return block;
  if (block.size() == 2) {
    std::vector<Vertex> p = block;
    if ((from >= 0 && p[0] != from) || (to >= 0 && p[1] != to)) std::swap(p[0], p[1]);
    return p;
  }
  auto sub = induced_subgraph(g, block);
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(sub.to_original.begin(), sub.to_original.end(), v) - sub.to_original.begin());
  };
  NcModel m = nc_model_of(sub.graph);
  std::vector<Vertex> seq;
  if (from >= 0 && to >= 0) {
    seq = route(sub.graph, m, local(from), local(to));
  } else {
    seq = cycle_in_block(sub.graph, m);
    const Vertex end = to >= 0 ? local(to) : (from >= 0 ? local(from) : -1);
    if (end >= 0) {
      // Rotate so that `end` closes the sequence, then reverse for a start.
      auto it = std::find(seq.begin(), seq.end(), end);
      std::rotate(seq.begin(), std::next(it), seq.end());
      if (from >= 0) std::reverse(seq.begin(), seq.end());
    }
  }
  for (Vertex& v : seq) v = sub.to_original[v];
  return seq;
}

// Blocks along a path-shaped block-cut tree, with the cut vertex between consecutive ones.
inline std::pair<std::vector<int>, std::vector<Vertex>> block_chain(const BlockCutTree& bc) {
  const int blocks = static_cast<int>(bc.blocks.size());
  std::vector<int> order, seen(blocks, 0);
  std::vector<Vertex> joints;
  int b = 0;
  while (b < blocks && bc.block_cuts[b].size() > 1) ++b;
  Vertex came = -1;
  while (true) {
    order.push_back(b);
    seen[b] = 1;
    int next = -1;
    Vertex via = -1;
    for (Vertex c : bc.block_cuts[b]) {
      if (c == came) continue;
      auto lo = std::lower_bound(bc.tree_edges.begin(), bc.tree_edges.end(), std::make_pair(c, -1));
      for (auto it = lo; it != bc.tree_edges.end() && it->first == c; ++it)
        if (!seen[it->second]) {
          next = it->second;
          via = c;
        }
    }
    if (next < 0) break;
    joints.push_back(via);
    came = via;
    b = next;
  }
  return {order, joints};
}

}  // namespace detail

/// Hamiltonian cycle, or the reason none exists (a cut vertex, or fewer than three vertices).
inline CycleOutcome hamiltonian_cycle(const Graph& g, const NcModel& m) {
  if (g.n() < 3) return NotBiconnected{-1, g.n()};
  if (Vertex c = detail::first_cut_vertex(g); c >= 0) return NotBiconnected{c, g.n()};
  SpanResult r{SpanKind::HamCycle, detail::cycle_in_block(g, m), {}, 0};
  detail::check_sequence(g, r.sequence, true);
  return r;
}

inline CycleOutcome hamiltonian_cycle(const Graph& g) { return hamiltonian_cycle(g, nc_model_of(g)); }

/// Hamiltonian path, or the number of leaves of the block-cut tree when it is not a path.
inline PathOutcome hamiltonian_path(const Graph& g) {
  nc_model_of(g);
  auto bc = block_cut_tree(g);
  if (!bc.is_path()) return TooManyLeaves{bc.leaf_count};
  SpanResult r{SpanKind::HamPath, {}, {}, g.n() >= 2 ? 2 : 0};
  auto [order, joints] = detail::block_chain(bc);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex from = i == 0 ? -1 : joints[i - 1];
    const Vertex to = i + 1 == order.size() ? -1 : joints[i];
    auto seg = detail::block_path(g, bc.blocks[order[i]], from, to);
    r.sequence.insert(r.sequence.end(), seg.begin() + (i == 0 ? 0 : 1), seg.end());
  }
  detail::check_sequence(g, r.sequence, false);
  return r;
}

/// Spanning tree whose leaves are exactly one per leaf block, the fewest possible.
inline SpanResult min_leaf_spanning_tree(const Graph& g) {
  nc_model_of(g);
  SpanResult r{SpanKind::SpanningTree, {}, {}, 0};
  if (g.n() == 1) return r;
  auto bc = block_cut_tree(g);
  for (std::size_t b = 0; b < bc.blocks.size(); ++b) {
    const auto& cuts = bc.block_cuts[b];
    const Vertex from = cuts.empty() ? -1 : cuts[0];
    const Vertex to = cuts.size() >= 2 ? cuts[1] : -1;
    auto seg = detail::block_path(g, bc.blocks[b], from, to);
    for (std::size_t i = 0; i + 1 < seg.size(); ++i)
      r.edges.emplace_back(std::min(seg[i], seg[i + 1]), std::max(seg[i], seg[i + 1]));
  }
  std::sort(r.edges.begin(), r.edges.end());
  std::vector<int> deg(g.n(), 0);
  for (auto [u, v] : r.edges) {
    ++deg[u];
    ++deg[v];
  }
  r.leaf_count = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  return r;
}

}  // namespace ncpath
