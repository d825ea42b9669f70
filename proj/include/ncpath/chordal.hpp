#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ncpath/graph.hpp"
#include "ncpath/jagged.hpp"
#include "ncpath/lexbfs.hpp"

namespace ncpath {

struct Peo {
  std::vector<Vertex> order;  // elimination order: each vertex's later neighbors form a clique
};

struct Hole {
  std::vector<Vertex> cycle;  // induced cycle of length at least four
};

/// A violated elimination step: v's later neighbors p and w are not adjacent, p being v's parent.
struct PeoViolation {
  Vertex v, p, w;
};

/// Linear-time elimination-order check via parent requests.
inline std::optional<PeoViolation> check_peo(const Graph& g, std::span<const Vertex> order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw GraphError("elimination order has wrong length");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n || pos[v] != -1) throw GraphError("elimination order is not a permutation");
    pos[v] = i;
  }
  struct Request { Vertex w, v; };
  std::vector<std::pair<Vertex, Request>> requests;
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (p == -1 || pos[w] < pos[p])) p = w;
    if (p == -1) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && w != p) requests.push_back({p, {w, v}});
  }
  auto by_parent = Jagged<Request>::from_pairs(n, requests);
  std::vector<int> mark(n, -1);
  for (Vertex p = 0; p < n; ++p) {
    if (by_parent.row_size(p) == 0) continue;
    for (Vertex w : g.neighbors(p)) mark[w] = p;
    for (const Request& r : by_parent[p])
      if (mark[r.w] != p) return PeoViolation{r.v, p, r.w};
  }
  return std::nullopt;
}

inline bool is_peo(const Graph& g, std::span<const Vertex> order) {
  return !check_peo(g, order).has_value();
}

namespace detail {

// Shortest p-w path avoiding N[v] except p and w; together with v it closes an induced cycle.
inline std::optional<Hole> hole_through(const Graph& g, Vertex v, Vertex p, Vertex w) {
  const int n = g.n();
  std::vector<char> blocked(n, 0);
  blocked[v] = 1;
  for (Vertex x : g.neighbors(v)) blocked[x] = 1;
  blocked[p] = blocked[w] = 0;
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue{p};
  parent[p] = p;
  for (std::size_t h = 0; h < queue.size() && parent[w] == -1; ++h) {
    Vertex x = queue[h];
    for (Vertex y : g.neighbors(x)) {
      if (blocked[y] || parent[y] != -1) continue;
      if (x == p && y == w) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[w] == -1) return std::nullopt;
  Hole hole;
  hole.cycle.push_back(v);
  std::vector<Vertex> path;
  for (Vertex x = w; x != p; x = parent[x]) path.push_back(x);
  path.push_back(p);
  std::reverse(path.begin(), path.end());
  hole.cycle.insert(hole.cycle.end(), path.begin(), path.end());
  return hole;
}

}  // namespace detail

/// Certifying chordality test: Lex-BFS elimination order, or an induced cycle of length >= 4.
inline std::variant<Peo, Hole> chordality(const Graph& g) {
  auto visit = lex_bfs(g);
  Peo peo{std::vector<Vertex>(visit.rbegin(), visit.rend())};
  auto bad = check_peo(g, peo.order);
  if (!bad) return peo;
  auto hole = detail::hole_through(g, bad->v, bad->p, bad->w);
  if (!hole) throw std::logic_error("hole extraction failed for a Lex-BFS violation");
  return *hole;
}

inline bool is_chordal(const Graph& g) { return std::holds_alternative<Peo>(chordality(g)); }

/// True when `cycle` is an induced cycle of length >= 4 in g.
inline bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : sorted)
    if (v < 0 || v >= g.n()) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

struct TreeArc {
  int to;
  int edge;
};

/// Clique tree: nodes are maximal cliques, each vertex occupies a subtree of nodes.
struct CliqueTree {
  Jagged<Vertex> cliques;                 // sorted members per node
  std::vector<std::pair<int, int>> edges; // (a, b) with a < b
  Jagged<Vertex> separators;              // sorted cliques[a] ∩ cliques[b] per edge
  Jagged<TreeArc> adj;                    // arcs per node in edge order
  Jagged<int> occ;                        // ascending node ids per vertex
  std::size_t total_size = 0;             // sum of |occ[v]|

  int node_count() const { return static_cast<int>(cliques.size()); }
};

namespace detail {

struct CliqueForest {
  std::vector<std::vector<Vertex>> members;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<Vertex>> separators;
  int roots = 0;
};

inline CliqueForest clique_forest(const Graph& g, std::span<const Vertex> peo) {
  const int n = g.n();
  if (auto bad = check_peo(g, peo)) throw GraphError("invalid perfect elimination ordering");
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[peo[n - 1 - i]] = i;  // visit rank
  CliqueForest f;
  std::vector<int> clique_of(n, -1);
  std::vector<Vertex> prev;
  for (int i = 0; i < n; ++i) {
    Vertex x = peo[n - 1 - i];
    prev.clear();
    Vertex p = -1;
    for (Vertex w : g.neighbors(x))
      if (rank[w] < i) {
        prev.push_back(w);
        if (p == -1 || rank[w] > rank[p]) p = w;
      }
    if (p == -1) {
      clique_of[x] = static_cast<int>(f.members.size());
      f.members.push_back({x});
      ++f.roots;
      continue;
    }
    const int c = clique_of[p];
    if (prev.size() == f.members[c].size()) {
      f.members[c].push_back(x);
      clique_of[x] = c;
    } else {
      const int nc = static_cast<int>(f.members.size());
      std::vector<Vertex> k = prev;
      k.push_back(x);
      f.members.push_back(std::move(k));
      std::sort(prev.begin(), prev.end());
      f.edges.emplace_back(std::min(c, nc), std::max(c, nc));
      f.separators.push_back(prev);
      clique_of[x] = nc;
    }
  }
  for (auto& k : f.members) std::sort(k.begin(), k.end());
  return f;
}

}  // namespace detail

/// Clique tree of a connected chordal graph from one of its perfect elimination orderings.
inline CliqueTree clique_tree(const Graph& g, const Peo& peo) {
  if (g.n() == 0) throw GraphError("clique tree of an empty graph");
  auto f = detail::clique_forest(g, peo.order);
  if (f.roots > 1) require_connected(g);
  CliqueTree t;
  const int nodes = static_cast<int>(f.members.size());
  std::vector<std::pair<int, Vertex>> occ_pairs;
  for (int c = 0; c < nodes; ++c) {
    t.cliques.add_row(f.members[c]);
    for (Vertex v : f.members[c]) occ_pairs.emplace_back(v, c);
  }
  t.occ = Jagged<int>::from_pairs(g.n(), occ_pairs);
  t.total_size = occ_pairs.size();
  t.edges = f.edges;
  for (const auto& s : f.separators) t.separators.add_row(s);
  std::vector<std::pair<int, TreeArc>> arcs;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    arcs.push_back({t.edges[e].first, {t.edges[e].second, e}});
    arcs.push_back({t.edges[e].second, {t.edges[e].first, e}});
  }
  t.adj = Jagged<TreeArc>::from_pairs(nodes, arcs);
  if (t.total_size > static_cast<std::size_t>(g.n()) + 2 * static_cast<std::size_t>(g.m()))
    throw std::logic_error("clique tree exceeds the n + 2m size bound");
  return t;
}

/// All maximal cliques of a chordal graph, each sorted, in lexicographic order.
inline std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g, const Peo& peo) {
  auto f = detail::clique_forest(g, peo.order);
  auto out = std::move(f.members);
  std::sort(out.begin(), out.end());
  return out;
}

/// Labeled canonical form: sorted cliques plus sorted list of edges between clique vertex sets.
struct CanonicalCliqueTree {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> edges;
  friend bool operator==(const CanonicalCliqueTree&, const CanonicalCliqueTree&) = default;
};

inline CanonicalCliqueTree canonical_form(const CliqueTree& t) {
  CanonicalCliqueTree c;
  auto cl = t.cliques.to_vectors();
  c.cliques = cl;
  std::sort(c.cliques.begin(), c.cliques.end());
  for (auto [a, b] : t.edges) {
    auto x = cl[a], y = cl[b];
    if (y < x) std::swap(x, y);
    c.edges.emplace_back(std::move(x), std::move(y));
  }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

}  // namespace ncpath
