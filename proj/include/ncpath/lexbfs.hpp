#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "ncpath/graph.hpp"
#include "ncpath/jagged.hpp"

namespace ncpath {

/// Lexicographic breadth-first search by stable partition refinement.
/// Ties are broken toward the vertex that comes first in `initial` (identity order when empty),
/// so passing the reverse of a previous visit order yields a LexBFS+ sweep.
inline std::vector<Vertex> lex_bfs(const Graph& g, std::span<const Vertex> initial = {}) {
  const int n = g.n();
  std::vector<Vertex> init(initial.begin(), initial.end());
  if (init.empty()) {
    init.resize(n);
    std::iota(init.begin(), init.end(), 0);
  }
  // Neighbor lists reordered by rank in the initial order.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(2 * g.m()));
  for (Vertex u : init)
    for (Vertex w : g.neighbors(u)) pairs.emplace_back(w, u);
  auto adj = Jagged<Vertex>::from_pairs(n, pairs);
  pairs.clear();
  pairs.shrink_to_fit();

  std::vector<Vertex> next(n, -1), prev(n, -1);
  std::vector<int> cls(n, 0);
  std::vector<Vertex> first, last;
  std::vector<int> split_round, split_into;
  first.reserve(n + 1);
  if (n == 0) return {};
  for (int i = 0; i < n; ++i) {
    if (i > 0) prev[init[i]] = init[i - 1];
    if (i + 1 < n) next[init[i]] = init[i + 1];
  }
  Vertex head = init[0];
  first.push_back(init[0]);
  last.push_back(init[n - 1]);
  split_round.push_back(-1);
  split_into.push_back(-1);
  std::vector<char> visited(n, 0);

  auto unlink = [&](Vertex w) {
    if (prev[w] != -1) next[prev[w]] = next[w]; else head = next[w];
    if (next[w] != -1) prev[next[w]] = prev[w];
    prev[w] = next[w] = -1;
  };
  auto insert_before = [&](Vertex w, Vertex anchor) {
    prev[w] = prev[anchor];
    next[w] = anchor;
    if (prev[anchor] != -1) next[prev[anchor]] = w; else head = w;
    prev[anchor] = w;
  };
  auto insert_after = [&](Vertex w, Vertex anchor) {
    next[w] = next[anchor];
    prev[w] = anchor;
    if (next[anchor] != -1) prev[next[anchor]] = w;
    next[anchor] = w;
  };
  // Detaches w from its class bookkeeping (not from the list).
  auto leave_class = [&](Vertex w) {
    int c = cls[w];
    if (first[c] == w && last[c] == w) {
      first[c] = last[c] = -1;
    } else if (first[c] == w) {
      first[c] = next[w];
    } else if (last[c] == w) {
      last[c] = prev[w];
    }
  };

  std::vector<Vertex> order;
  order.reserve(n);
  for (int round = 0; round < n; ++round) {
    Vertex v = head;
    leave_class(v);
    unlink(v);
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : adj[v]) {
      if (visited[w]) continue;
      const int c = cls[w];
      if (split_round[c] != round) {
        split_round[c] = round;
        split_into[c] = static_cast<int>(first.size());
        first.push_back(-1);
        last.push_back(-1);
        split_round.push_back(-1);
        split_into.push_back(-1);
      }
      const int nc = split_into[c];
      if (first[nc] == -1) {
        Vertex anchor = first[c];
        leave_class(w);
        if (anchor != w) {
          unlink(w);
          insert_before(w, anchor);
        }
        first[nc] = last[nc] = w;
      } else {
        Vertex anchor = last[nc];
        leave_class(w);
        if (next[anchor] != w) {
          unlink(w);
          insert_after(w, anchor);
        }
        last[nc] = w;
      }
      cls[w] = nc;
    }
  }
  return order;
}

/// True when every closed neighborhood occupies a contiguous block of the order.
inline bool is_umbrella_order(const Graph& g, std::span<const Vertex> order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    int lo = pos[v], hi = pos[v];
    for (Vertex w : g.neighbors(v)) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    if (hi - lo != g.degree(v)) return false;
  }
  return true;
}

/// Three-sweep LexBFS / LexBFS+ / LexBFS+ proper-interval order, or nothing if the final sweep
/// is not an umbrella order.
inline std::optional<std::vector<Vertex>> proper_interval_order(const Graph& g) {
  auto s1 = lex_bfs(g);
  std::vector<Vertex> r(s1.rbegin(), s1.rend());
  auto s2 = lex_bfs(g, r);
  r.assign(s2.rbegin(), s2.rend());
  auto s3 = lex_bfs(g, r);
  if (!is_umbrella_order(g, s3)) return std::nullopt;
  return s3;
}

}  // namespace ncpath
