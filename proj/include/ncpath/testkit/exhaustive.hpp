#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "ncpath/graph.hpp"

namespace ncpath::testkit {

namespace detail {

using AdjMasks = std::vector<std::uint32_t>;

// Upper-triangle adjacency bits read column by column under the given vertex order.
inline std::uint64_t code_of(const AdjMasks& adj, const std::vector<int>& order) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(order.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1U);
  return code;
}

// Isomorphism-invariant ordered partition from color refinement seeded with degrees.
inline std::vector<std::vector<int>> refined_cells(const AdjMasks& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(adj[v]);
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if ((adj[v] >> w) & 1U) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (int v = 0; v < n; ++v) color[v] = rank[sig[v].first];
    if (r == classes) break;
    classes = r;
  }
  std::vector<std::vector<int>> cells(classes);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  return cells;
}

// Minimum code over all orders that respect the refined cell sequence.
inline std::uint64_t canonical_code(const AdjMasks& adj) {
  auto cells = refined_cells(adj);
  std::vector<int> order;
  for (auto& c : cells) order.insert(order.end(), c.begin(), c.end());
  std::uint64_t best = UINT64_MAX;
  // Odometer over per-cell permutations.
  for (auto& c : cells) std::sort(c.begin(), c.end());
  while (true) {
    std::size_t pos = 0;
    for (auto& c : cells)
      for (int v : c) order[pos++] = v;
    best = std::min(best, code_of(adj, order));
    std::size_t i = 0;
    for (; i < cells.size(); ++i)
      if (std::next_permutation(cells[i].begin(), cells[i].end())) break;
    if (i == cells.size()) break;
  }
  return best;
}

inline AdjMasks decode(std::uint64_t code, int n) {
  AdjMasks adj(n, 0);
  int bit = n * (n - 1) / 2 - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((code >> bit) & 1ULL) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
  return adj;
}

inline bool masks_connected(const AdjMasks& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1U) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == ((n == 32) ? 0xffffffffU : ((1U << n) - 1));
}

inline Graph to_graph(const AdjMasks& adj) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(adj.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((adj[i] >> j) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

// Canonical codes of all graphs on n vertices, by one-vertex augmentation of the n-1 list.
inline const std::vector<std::uint64_t>& all_codes(int n) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::uint64_t> codes;
  if (n <= 1) {
    codes.push_back(0);
  } else {
    const std::vector<std::uint64_t>& smaller = all_codes(n - 1);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t c : smaller) {
      AdjMasks base = decode(c, n - 1);
      base.push_back(0);
      for (std::uint32_t s = 0; s < (1U << (n - 1)); ++s) {
        AdjMasks a = base;
        a[n - 1] = s;
        for (int v = 0; v < n - 1; ++v)
          if ((s >> v) & 1U) a[v] |= 1U << (n - 1);
        seen.insert(canonical_code(a));
      }
    }
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
  }
  return cache.emplace(n, std::move(codes)).first->second;
}

}  // namespace detail

/// Every graph on n vertices up to isomorphism (optionally only connected ones), in canonical
/// code order. Supported for 1 <= n <= 9.
inline std::vector<Graph> all_graphs(int n, bool connected_only = true) {
  if (n < 1 || n > 9) throw GraphError("exhaustive enumeration supports 1 <= n <= 9");
  std::vector<Graph> out;
  for (std::uint64_t c : detail::all_codes(n)) {
    auto adj = detail::decode(c, n);
    if (connected_only && !detail::masks_connected(adj)) continue;
    out.push_back(detail::to_graph(adj));
  }
  return out;
}

}  // namespace ncpath::testkit
