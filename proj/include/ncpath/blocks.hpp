#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ncpath/graph.hpp"

namespace ncpath {

struct BlockCutTree {
  std::vector<std::vector<Vertex>> blocks;         // each sorted; blocks in lexicographic order
  std::vector<Vertex> cut_vertices;                // sorted
  std::vector<std::pair<Vertex, int>> tree_edges;  // (cut vertex, block index), sorted
  std::vector<std::vector<Vertex>> block_cuts;     // cut vertices inside each block, sorted
  int leaf_count = 0;

  bool is_path() const { return leaf_count <= 2; }
};

// Hopcroft-Tarjan with an explicit DFS stack and an edge stack.
inline BlockCutTree block_cut_tree(const Graph& g) {
  if (g.n() == 0) throw GraphError("block_cut_tree needs at least one vertex");
  require_connected(g);
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_arc(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> stamp(n, -1);

  auto emit_block = [&](Vertex v, Vertex w) {
    std::vector<Vertex> block;
    const int id = static_cast<int>(blocks.size());
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      for (Vertex x : {e.first, e.second})
        if (stamp[x] != id) {
          stamp[x] = id;
          block.push_back(x);
        }
      if (e.first == v && e.second == w) break;
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  };

  int timer = 0;
  const Vertex root = 0;
  int root_children = 0;
  std::vector<Vertex> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nb = g.neighbors(v);
    if (next_arc[v] < nb.size()) {
      Vertex w = nb[next_arc[v]++];
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(v, w);
        if (v == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[v];
    if (p == -1) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      if (p != root) is_cut[p] = 1;
      emit_block(p, v);
    }
  }
  if (root_children >= 2) is_cut[root] = 1;
  if (blocks.empty()) blocks.push_back({root});

  std::sort(blocks.begin(), blocks.end());
  BlockCutTree bc;
  bc.blocks = std::move(blocks);
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) bc.cut_vertices.push_back(v);
  bc.block_cuts.resize(bc.blocks.size());
  for (std::size_t b = 0; b < bc.blocks.size(); ++b)
    for (Vertex v : bc.blocks[b])
      if (is_cut[v]) {
        bc.block_cuts[b].push_back(v);
        bc.tree_edges.emplace_back(v, static_cast<int>(b));
      }
  std::sort(bc.tree_edges.begin(), bc.tree_edges.end());
  if (bc.cut_vertices.empty()) {
    bc.leaf_count = 1;
  } else {
    for (const auto& cuts : bc.block_cuts)
      if (cuts.size() == 1) ++bc.leaf_count;
  }
  return bc;
}

inline bool is_biconnected(const Graph& g) {
  if (g.n() < 3) return false;
  auto bc = block_cut_tree(g);
  return bc.cut_vertices.empty();
}

}  // namespace ncpath
