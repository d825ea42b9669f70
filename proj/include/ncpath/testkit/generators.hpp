#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncpath/graph.hpp"
#include "ncpath/testkit/exhaustive.hpp"
#include "ncpath/testkit/rng.hpp"

namespace ncpath::testkit {

enum class GenKind { RandomHostTreeNcPaths, RandomProperInterval, RandomChordal, ExhaustiveSmall };

inline std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::RandomHostTreeNcPaths: return "random-host-tree-nc-paths";
    case GenKind::RandomProperInterval: return "random-proper-interval";
    case GenKind::RandomChordal: return "random-chordal";
    case GenKind::ExhaustiveSmall: return "exhaustive-small";
  }
  return "?";
}

inline GenKind gen_kind_from_string(std::string_view s) {
  for (GenKind k : {GenKind::RandomHostTreeNcPaths, GenKind::RandomProperInterval,
                    GenKind::RandomChordal, GenKind::ExhaustiveSmall})
    if (to_string(k) == s) return k;
  throw GraphError("unknown generator kind '" + std::string(s) + "'");
}

struct GenParams {
  int max_host_degree = 4;    // pieces attached to one terminal of the host tree
  int max_path_length = 6;    // nodes per chain; subtree size for random-chordal
  int twin_multiplicity = 2;  // junction classes get 1..twin_multiplicity members
  int min_cover = 1;          // vertex paths through each host edge; 2 yields 2-connected output
  double junction_rate = 0.3;
  double singleton_rate = 0.1;
  double extra_rate = 1.0;    // extra chain vertices per chain edge (upper bound of a uniform draw)
  bool connected_only = true; // exhaustive-small
};

struct GenSpec {
  GenKind kind = GenKind::RandomHostTreeNcPaths;
  int n = 1;
  std::uint64_t seed = 1;
  GenParams params;

  std::string describe() const {
    std::ostringstream os;
    os << "kind=" << to_string(kind) << " n=" << n << " seed=" << seed
       << " max_host_degree=" << params.max_host_degree
       << " max_path_length=" << params.max_path_length
       << " twin_multiplicity=" << params.twin_multiplicity << " min_cover=" << params.min_cover
       << " junction_rate=" << params.junction_rate << " singleton_rate=" << params.singleton_rate
       << " extra_rate=" << params.extra_rate;
    if (kind == GenKind::ExhaustiveSmall) os << " connected_only=" << params.connected_only;
    return os.str();
  }
};

namespace detail {

// Host tree nodes with the vertices whose subtree contains them.
class ModelBuilder {
 public:
  int new_node() {
    members_.emplace_back();
    return static_cast<int>(members_.size()) - 1;
  }
  int add_vertex(std::span<const int> nodes) {
    const int id = vertices_++;
    for (int z : nodes) members_[z].push_back(id);
    return id;
  }
  int vertex_count() const { return vertices_; }

  Graph finish(Rng& rng) const {
    std::vector<Vertex> perm(vertices_);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<Vertex>(perm));
    std::vector<Edge> edges;
    for (const auto& mem : members_)
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
          Vertex a = perm[mem[i]], b = perm[mem[j]];
          edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(vertices_, edges);
  }

 private:
  std::vector<std::vector<int>> members_;
  int vertices_ = 0;
};

// Chain of k nodes starting at `top`; `count` vertex intervals over positions 1..k, of which
// (k-1)*cover are the unit edges. Left and right ends are re-paired in sorted order, which keeps
// every edge's coverage and rules out an interval strictly inside another.
inline int plant_chain(ModelBuilder& b, Rng& rng, int top, int k, int cover, int extras,
                       int max_len) {
  std::vector<int> nodes(k + 1);
  nodes[1] = top;
  for (int i = 2; i <= k; ++i) nodes[i] = b.new_node();
  std::vector<int> ls, rs;
  for (int i = 1; i < k; ++i)
    for (int c = 0; c < cover; ++c) {
      ls.push_back(i);
      rs.push_back(i + 1);
    }
  for (int e = 0; e < extras; ++e) {
    int a = rng.range(1, k);
    int bnd = std::min(k, a + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_len)))));
    if (a == bnd && (a == 1 || a == k)) {
      if (a == 1) bnd = 2;
      else a = k - 1;
    }
    ls.push_back(a);
    rs.push_back(bnd);
  }
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  std::vector<int> span_nodes;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    span_nodes.assign(nodes.begin() + ls[i], nodes.begin() + rs[i] + 1);
    b.add_vertex(span_nodes);
  }
  return nodes[k];
}

inline Graph gen_nc_paths(const GenSpec& spec) {
  const GenParams& p = spec.params;
  Rng rng(spec.seed);
  ModelBuilder b;
  std::vector<int> terminals{b.new_node()};
  std::vector<int> pieces_at{0};
  const int cover = std::max(1, p.min_cover);
  int remaining = spec.n;
  auto degree_of = [&](int t) -> int& { return pieces_at[t]; };
  while (remaining > 0) {
    int t = terminals.back();
    for (int tries = 0; tries < 8; ++tries) {
      int cand = terminals[rng.below(terminals.size())];
      if (degree_of(cand) < p.max_host_degree) {
        t = cand;
        break;
      }
    }
    const double r = rng.unit();
    if (remaining >= 3 && r < p.junction_rate) {
      int x = b.new_node();
      int y2 = b.new_node();
      int y3 = b.new_node();
      // One private vertex at each of t, y2, y3 keeps their cliques out of the junction clique.
      const bool anchored = remaining >= 6;
      int sizes[3];
      int budget = remaining - (anchored ? 6 : 3);
      for (int& s : sizes) {
        s = 1;
        int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, p.twin_multiplicity))));
        extra = std::min(extra, budget);
        s += extra;
        budget -= extra;
      }
      const int classes[3][3] = {{t, x, y2}, {y2, x, y3}, {y3, x, t}};
      for (int c = 0; c < 3; ++c)
        for (int s = 0; s < sizes[c]; ++s) b.add_vertex(classes[c]);
      remaining -= sizes[0] + sizes[1] + sizes[2];
      if (anchored) {
        for (int z : {t, y2, y3}) {
          const int node[1] = {z};
          b.add_vertex(node);
        }
        remaining -= 3;
      }
      pieces_at.resize(static_cast<std::size_t>(std::max(y2, y3)) + 1, 0);
      ++degree_of(t);
      degree_of(y2) = 1;
      degree_of(y3) = 1;
      terminals.push_back(y2);
      terminals.push_back(y3);
    } else if (remaining >= cover && !rng.chance(p.singleton_rate)) {
      const int kmax = std::max(2, std::min(p.max_path_length, remaining / cover + 1));
      const int k = rng.range(2, kmax);
      const int base = (k - 1) * cover;
      const int cap = std::min(remaining - base,
                               static_cast<int>(p.extra_rate * static_cast<double>(k - 1)));
      const int extras = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(0, cap)) + 1));
      int bottom = plant_chain(b, rng, t, k, cover, extras, k);
      remaining -= base + extras;
      pieces_at.resize(static_cast<std::size_t>(bottom) + 1, 0);
      ++degree_of(t);
      degree_of(bottom) = 1;
      terminals.push_back(bottom);
    } else {
      const int node[1] = {t};
      b.add_vertex(node);
      --remaining;
    }
  }
  return b.finish(rng);
}

inline Graph gen_proper_interval(const GenSpec& spec) {
  const GenParams& p = spec.params;
  Rng rng(spec.seed);
  ModelBuilder b;
  int top = b.new_node();
  if (spec.n == 1) {
    const int node[1] = {top};
    b.add_vertex(node);
    return b.finish(rng);
  }
  const int cover = std::clamp(p.min_cover, 1, spec.n);
  const int k = 1 + std::max(1, spec.n / (cover + 1));
  const int base = (k - 1) * cover;
  plant_chain(b, rng, top, k, cover, spec.n - base, std::max(1, p.max_path_length));
  return b.finish(rng);
}

inline Graph gen_chordal(const GenSpec& spec) {
  const GenParams& p = spec.params;
  Rng rng(spec.seed);
  ModelBuilder b;
  const int hosts = std::max(1, spec.n / 2);
  std::vector<std::vector<int>> tree(hosts);
  b.new_node();
  std::vector<std::pair<int, int>> host_edges;
  for (int i = 1; i < hosts; ++i) {
    b.new_node();
    int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    tree[i].push_back(parent);
    tree[parent].push_back(i);
    host_edges.emplace_back(parent, i);
  }
  int remaining = spec.n;
  for (auto [a, c] : host_edges) {
    const int nodes[2] = {a, c};
    b.add_vertex(nodes);
    --remaining;
  }
  std::vector<int> sub, mark(hosts, -1);
  for (int v = 0; remaining > 0; ++v, --remaining) {
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(hosts)));
    int size = rng.range(1, std::max(1, p.max_path_length));
    sub.assign(1, start);
    mark[start] = v;
    for (int step = 0; step < 4 * size && static_cast<int>(sub.size()) < size; ++step) {
      int from = sub[rng.below(sub.size())];
      if (tree[from].empty()) break;
      int to = tree[from][rng.below(tree[from].size())];
      if (mark[to] != v) {
        mark[to] = v;
        sub.push_back(to);
      }
    }
    b.add_vertex(sub);
  }
  return b.finish(rng);
}

}  // namespace detail

/// One random instance; kinds other than exhaustive-small only.
inline Graph gen(const GenSpec& spec) {
  if (spec.n < 1) throw GraphError("generator needs n >= 1");
  switch (spec.kind) {
    case GenKind::RandomHostTreeNcPaths: return detail::gen_nc_paths(spec);
    case GenKind::RandomProperInterval: return detail::gen_proper_interval(spec);
    case GenKind::RandomChordal: return detail::gen_chordal(spec);
    case GenKind::ExhaustiveSmall: break;
  }
  throw GraphError("exhaustive-small yields a family of graphs; use generate()");
}

/// All instances described by a GenSpec: one graph for the random kinds, the full
/// isomorphism-class list for exhaustive-small.
inline std::vector<Graph> generate(const GenSpec& spec) {
  if (spec.kind == GenKind::ExhaustiveSmall) return all_graphs(spec.n, spec.params.connected_only);
  return {gen(spec)};
}

}  // namespace ncpath::testkit
