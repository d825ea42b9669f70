#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncpath {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by operations that need a connected graph; names one vertex from each of two components.
class DisconnectedError : public GraphError {
 public:
  DisconnectedError(Vertex a, Vertex b)
      : GraphError("graph is disconnected: vertices " + std::to_string(a) + " and " +
                   std::to_string(b) + " lie in different components"),
        first(a),
        second(b) {}
  Vertex first;
  Vertex second;
};

/// Simple undirected graph in compressed sparse row form with sorted neighbor lists.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Builds a graph from an edge list; rejects loops, parallel edges and out-of-range ids.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("vertex id out of range in edge " + std::to_string(u) + " " +
                         std::to_string(v));
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.adj_[fill[u]++] = v;
      g.adj_[fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
      auto* b = g.adj_.data() + g.offsets_[v];
      auto* e = g.adj_.data() + g.offsets_[v + 1];
      std::sort(b, e);
      auto dup = std::adjacent_find(b, e);
      if (dup != e)
        throw GraphError("duplicate edge " + std::to_string(std::min(v, *dup)) + " " +
                         std::to_string(std::max(v, *dup)));
    }
    g.m_ = static_cast<std::int64_t>(edges.size());
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  int n() const { return n_; }
  std::int64_t m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool adjacent(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

enum class Format { EdgeList, Dimacs };

inline Format parse_format(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return Format::EdgeList;
  if (name == "dimacs" || name == "DIMACS") return Format::Dimacs;
  throw GraphError("unknown graph format '" + std::string(name) + "'");
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw GraphError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

inline std::vector<Line> tokenize(std::string_view text, char comment) {
  std::vector<Line> lines;
  std::size_t pos = 0, number = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto toks = split_ws(text.substr(pos, end - pos));
    if (!toks.empty() && toks[0][0] != comment) lines.push_back({number, std::move(toks)});
    pos = end + 1;
  }
  return lines;
}

inline Graph build_checked(long long n, long long m, std::vector<Edge>& edges,
                           const std::vector<std::size_t>& line_of) {
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    // Locate the first offending line for a precise diagnostic.
    std::vector<std::pair<Edge, std::size_t>> seen;
    seen.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("line " + std::to_string(line_of[i]) + ": vertex id out of range");
      if (u == v)
        throw GraphError("line " + std::to_string(line_of[i]) + ": self-loop at vertex " +
                         std::to_string(u));
      seen.push_back({{std::min(u, v), std::max(u, v)}, line_of[i]});
    }
    std::stable_sort(seen.begin(), seen.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (seen[i].first == seen[i - 1].first)
        throw GraphError("line " + std::to_string(seen[i].second) + ": duplicate edge " +
                         std::to_string(seen[i].first.first) + " " +
                         std::to_string(seen[i].first.second));
    (void)m;
    throw;
  }
}

}  // namespace detail

/// Parses an edge-list ("n m" then m "u v" lines, '#' comments) or DIMACS ("p edge n m", 1-based "e u v") text.
inline Graph parse_graph(std::string_view text, Format format = Format::EdgeList) {
  const char comment = format == Format::EdgeList ? '#' : 'c';
  auto lines = detail::tokenize(text, comment);
  if (lines.empty()) throw GraphError("empty input: missing header");
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> line_of;
  if (format == Format::EdgeList) {
    const auto& h = lines[0];
    if (h.tokens.size() != 2)
      throw GraphError("line " + std::to_string(h.number) + ": malformed header, expected 'n m'");
    n = detail::parse_int(h.tokens[0], h.number);
    m = detail::parse_int(h.tokens[1], h.number);
    if (n < 0 || m < 0 || n > 2'000'000'000LL)
      throw GraphError("line " + std::to_string(h.number) + ": malformed header values");
    if (static_cast<long long>(lines.size()) - 1 != m)
      throw GraphError("header announces " + std::to_string(m) + " edges but " +
                       std::to_string(lines.size() - 1) + " edge lines follow");
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (l.tokens.size() != 2)
        throw GraphError("line " + std::to_string(l.number) + ": expected 'u v'");
      long long u = detail::parse_int(l.tokens[0], l.number);
      long long v = detail::parse_int(l.tokens[1], l.number);
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("line " + std::to_string(l.number) + ": vertex id out of range");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      line_of.push_back(l.number);
    }
  } else {
    std::size_t i = 0;
    const auto& h = lines[0];
    if (h.tokens.size() != 4 || h.tokens[0] != "p")
      throw GraphError("line " + std::to_string(h.number) + ": malformed header, expected 'p edge n m'");
    n = detail::parse_int(h.tokens[2], h.number);
    m = detail::parse_int(h.tokens[3], h.number);
    if (n < 0 || m < 0 || n > 2'000'000'000LL)
      throw GraphError("line " + std::to_string(h.number) + ": malformed header values");
    for (i = 1; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (l.tokens.size() != 3 || l.tokens[0] != "e")
        throw GraphError("line " + std::to_string(l.number) + ": expected 'e u v'");
      long long u = detail::parse_int(l.tokens[1], l.number) - 1;
      long long v = detail::parse_int(l.tokens[2], l.number) - 1;
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("line " + std::to_string(l.number) + ": vertex id out of range");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      line_of.push_back(l.number);
    }
    if (static_cast<long long>(edges.size()) != m)
      throw GraphError("header announces " + std::to_string(m) + " edges but " +
                       std::to_string(edges.size()) + " edge lines follow");
  }
  return detail::build_checked(n, m, edges, line_of);
}

/// Writes the normalized edge-list form: header then edges (u < v) in sorted order.
inline std::string serialize(const Graph& g, Format format = Format::EdgeList) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.m()) * 12 + 32);
  if (format == Format::EdgeList) {
    out += std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  } else {
    out += "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  }
  const int shift = format == Format::Dimacs ? 1 : 0;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) {
        if (format == Format::Dimacs) out += "e ";
        out += std::to_string(u + shift);
        out += ' ';
        out += std::to_string(v + shift);
        out += '\n';
      }
  return out;
}

/// Components in order of their smallest vertex; each component sorted ascending.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    queue.assign(1, s);
    comp[s] = id;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.neighbors(queue[h]))
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

/// Throws DisconnectedError when g has more than one component.
inline void require_connected(const Graph& g) {
  if (g.n() == 0) return;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != g.n()) {
    Vertex other = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw DisconnectedError(0, other);
  }
}

inline bool is_connected(const Graph& g) {
  try {
    require_connected(g);
    return true;
  } catch (const DisconnectedError&) {
    return false;
  }
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // local id -> original id
};

/// Subgraph induced by `vertices`; local ids follow the ascending order of the original ids.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_original.assign(vertices.begin(), vertices.end());
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                        out.to_original.end());
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) local[out.to_original[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    for (Vertex w : g.neighbors(out.to_original[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  out.graph = Graph::from_edges(static_cast<int>(out.to_original.size()), edges);
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  return induced_subgraph(g, std::span<const Vertex>(vertices));
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.m()));
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.n(), edges);
}

struct TwinPartition {
  std::vector<int> class_of;
  std::vector<std::vector<Vertex>> classes;  // ordered by smallest member; members ascending
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline bool same_closed_neighborhood(const Graph& g, Vertex a, Vertex b) {
  if (g.degree(a) != g.degree(b)) return false;
  if (!g.adjacent(a, b)) return false;
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  // N[a] = N[b] with a ~ b reduces to N(a) \ {b} = N(b) \ {a}.
  std::size_t i = 0, j = 0;
  while (i < na.size() || j < nb.size()) {
    if (i < na.size() && na[i] == b) { ++i; continue; }
    if (j < nb.size() && nb[j] == a) { ++j; continue; }
    if (i == na.size() || j == nb.size() || na[i] != nb[j]) return false;
    ++i;
    ++j;
  }
  return true;
}
}  // namespace detail

/// Groups vertices with equal closed neighborhoods (hash bucketing followed by exact comparison).
inline TwinPartition twin_partition(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint64_t> h(n);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t acc = detail::mix64(static_cast<std::uint64_t>(v));
    for (Vertex w : g.neighbors(v)) acc += detail::mix64(static_cast<std::uint64_t>(w));
    h[v] = acc;
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    if (h[a] != h[b]) return h[a] < h[b];
    return a < b;
  });
  TwinPartition tp;
  tp.class_of.assign(n, -1);
  std::vector<std::vector<Vertex>> raw;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i]) && h[order[j]] == h[order[i]]) ++j;
    std::vector<int> local_classes;
    for (std::size_t k = i; k < j; ++k) {
      Vertex v = order[k];
      int found = -1;
      for (int c : local_classes)
        if (detail::same_closed_neighborhood(g, raw[c][0], v)) {
          found = c;
          break;
        }
      if (found == -1) {
        found = static_cast<int>(raw.size());
        raw.emplace_back();
        local_classes.push_back(found);
      }
      raw[found].push_back(v);
    }
    i = j;
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (Vertex v : raw[c]) tp.class_of[v] = static_cast<int>(c);
  tp.classes = std::move(raw);
  return tp;
}

}  // namespace ncpath
