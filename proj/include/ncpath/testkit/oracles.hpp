#pragma once

// Brute-force reference answers. Nothing here uses the library's algorithms beyond the Graph
// container and the Witness record.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncpath/graph.hpp"
#include "ncpath/witness.hpp"

namespace ncpath::testkit {

class OracleLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Matrix {
  int n;
  std::vector<char> bits;
  explicit Matrix(const Graph& g) : n(g.n()), bits(static_cast<std::size_t>(n) * n, 0) {
    for (auto [u, v] : g.edges()) bits[u * n + v] = bits[v * n + u] = 1;
  }
  bool operator()(int u, int v) const { return bits[u * n + v] != 0; }
};

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    m[v] = 1U << v;
    for (Vertex w : g.neighbors(v)) m[v] |= 1U << w;
  }
  return m;
}

inline bool mask_connected(const std::vector<std::uint32_t>& closed, std::uint32_t s) {
  if (s == 0) return false;
  std::uint32_t seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= closed[__builtin_ctz(f)];
    next &= s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

inline std::vector<Vertex> mask_to_vertices(std::uint32_t s) {
  std::vector<Vertex> out;
  for (; s; s &= s - 1) out.push_back(__builtin_ctz(s));
  return out;
}

}  // namespace detail

/// Exhaustive induced-subgraph search for one forbidden kind; lexicographically first hit.
inline std::optional<Witness> oracle_forbidden(const Graph& g, WitnessKind kind) {
  const int n = g.n();
  detail::Matrix a(g);
  if (kind == WitnessKind::Claw) {
    for (int c = 0; c < n; ++c) {
      auto nb = g.neighbors(c);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (a(nb[i], nb[j])) continue;
          for (std::size_t k = j + 1; k < nb.size(); ++k)
            if (!a(nb[i], nb[k]) && !a(nb[j], nb[k]))
              return Witness{WitnessKind::Claw, {c, nb[i], nb[j], nb[k]}, c};
        }
    }
    return std::nullopt;
  }
  if (kind == WitnessKind::Net || kind == WitnessKind::ThreeSun) {
    for (int t0 = 0; t0 < n; ++t0)
      for (int t1 = 0; t1 < n; ++t1) {
        if (t1 == t0 || !a(t0, t1)) continue;
        for (int t2 = 0; t2 < n; ++t2) {
          if (t2 == t0 || t2 == t1 || !a(t0, t2) || !a(t1, t2)) continue;
          const int t[3] = {t0, t1, t2};
          // Candidate lists for each of the three outer positions.
          std::vector<int> cand[3];
          for (int j = 0; j < 3; ++j)
            for (int x = 0; x < n; ++x) {
              if (x == t0 || x == t1 || x == t2) continue;
              bool ok;
              if (kind == WitnessKind::Net)
                ok = a(x, t[j]) && !a(x, t[(j + 1) % 3]) && !a(x, t[(j + 2) % 3]);
              else
                ok = a(x, t[j]) && a(x, t[(j + 1) % 3]) && !a(x, t[(j + 2) % 3]);
              if (ok) cand[j].push_back(x);
            }
          for (int x : cand[0])
            for (int y : cand[1]) {
              if (a(x, y)) continue;
              for (int z : cand[2])
                if (!a(x, z) && !a(y, z)) return Witness{kind, {t0, t1, t2, x, y, z}, -1};
            }
        }
      }
    return std::nullopt;
  }
  // Holes: extend induced paths from their smallest vertex.
  std::vector<int> path;
  std::vector<char> on(n, 0);
  std::optional<Witness> found;
  std::function<bool(int)> extend = [&](int s) -> bool {
    const int last = path.back();
    for (int x : g.neighbors(last)) {
      if (x <= s || on[x]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = a(x, path[i]);
      if (chord) continue;
      if (path.size() >= 3 && a(x, s)) {
        path.push_back(x);
        found = Witness{WitnessKind::Hole, path, -1};
        return true;
      }
      if (path.size() >= 2 && a(x, s)) continue;
      path.push_back(x);
      on[x] = 1;
      if (extend(s)) return true;
      on[x] = 0;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on.assign(n, 0);
    on[s] = 1;
    if (extend(s)) return found;
  }
  return std::nullopt;
}

/// Chordality by repeated removal of simplicial vertices.
inline bool oracle_chordal(const Graph& g) {
  const int n = g.n();
  detail::Matrix a(g);
  std::vector<char> alive(n, 1);
  for (int removed = 0; removed < n; ++removed) {
    int pick = -1;
    for (int v = 0; v < n && pick == -1; ++v) {
      if (!alive[v]) continue;
      bool simplicial = true;
      std::vector<int> nb;
      for (int w : g.neighbors(v))
        if (alive[w]) nb.push_back(w);
      for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
        for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j) simplicial = a(nb[i], nb[j]);
      if (simplicial) pick = v;
    }
    if (pick == -1) return false;
    alive[pick] = 0;
  }
  return true;
}

/// Maximal vertex sets inducing a 2-connected subgraph or a single edge (n <= 16).
inline std::vector<std::vector<Vertex>> oracle_blocks(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw OracleLimit("oracle_blocks supports n <= 16");
  auto closed = detail::closed_masks(g);
  auto biconnected = [&](std::uint32_t s) {
    const int k = __builtin_popcount(s);
    if (k == 1) return true;
    if (k == 2) {
      int u = __builtin_ctz(s);
      return ((closed[u] >> __builtin_ctz(s & (s - 1))) & 1U) != 0;
    }
    if (!detail::mask_connected(closed, s)) return false;
    for (std::uint32_t r = s; r; r &= r - 1)
      if (!detail::mask_connected(closed, s & ~(r & (~r + 1)))) return false;
    return true;
  };
  std::vector<std::uint32_t> good;
  for (std::uint32_t s = 1; s < (1U << n); ++s)
    if (biconnected(s)) good.push_back(s);
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t s : good) {
    bool maximal = true;
    for (std::uint32_t t : good)
      if (t != s && (t & s) == s) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(detail::mask_to_vertices(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertices whose removal increases the number of components.
inline std::vector<Vertex> oracle_cut_vertices(const Graph& g) {
  const int n = g.n();
  auto count = [&](int skip) {
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
      if (s == skip || seen[s]) continue;
      ++comps;
      std::vector<int> st{s};
      seen[s] = 1;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : g.neighbors(v))
          if (w != skip && !seen[w]) {
            seen[w] = 1;
            st.push_back(w);
          }
      }
    }
    return comps;
  };
  const int base = count(-1);
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if (count(v) > base) out.push_back(v);
  return out;
}

/// All maximal cliques by subset enumeration (n <= 16), each sorted, lexicographic order.
inline std::vector<std::vector<Vertex>> oracle_maximal_cliques(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw OracleLimit("oracle_maximal_cliques supports n <= 16");
  auto closed = detail::closed_masks(g);
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool clique = true;
    for (std::uint32_t r = s; r && clique; r &= r - 1) clique = (closed[__builtin_ctz(r)] & s) == s;
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1U) && (closed[v] & s) == s) maximal = false;
    if (maximal) out.push_back(detail::mask_to_vertices(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class DomKind { MDS, MIDS, MCDS, Steiner };

struct DomOracle {
  int size = 0;
  std::vector<Vertex> witness;
};

/// Exact minimum by enumerating subsets in order of size (n <= 16; X used by Steiner only).
inline DomOracle oracle_domination(const Graph& g, DomKind kind, std::span<const Vertex> X = {}) {
  const int n = g.n();
  if (n > 16) throw OracleLimit("oracle_domination supports n <= 16");
  if (n == 0) return {};
  auto closed = detail::closed_masks(g);
  const std::uint32_t full = (1U << n) - 1;
  std::uint32_t required = 0;
  for (Vertex x : X) required |= 1U << x;
  if (kind == DomKind::Steiner && required == 0) throw std::invalid_argument("empty terminal set");
  auto accept = [&](std::uint32_t s) {
    if ((s & required) != required) return false;
    if (kind == DomKind::Steiner) return detail::mask_connected(closed, s);
    std::uint32_t dom = 0;
    for (std::uint32_t r = s; r; r &= r - 1) dom |= closed[__builtin_ctz(r)];
    if (dom != full) return false;
    if (kind == DomKind::MIDS)
      for (std::uint32_t r = s; r; r &= r - 1) {
        int v = __builtin_ctz(r);
        if ((closed[v] & s) != (1U << v)) return false;
      }
    if (kind == DomKind::MCDS) return detail::mask_connected(closed, s);
    return true;
  };
  for (int k = 1; k <= n; ++k) {
    std::uint32_t s = (1U << k) - 1;
    while (s <= full) {
      if (accept(s)) return {k, detail::mask_to_vertices(s)};
      std::uint32_t c = s & (~s + 1), r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  throw std::logic_error("no feasible set found");
}

namespace detail {
// paths[S] = set of vertices that end some Hamiltonian path of G[S].
inline std::vector<std::uint32_t> path_ends(const Graph& g) {
  const int n = g.n();
  auto closed = closed_masks(g);
  std::vector<std::uint32_t> ends(1U << n, 0);
  for (int v = 0; v < n; ++v) ends[1U << v] = 1U << v;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (!ends[s]) continue;
    for (int w = 0; w < n; ++w) {
      if ((s >> w) & 1U) continue;
      if (closed[w] & ends[s]) ends[s | (1U << w)] |= 1U << w;
    }
  }
  return ends;
}
}  // namespace detail

inline bool oracle_hamiltonian_path(const Graph& g) {
  if (g.n() > 12) throw OracleLimit("Hamiltonicity oracles support n <= 12");
  if (g.n() == 0) return false;
  return detail::path_ends(g)[(1U << g.n()) - 1] != 0;
}

inline bool oracle_hamiltonian_cycle(const Graph& g) {
  const int n = g.n();
  if (n > 12) throw OracleLimit("Hamiltonicity oracles support n <= 12");
  if (n < 3) return false;
  auto closed = detail::closed_masks(g);
  // Paths starting at vertex 0.
  std::vector<std::uint32_t> ends(1U << n, 0);
  ends[1] = 1;
  for (std::uint32_t s = 1; s < (1U << n); s += 2) {
    if (!ends[s]) continue;
    for (int w = 1; w < n; ++w) {
      if ((s >> w) & 1U) continue;
      if (closed[w] & ends[s]) ends[s | (1U << w)] |= 1U << w;
    }
  }
  return (ends[(1U << n) - 1] & closed[0] & ~1U) != 0;
}

/// Fewest leaves over all spanning trees (connected g, n <= 11). A tree with L >= 2 leaves is a
/// leaf-to-leaf path plus L - 2 further paths, each hanging from the part already built by an
/// edge at one of its ends; the search minimizes the number of hanging paths.
inline int oracle_min_leaf(const Graph& g) {
  const int n = g.n();
  if (n > 11) throw OracleLimit("min-leaf oracle supports n <= 11");
  if (n <= 1) return 0;
  auto ends = detail::path_ends(g);
  std::vector<std::uint32_t> nbr_of_set(1U << n, 0);
  auto closed = detail::closed_masks(g);
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::uint32_t acc = 0;
    for (std::uint32_t r = ends[s]; r; r &= r - 1) acc |= closed[__builtin_ctz(r)];
    nbr_of_set[s] = acc;
  }
  const std::uint32_t full = (1U << n) - 1;
  const int inf = 1 << 20;
  std::vector<int> best(1U << n, inf);
  for (std::uint32_t s = 1; s <= full; ++s)
    if (__builtin_popcount(s) >= 2 && ends[s]) best[s] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (best[s] >= inf) continue;
    const std::uint32_t rest = full & ~s;
    for (std::uint32_t r = rest; r; r = (r - 1) & rest) {
      if (!ends[r] || !(nbr_of_set[r] & s)) continue;
      best[s | r] = std::min(best[s | r], best[s] + 1);
    }
  }
  if (best[full] >= inf) throw std::invalid_argument("graph is disconnected");
  return best[full] + 2;
}

}  // namespace ncpath::testkit
