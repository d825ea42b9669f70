#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ncpath/chordal.hpp"
#include "ncpath/graph.hpp"

namespace ncpath {

enum class WitnessKind { Hole, Claw, ThreeSun, Net };

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Hole: return "hole";
    case WitnessKind::Claw: return "claw";
    case WitnessKind::ThreeSun: return "3-sun";
    case WitnessKind::Net: return "net";
  }
  return "?";
}

inline WitnessKind witness_kind_from_string(std::string_view s) {
  if (s == "hole") return WitnessKind::Hole;
  if (s == "claw") return WitnessKind::Claw;
  if (s == "3-sun") return WitnessKind::ThreeSun;
  if (s == "net") return WitnessKind::Net;
  throw GraphError("unknown witness kind '" + std::string(s) + "'");
}

/// Forbidden induced subgraph.
/// Layouts: Hole = cycle order; Claw = center then three leaves;
/// ThreeSun = inner triangle i0,i1,i2 then outer o0,o1,o2 with o_j adjacent to i_j and i_{j+1 mod 3};
/// Net = triangle t0,t1,t2 then pendants p0,p1,p2 with p_j adjacent to t_j.
struct Witness {
  WitnessKind kind = WitnessKind::Claw;
  std::vector<Vertex> vertices;
  Vertex center = -1;  // claws only
};

namespace detail {

inline std::vector<std::pair<int, int>> pattern_edges(WitnessKind k) {
  switch (k) {
    case WitnessKind::Claw: return {{0, 1}, {0, 2}, {0, 3}};
    case WitnessKind::Net: return {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
    case WitnessKind::ThreeSun:
      return {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
    case WitnessKind::Hole: break;
  }
  return {};
}

}  // namespace detail

/// Bit-exact induced-subgraph check of the witness against g.
inline bool is_valid_witness(const Graph& g, const Witness& w) {
  if (w.kind == WitnessKind::Hole) return is_hole(g, w.vertices);
  const std::size_t k = w.kind == WitnessKind::Claw ? 4 : 6;
  if (w.vertices.size() != k) return false;
  for (Vertex v : w.vertices)
    if (v < 0 || v >= g.n()) return false;
  std::vector<Vertex> s = w.vertices;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (w.kind == WitnessKind::Claw && w.center != w.vertices[0]) return false;
  std::array<std::array<bool, 6>, 6> want{};
  for (auto [a, b] : detail::pattern_edges(w.kind)) want[a][b] = want[b][a] = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(w.vertices[i], w.vertices[j]) != want[i][j]) return false;
  return true;
}

}  // namespace ncpath
