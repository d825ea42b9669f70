#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "ncpath/nc_model.hpp"
#include "ncpath/recognition.hpp"

namespace ncpath {

enum class DomKind { MDS, MIDS, MCDS, Steiner };

inline std::string_view to_string(DomKind k) {
  switch (k) {
    case DomKind::MDS: return "mds";
    case DomKind::MIDS: return "mids";
    case DomKind::MCDS: return "mcds";
    case DomKind::Steiner: return "steiner";
  }
  return "?";
}

struct DomResult {
  DomKind kind = DomKind::MIDS;
  std::vector<Vertex> vertices;  // ascending
  bool complete_graph = false;
  int size() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

using Cost = std::int64_t;
inline constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// How a piece sees one of its terminals: it must put a vertex on it, the terminal counts as
// dominated anyway, or nothing is assumed.
enum class Mode : std::uint8_t { Force = 0, PreHit = 1, Forbid = 2 };
// Terminal states: hit from its own subtree, hit from above, or not hit at all.
enum class State : std::uint8_t { A = 0, B = 1, C = 2 };

inline State child_state(Mode m) {
  return m == Mode::Force ? State::B : (m == Mode::PreHit ? State::A : State::C);
}

struct Span {
  int l, r;
  Vertex v;
};

// Interval domination on one chain with positions 0..last, top at 0.
inline std::vector<Vertex> chain_greedy(const std::vector<Span>& by_l, const std::vector<Span>& by_r, int last,
                                        Mode top, Mode bottom) {
  std::vector<Vertex> chosen;
  int reach = -1;
  const Span* forced_top = nullptr;
  const Span* forced_bottom = nullptr;
  if (top == Mode::Force) {
    for (const Span& s : by_l)
      if (s.l == 0 && (!forced_top || s.r > forced_top->r || (s.r == forced_top->r && s.v < forced_top->v)))
        forced_top = &s;
    chosen.push_back(forced_top->v);
    reach = forced_top->r;
  }
  if (bottom == Mode::Force && !(forced_top && forced_top->r == last)) {
    for (const Span& s : by_l)
      if (s.r == last && (!forced_bottom || s.l < forced_bottom->l || (s.l == forced_bottom->l && s.v < forced_bottom->v)))
        forced_bottom = &s;
    chosen.push_back(forced_bottom->v);
  }
  const bool top_free = top != Mode::Forbid;
  const bool bottom_free = bottom != Mode::Forbid;
  std::size_t next = 0;
  const Span* best = nullptr;
  for (const Span& w : by_r) {
    if ((top_free && w.l == 0) || (bottom_free && w.r == last)) continue;
    if (forced_bottom && forced_bottom->l <= w.r) reach = std::max(reach, forced_bottom->r);
    if (reach >= w.l) continue;
    while (next < by_l.size() && by_l[next].l <= w.r) {
      const Span& c = by_l[next++];
      if (!best || c.r > best->r) best = &c;
    }
    chosen.push_back(best->v);
    reach = std::max(reach, best->r);
  }
  return chosen;
}

class DominationDp {
 public:
  DominationDp(const Graph& g, const NcModel& m) : g_(g), m_(m) {}

  std::vector<Vertex> solve() {
    const int nodes = m_.tree.node_count();
    terminal_pieces_.assign(nodes, {});
    for (int p = 0; p < static_cast<int>(m_.pieces.size()); ++p)
      for (int x : piece_terminals(p)) terminal_pieces_[x].push_back(p);
    int root = -1;
    for (int x = 0; x < nodes && root < 0; ++x)
      if (m_.node_class[x] == NodeClass::Terminal) root = x;

    // Orient pieces away from the root.
    const int pieces = static_cast<int>(m_.pieces.size());
    top_.assign(pieces, -1);
    children_.assign(nodes, {});
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int t = order[i];
      for (int p : terminal_pieces_[t]) {
        if (top_[p] >= 0) continue;
        top_[p] = t;
        children_[t].push_back(p);
        for (int y : piece_terminals(p))
          if (y != t) order.push_back(y);
      }
    }
    value_.assign(nodes, {kInf, kInf, kInf});
    a_choice_.assign(nodes, -2);
    piece_value_.assign(pieces, {kInf, kInf, kInf});
    chain_bottom_.assign(pieces, {Mode::Forbid, Mode::Forbid, Mode::Forbid});
    star_choice_.assign(pieces, {});
    prepare_chains();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (int p : children_[*it]) evaluate_piece(p);
      evaluate_terminal(*it);
    }
    std::vector<Vertex> out;
    const auto& v = value_[root];
    std::vector<std::pair<int, State>> work{{root, v[0] <= v[2] ? State::A : State::C}};
    while (!work.empty()) {
      auto [t, s] = work.back();
      work.pop_back();
      const int forced = s == State::A ? a_choice_[t] : -2;
      if (forced == -1) out.push_back(private_vertices(m_, t).front());
      for (int p : children_[t]) {
        const Mode mode = s == State::C ? Mode::Forbid : (p == forced ? Mode::Force : Mode::PreHit);
        emit_piece(p, mode, out, work);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct StarChoice {
    std::array<int, 3> picks{{-1, -1, -1}};  // classes contributing one vertex
    std::array<State, 3> states{};           // per star neighbor, by index in nodes[1..3]
  };

  std::vector<int> piece_terminals(int p) const {
    const auto& pc = m_.pieces[p];
    if (pc.kind == PieceKind::TerminalPath) return {pc.nodes.front(), pc.nodes.back()};
    return {pc.nodes[1], pc.nodes[2], pc.nodes[3]};
  }

  // Intervals of each chain, flipped so that the top terminal sits at position 0.
  void prepare_chains() {
    const int pieces = static_cast<int>(m_.pieces.size());
    by_l_.assign(pieces, {});
    by_r_.assign(pieces, {});
    for (int p = 0; p < pieces; ++p) {
      if (m_.pieces[p].kind != PieceKind::TerminalPath) continue;
      const AuxGraph& a = m_.aux[p];
      const int last = a.k - 1;
      const bool flip = m_.pieces[p].nodes.front() != top_[p];
      auto& spans = by_l_[p];
      for (int i = 1; i + 1 < a.graph.n(); ++i)
        spans.push_back(flip ? Span{last - a.r[i], last - a.l[i], a.vertex_map[i]} : Span{a.l[i], a.r[i], a.vertex_map[i]});
      std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return std::tie(x.l, x.r, x.v) < std::tie(y.l, y.r, y.v); });
      by_r_[p] = spans;
      std::sort(by_r_[p].begin(), by_r_[p].end(), [](const Span& x, const Span& y) { return std::tie(x.r, x.l, x.v) < std::tie(y.r, y.l, y.v); });
    }
  }

  int chain_bottom_terminal(int p) const {
    const auto& z = m_.pieces[p].nodes;
    return z.front() == top_[p] ? z.back() : z.front();
  }

  void evaluate_piece(int p) {
    if (m_.pieces[p].kind == PieceKind::TerminalPath) {
      const int b = chain_bottom_terminal(p);
      const int last = m_.aux[p].k - 1;
      for (Mode top : {Mode::Force, Mode::PreHit, Mode::Forbid})
        for (Mode bottom : {Mode::Force, Mode::PreHit, Mode::Forbid}) {
          const Cost below = value_[b][static_cast<int>(child_state(bottom))];
          if (below >= kInf) continue;
          const Cost c = static_cast<Cost>(chain_greedy(by_l_[p], by_r_[p], last, top, bottom).size()) + below;
          auto& slot = piece_value_[p][static_cast<int>(top)];
          if (c < slot) {
            slot = c;
            chain_bottom_[p][static_cast<int>(top)] = bottom;
          }
        }
      return;
    }
    const auto& nodes = m_.pieces[p].nodes;
    auto cls = junction_classes(m_, m_.pieces[p]);
    // Class c touches neighbors c and (c + 1) % 3 (indices into nodes[1..3]).
    int top_index = 0;
    for (int i = 0; i < 3; ++i)
      if (nodes[i + 1] == top_[p]) top_index = i;
    std::vector<std::vector<int>> subsets{{}};
    for (int c = 0; c < 3; ++c)
      if (!cls[c].empty()) subsets.push_back({c});
    for (int c = 0; c < 3; ++c)
      for (int d = c + 1; d < 3; ++d)
        if (!cls[c].empty() && !cls[d].empty()) subsets.push_back({c, d});
    for (Mode top : {Mode::Force, Mode::PreHit, Mode::Forbid}) {
      Cost best = kInf;
      StarChoice best_choice;
      for (const auto& s : subsets) {
        std::array<bool, 3> hit{};
        for (int c : s) hit[c] = hit[(c + 1) % 3] = true;
        if (top == Mode::Force && !hit[top_index]) continue;
        // Each child either is hit by the star, or picks state A (assumed hit) or C.
        std::array<int, 3> options{1, 1, 1};
        for (int i = 0; i < 3; ++i)
          if (i != top_index && !hit[i]) options[i] = 2;
        for (int mask = 0; mask < options[0] * options[1] * options[2]; ++mask) {
          std::array<bool, 3> assumed = hit;
          std::array<State, 3> st{};
          Cost c = static_cast<Cost>(s.size());
          int rest = mask;
          for (int i = 0; i < 3; ++i) {
            const int pick = rest % options[i];
            rest /= options[i];
            if (i == top_index) {
              assumed[i] = hit[i] || top == Mode::PreHit;
              continue;
            }
            st[i] = hit[i] ? State::B : (pick == 0 ? State::A : State::C);
            if (st[i] == State::A) assumed[i] = true;
            const Cost v = value_[nodes[i + 1]][static_cast<int>(st[i])];
            c = (v >= kInf || c >= kInf) ? kInf : c + v;
          }
          if (c >= kInf) continue;
          if (s.empty()) {
            bool ok = true;
            for (int k = 0; k < 3; ++k)
              if (!cls[k].empty() && !assumed[k] && !assumed[(k + 1) % 3]) ok = false;
            if (!ok) continue;
          }
          if (c < best) {
            best = c;
            best_choice = StarChoice{};
            for (std::size_t j = 0; j < s.size(); ++j) best_choice.picks[j] = s[j];
            best_choice.states = st;
          }
        }
      }
      piece_value_[p][static_cast<int>(top)] = best;
      star_choice_[p][static_cast<int>(top)] = best_choice;
    }
  }

  void evaluate_terminal(int t) {
    const bool has_private = !private_vertices(m_, t).empty();
    Cost pre = 0, forbid = 0;
    for (int p : children_[t]) {
      pre += piece_value_[p][1];
      forbid = std::min(kInf, forbid + piece_value_[p][2]);
    }
    auto& v = value_[t];
    v[1] = pre;
    v[2] = has_private ? kInf : forbid;
    v[0] = kInf;
    for (int p : children_[t]) {
      const Cost c = pre - piece_value_[p][1] + piece_value_[p][0];
      if (c < v[0]) {
        v[0] = c;
        a_choice_[t] = p;
      }
    }
    if (has_private && 1 + pre < v[0]) {
      v[0] = 1 + pre;
      a_choice_[t] = -1;
    }
  }

  void emit_piece(int p, Mode mode, std::vector<Vertex>& out, std::vector<std::pair<int, State>>& work) {
    if (m_.pieces[p].kind == PieceKind::TerminalPath) {
      const Mode bottom = chain_bottom_[p][static_cast<int>(mode)];
      for (Vertex v : chain_greedy(by_l_[p], by_r_[p], m_.aux[p].k - 1, mode, bottom)) out.push_back(v);
      work.emplace_back(chain_bottom_terminal(p), child_state(bottom));
      return;
    }
    const StarChoice& ch = star_choice_[p][static_cast<int>(mode)];
    auto cls = junction_classes(m_, m_.pieces[p]);
    for (int c : ch.picks)
      if (c >= 0) out.push_back(cls[c].front());
    for (int i = 0; i < 3; ++i)
      if (m_.pieces[p].nodes[i + 1] != top_[p]) work.emplace_back(m_.pieces[p].nodes[i + 1], ch.states[i]);
  }

  const Graph& g_;
  const NcModel& m_;
  std::vector<std::vector<int>> terminal_pieces_, children_;
  std::vector<int> top_, a_choice_;
  std::vector<std::array<Cost, 3>> value_, piece_value_;
  std::vector<std::array<Mode, 3>> chain_bottom_;
  std::vector<std::array<StarChoice, 3>> star_choice_;
  std::vector<std::vector<Span>> by_l_, by_r_;
};

// Swaps dominating vertices that see another one for a private neighbor until the set is
// independent. Size never changes; on claw-free graphs a private neighbor always exists.
inline std::vector<Vertex> make_independent(const Graph& g, std::vector<Vertex> d) {
  const int n = g.n();
  std::vector<int> cnt(n, 0);
  std::vector<char> in(n, 0);
  auto add = [&](Vertex v, int delta) {
    cnt[v] += delta;
    for (Vertex w : g.neighbors(v)) cnt[w] += delta;
  };
  for (Vertex v : d) {
    in[v] = 1;
    add(v, 1);
  }
  std::vector<Vertex> work = d;
  while (!work.empty()) {
    const Vertex v = work.back();
    work.pop_back();
    if (!in[v] || cnt[v] < 2) continue;
    Vertex w = -1;
    for (Vertex x : g.neighbors(v))
      if (cnt[x] == 1) {
        w = x;
        break;
      }
    if (w < 0) throw std::logic_error("dominating set is not minimal");
    in[v] = 0;
    add(v, -1);
    in[w] = 1;
    add(w, 1);
    for (Vertex x : g.neighbors(w))
      if (in[x]) work.push_back(x);
    work.push_back(w);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace detail

/// Minimum dominating set that is also independent, from a model of g.
inline DomResult mids(const Graph& g, const NcModel& m) {
  detail::DominationDp dp(g, m);
  return DomResult{DomKind::MIDS, detail::make_independent(g, dp.solve()), false};
}

inline DomResult mids(const Graph& g) { return mids(g, nc_model_of(g)); }

/// Minimum dominating set; on this class the independent one is minimum as well.
inline DomResult mds(const Graph& g) {
  DomResult r = mids(g);
  r.kind = DomKind::MDS;
  return r;
}

/// Every host edge has a vertex of S on both of its ends.
inline bool covered_edge_check(const Graph& g, const NcModel& m, std::span<const Vertex> s) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : s) in[v] = 1;
  for (std::size_t e = 0; e < m.tree.edges.size(); ++e) {
    bool hit = false;
    for (Vertex v : m.tree.separators[e])
      if (in[v]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

namespace detail {

// Interior of a shortest u_1-u_k path, ties broken toward lower ids.
inline std::vector<Vertex> aux_shortest_inner(const AuxGraph& a) {
  const int n = a.graph.n();
  std::vector<int> parent(n, -2);
  std::vector<int> queue{a.u1()};
  parent[a.u1()] = -1;
  for (std::size_t i = 0; i < queue.size() && parent[a.uk()] == -2; ++i)
    for (int w : a.graph.neighbors(queue[i]))
      if (parent[w] == -2) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
  if (parent[a.uk()] == -2) throw std::logic_error("aux graph is disconnected");
  std::vector<Vertex> inner;
  for (int x = parent[a.uk()]; x != a.u1(); x = parent[x]) inner.push_back(a.vertex_map[x]);
  std::reverse(inner.begin(), inner.end());
  return inner;
}

}  // namespace detail

/// Minimum connected dominating set assembled piece by piece.
inline DomResult mcds(const Graph&, const NcModel& m) {
  DomResult r{DomKind::MCDS, {}, false};
  if (m.pieces.empty()) {
    r.vertices = {0};
    r.complete_graph = true;
    return r;
  }
  for (std::size_t p = 0; p < m.pieces.size(); ++p) {
    const auto& pc = m.pieces[p];
    if (pc.kind == PieceKind::JunctionStar) {
      auto cls = junction_classes(m, pc);
      std::vector<Vertex> reps;
      for (const auto& c : cls)
        if (!c.empty()) reps.push_back(c.front());
      std::sort(reps.begin(), reps.end());
      r.vertices.insert(r.vertices.end(), reps.begin(), reps.begin() + 2);
    } else if (pc.nodes.size() == 2) {
      for (auto arc : m.tree.adj[pc.nodes[0]])
        if (arc.to == pc.nodes[1]) r.vertices.push_back(m.tree.separators[arc.edge][0]);
    } else {
      auto inner = detail::aux_shortest_inner(m.aux[p]);
      r.vertices.insert(r.vertices.end(), inner.begin(), inner.end());
    }
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  r.vertices.erase(std::unique(r.vertices.begin(), r.vertices.end()), r.vertices.end());
  return r;
}

inline DomResult mcds(const Graph& g) { return mcds(g, nc_model_of(g)); }

/// Minimum vertex set that contains X and induces a connected subgraph.
inline DomResult steiner_tree(const Graph& g, const NcModel& m, std::span<const Vertex> terminals) {
  if (terminals.empty()) throw GraphError("steiner tree needs at least one terminal vertex");
  for (Vertex v : terminals)
    if (v < 0 || v >= g.n()) throw GraphError("terminal vertex " + std::to_string(v) + " out of range");
  const auto& t = m.tree;
  const int nodes = t.node_count();
  std::vector<char> is_x(g.n(), 0);
  for (Vertex v : terminals) is_x[v] = 1;
  // Root the host at a node of the first terminal vertex and find the hull of all their paths.
  const int root = t.occ[terminals[0]][0];
  std::vector<int> parent(nodes, -2), parent_edge(nodes, -1), order{root};
  parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto arc : t.adj[order[i]])
      if (parent[arc.to] == -2) {
        parent[arc.to] = order[i];
        parent_edge[arc.to] = arc.edge;
        order.push_back(arc.to);
      }
  std::vector<int> marked(nodes, 0);
  std::vector<char> covered(t.edges.size(), 0);
  for (Vertex v : terminals)
    for (int x : t.occ[v]) {
      marked[x] = 1;
      if (parent[x] >= 0 && std::binary_search(t.occ[v].begin(), t.occ[v].end(), parent[x]))
        covered[parent_edge[x]] = 1;
    }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0 && marked[*it]) marked[parent[*it]] = 1;
  // Uncovered hull edges grouped by piece.
  std::vector<std::vector<int>> need(m.pieces.size());
  for (int x : order)
    if (parent[x] >= 0 && marked[x] && !covered[parent_edge[x]]) {
      const EdgeSlot s = m.edge_piece[parent_edge[x]];
      need[s.piece].push_back(s.position);
    }
  std::vector<Vertex> out(terminals.begin(), terminals.end());
  for (std::size_t p = 0; p < m.pieces.size(); ++p) {
    auto& positions = need[p];
    if (positions.empty()) continue;
    std::sort(positions.begin(), positions.end());
    if (m.pieces[p].kind == PieceKind::JunctionStar) {
      auto cls = junction_classes(m, m.pieces[p]);
      std::array<bool, 3> want{};
      for (int q : positions) want[q] = true;
      // Class c covers star edges c and (c + 1) % 3.
      int best_c = -1;
      for (int c = 0; c < 3; ++c)
        if (!cls[c].empty() && want[c] && want[(c + 1) % 3]) best_c = best_c < 0 ? c : best_c;
      if (positions.size() == 3) {
        int first = -1;
        for (int c = 0; c < 3 && first < 0; ++c)
          if (!cls[c].empty()) first = c;
        out.push_back(cls[first].front());
        for (int c = 0; c < 3; ++c)
          if (c != first && !cls[c].empty()) {
            out.push_back(cls[c].front());
            break;
          }
      } else if (best_c >= 0) {
        out.push_back(cls[best_c].front());
      } else {
        for (int q : positions) {
          Vertex pick = -1;
          for (int c : {q, (q + 2) % 3})
            if (!cls[c].empty() && (pick < 0 || cls[c].front() < pick)) pick = cls[c].front();
          out.push_back(pick);
        }
      }
      continue;
    }
    // Point cover on the chain: edge e joins positions e and e + 1.
    const AuxGraph& a = m.aux[p];
    std::size_t next = 0;
    int reach = -1;
    int best = -1;
    for (int e : positions) {
      if (reach >= e + 1) continue;
      while (next < a.order.size() && a.l[a.order[next]] <= e) {
        const int c = a.order[next++];
        if (c == a.u1() || c == a.uk()) continue;
        if (best < 0 || a.r[c] > a.r[best]) best = c;
      }
      out.push_back(a.vertex_map[best]);
      reach = a.r[best];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return DomResult{DomKind::Steiner, std::move(out), false};
}

inline DomResult steiner_tree(const Graph& g, std::span<const Vertex> terminals) {
  return steiner_tree(g, nc_model_of(g), terminals);
}

}  // namespace ncpath
