#pragma once

// Permutation diagrams: two lines carrying the same vertices, u and v
// adjacent iff their relative order differs between the lines.
//
// A diagram of G is the same thing as one diagram per node of the canonical
// tree: COMPLETE nodes reverse their children between the lines, EMPTY nodes
// keep them, and a PRIME quotient has exactly four diagrams, obtained from a
// default one by reversing both lines and/or swapping them. The default of a
// prime quotient combines its default orientation (edges, top order) with a
// complement orientation (non-edges, both lines).

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "mdecomp.hpp"
#include "orient.hpp"
#include "simorient.hpp"
#include "twosat.hpp"

namespace modo {

class PermDiagram {
 public:
  PermDiagram() = default;
  PermDiagram(std::vector<int> top, std::vector<int> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.size() != bottom_.size()) throw input_error("diagram lines differ in length");
    int hi = -1;
    for (int v : top_) {
      if (v < 0) throw input_error("negative vertex in diagram");
      hi = std::max(hi, v);
    }
    tpos_.assign(hi + 1, -1);
    bpos_.assign(hi + 1, -1);
    for (int i = 0; i < size(); ++i) {
      if (tpos_[top_[i]] >= 0) throw input_error("vertex repeated on the top line");
      tpos_[top_[i]] = i;
    }
    for (int i = 0; i < size(); ++i) {
      int v = bottom_[i];
      if (v < 0 || v > hi || tpos_[v] < 0) throw input_error("lines carry different vertices");
      if (bpos_[v] >= 0) throw input_error("vertex repeated on the bottom line");
      bpos_[v] = i;
    }
  }

  // Top = bottom = order.
  static PermDiagram parallel(const std::vector<int>& order) { return {order, order}; }
  // Bottom is the reversal of top.
  static PermDiagram crossed(const std::vector<int>& order) { return {order, {order.rbegin(), order.rend()}}; }

  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }
  int size() const { return static_cast<int>(top_.size()); }
  bool contains(int v) const { return v >= 0 && v < static_cast<int>(tpos_.size()) && tpos_[v] >= 0; }
  int top_pos(int v) const { return tpos_[v]; }
  int bottom_pos(int v) const { return bpos_[v]; }
  bool crosses(int u, int v) const { return (tpos_[u] < tpos_[v]) != (bpos_[u] < bpos_[v]); }

  PermDiagram reversed() const { return {{top_.rbegin(), top_.rend()}, {bottom_.rbegin(), bottom_.rend()}}; }
  PermDiagram swapped() const { return {bottom_, top_}; }

  // The diagram on the vertices with keep[v] set, relative orders unchanged.
  PermDiagram restricted(const std::vector<char>& keep) const {
    std::vector<int> t, b;
    for (int v : top_)
      if (v < static_cast<int>(keep.size()) && keep[v]) t.push_back(v);
    for (int v : bottom_)
      if (v < static_cast<int>(keep.size()) && keep[v]) b.push_back(v);
    return {std::move(t), std::move(b)};
  }
  // Vertex v renamed to to[v].
  PermDiagram renamed(const std::vector<int>& to) const {
    std::vector<int> t, b;
    for (int v : top_) t.push_back(to[v]);
    for (int v : bottom_) b.push_back(to[v]);
    return {std::move(t), std::move(b)};
  }

  friend bool operator==(const PermDiagram& a, const PermDiagram& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }
  friend bool operator<(const PermDiagram& a, const PermDiagram& b) {
    return a.top_ != b.top_ ? a.top_ < b.top_ : a.bottom_ < b.bottom_;
  }

 private:
  std::vector<int> top_, bottom_;
  std::vector<int> tpos_, bpos_;
};

// Number of crossing pairs.
inline long long crossings(const PermDiagram& d) {
  int n = d.size();
  std::vector<int> fen(n + 1, 0);
  long long out = 0;
  for (int i = 0; i < n; ++i) {
    int b = d.bottom_pos(d.top()[i]);
    int below = 0;
    for (int j = b + 1; j > 0; j -= j & -j) below += fen[j];
    out += i - below;
    for (int j = b + 1; j <= n; j += j & -j) ++fen[j];
  }
  return out;
}

// Graph realized by a diagram over vertices 0..n-1, in O(n log n + m).
inline Graph diagram_graph(const PermDiagram& d, std::vector<std::string> ids = {}) {
  int n = d.size();
  for (int v = 0; v < n; ++v)
    if (!d.contains(v)) throw input_error("diagram does not cover vertices 0.." + std::to_string(n - 1));
  std::vector<Edge> edges;
  std::vector<int> seen;  // bottom positions of later top vertices, sorted
  for (int i = n - 1; i >= 0; --i) {
    int u = d.top()[i], b = d.bottom_pos(u);
    auto at = std::lower_bound(seen.begin(), seen.end(), b);
    for (auto it = seen.begin(); it != at; ++it) edges.emplace_back(u, d.bottom()[*it]);
    seen.insert(at, b);
  }
  if (ids.empty()) return Graph::from_edges(n, edges);
  return Graph::with_ids(n, edges, std::move(ids));
}

// d covers exactly V(g) and its crossings are the edges of g.
inline bool realizes(const PermDiagram& d, const Graph& g) {
  if (d.size() != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (!d.contains(v)) return false;
  for (const auto& [u, v] : g.edges())
    if (!d.crosses(u, v)) return false;
  return crossings(d) == g.m();
}

// d covers some W within V(g) and realizes G[W].
inline bool realizes_induced(const PermDiagram& d, const Graph& g) {
  long long inside = 0;
  for (int u : d.top()) {
    if (u >= g.n()) return false;
    for (int v : g.adj(u)) {
      if (v < u || !d.contains(v)) continue;
      if (!d.crosses(u, v)) return false;
      ++inside;
    }
  }
  return crossings(d) == inside;
}

namespace detail {

inline std::vector<int> order_by(const std::vector<int>& rank) {
  std::vector<int> seq(rank.size());
  for (std::size_t c = 0; c < rank.size(); ++c) seq[rank[c]] = static_cast<int>(c);
  return seq;
}

// Diagram of a prime quotient from ranks of an orientation of q (edges) and
// one of its complement (non-edges). Empty when the two do not combine into
// a diagram, i.e. one of them is not transitive.
inline std::vector<PermDiagram> prime_diagram(const Graph& q, const std::vector<int>& rank,
                                              const std::vector<int>& co_rank) {
  int k = q.n();
  std::vector<int> tp(k), bp(k);
  for (int a = 0; a < k; ++a) {
    int in = 0, out = 0, co_in = co_rank[a];
    for (int b : q.adj(a)) {
      (rank[b] < rank[a] ? in : out) += 1;
      if (co_rank[b] < co_rank[a]) --co_in;
    }
    tp[a] = in + co_in;
    bp[a] = out + co_in;
  }
  std::vector<int> top(k, -1), bottom(k, -1);
  for (int a = 0; a < k; ++a) {
    if (tp[a] < 0 || tp[a] >= k || top[tp[a]] >= 0) return {};
    if (bp[a] < 0 || bp[a] >= k || bottom[bp[a]] >= 0) return {};
    top[tp[a]] = a;
    bottom[bp[a]] = a;
  }
  return {PermDiagram(std::move(top), std::move(bottom))};
}

inline std::vector<int> identity(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace detail

// Per-node diagrams from ranks: `rank` orders COMPLETE and PRIME quotients
// (edges), `co_rank` orders EMPTY and PRIME quotients (non-edges). Missing
// ranks mean index order. Fails at a prime node whose ranks do not combine.
inline Outcome<std::vector<PermDiagram>> diagrams_from_ranks(const MDTree& t, const NodeRanks& rank,
                                                             const NodeRanks& co_rank) {
  std::vector<PermDiagram> out(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) {
    int k = static_cast<int>(t.children(mu).size());
    auto seq = [&](const NodeRanks& r) { return r[mu].empty() ? detail::identity(k) : detail::order_by(r[mu]); };
    switch (t.kind(mu)) {
      case NodeKind::Complete: out[mu] = PermDiagram::crossed(seq(rank)); break;
      case NodeKind::Empty: out[mu] = PermDiagram::parallel(seq(co_rank)); break;
      case NodeKind::Prime: {
        auto d = detail::prime_diagram(t.quotient(mu), rank[mu], co_rank[mu]);
        if (d.empty()) return Infeasible{"not-permutation", "prime node " + std::to_string(mu)};
        out[mu] = std::move(d[0]);
        break;
      }
      case NodeKind::Leaf: break;
    }
  }
  return out;
}

// Default diagram of every node; fails iff G is not a permutation graph.
inline Outcome<std::vector<PermDiagram>> default_diagrams(const MDTree& t) {
  auto r = default_ranks(t);
  if (!r) return Infeasible{"not-permutation", r.why().witness};
  auto c = complement_ranks(t);
  if (!c) return Infeasible{"not-permutation", c.why().witness};
  return diagrams_from_ranks(t, *r, *c);
}

// Splice per-node diagrams (over child indices) into a diagram of G.
inline PermDiagram compose_diagram(const MDTree& t, const std::vector<PermDiagram>& per_node) {
  if (static_cast<int>(per_node.size()) < t.size()) throw input_error("missing diagram for some node");
  for (int mu = t.n(); mu < t.size(); ++mu)
    if (!realizes(per_node[mu], t.quotient(mu)))
      throw input_error("diagram of node " + std::to_string(mu) + " does not realize its quotient");
  auto line = [&](bool top) {
    std::vector<int> out;
    out.reserve(t.n());
    std::vector<std::pair<int, int>> st{{t.root(), 0}};
    while (!st.empty()) {
      auto& [x, i] = st.back();
      if (t.is_leaf(x)) {
        out.push_back(x);
        st.pop_back();
        continue;
      }
      const auto& seq = top ? per_node[x].top() : per_node[x].bottom();
      if (i == static_cast<int>(seq.size())) {
        st.pop_back();
        continue;
      }
      int c = t.children(x)[seq[i++]];
      st.emplace_back(c, 0);
    }
    return out;
  };
  return {line(true), line(false)};
}

namespace detail {

// For every inner node, its children that carry a key, ordered by key.
// Keys are distinct among siblings and lie in [0, range).
inline std::vector<std::vector<int>> children_by_key(const MDTree& t, const std::vector<int>& key, int range) {
  std::vector<std::vector<int>> bucket(range);
  for (int x = 0; x < t.size(); ++x)
    if (x != t.root() && key[x] >= 0) bucket[key[x]].push_back(x);
  std::vector<std::vector<int>> out(t.size());
  for (const auto& b : bucket)
    for (int x : b) out[t.parent(x)].push_back(t.child_index(x));
  return out;
}

// Smallest position per node over the vertices d carries (-1 if none).
inline std::vector<int> first_positions(const MDTree& t, const PermDiagram& d, bool top) {
  std::vector<int> lo(t.size(), -1);
  for (int v = 0; v < t.n(); ++v)
    if (d.contains(v)) lo[v] = top ? d.top_pos(v) : d.bottom_pos(v);
  for (int x : t.postorder())
    for (int c : t.children(x))
      if (lo[c] >= 0 && (lo[x] < 0 || lo[c] < lo[x])) lo[x] = lo[c];
  return lo;
}

}  // namespace detail

// Inverse of compose_diagram: the diagram each quotient inherits from d.
inline std::vector<PermDiagram> decompose_diagram(const MDTree& t, const PermDiagram& d) {
  if (!realizes(d, t.graph())) throw input_error("diagram does not realize the graph");
  auto top = detail::children_by_key(t, detail::first_positions(t, d, true), t.n());
  auto bottom = detail::children_by_key(t, detail::first_positions(t, d, false), t.n());
  std::vector<PermDiagram> out(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) out[mu] = PermDiagram(std::move(top[mu]), std::move(bottom[mu]));
  return out;
}

inline Outcome<PermDiagram> permutation_diagram(const Graph& g) {
  if (g.n() == 0) return PermDiagram();
  MDTree t(g);
  auto d = default_diagrams(t);
  if (!d) return d.why();
  return compose_diagram(t, *d);
}

// Diagram of G whose restriction to the partial's vertices is the partial.
inline Outcome<PermDiagram> rep_ext_perm(const MDTree& t, const std::vector<PermDiagram>& defaults,
                                         const PermDiagram& partial) {
  const Graph& g = t.graph();
  for (int v : partial.top())
    if (v >= g.n()) throw input_error("partial diagram has vertices outside the graph");
  // crossings that contradict G[W] cannot be extended; that is a negative answer
  if (!realizes_induced(partial, g)) return Infeasible{"partial-mismatch", "partial diagram does not realize G[W]"};
  auto lo_t = detail::first_positions(t, partial, true);
  auto lo_b = detail::first_positions(t, partial, false);

  // Every node's represented vertices must already be consecutive on both lines.
  std::vector<int> count(t.size(), 0), hi_t(t.size(), -1), hi_b(t.size(), -1);
  for (int v : partial.top()) count[v] = 1, hi_t[v] = partial.top_pos(v), hi_b[v] = partial.bottom_pos(v);
  for (int x : t.postorder())
    for (int c : t.children(x)) {
      count[x] += count[c];
      hi_t[x] = std::max(hi_t[x], hi_t[c]);
      hi_b[x] = std::max(hi_b[x], hi_b[c]);
    }
  for (int x = t.n(); x < t.size(); ++x)
    if (count[x] > 0 && (hi_t[x] - lo_t[x] + 1 != count[x] || hi_b[x] - lo_b[x] + 1 != count[x]))
      return Infeasible{"not-consecutive", "node " + std::to_string(x)};

  auto want_t = detail::children_by_key(t, lo_t, std::max(1, partial.size()));
  auto want_b = detail::children_by_key(t, lo_b, std::max(1, partial.size()));
  auto follows = [](const std::vector<int>& seq, const std::vector<int>& pos) {
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (pos[seq[i - 1]] > pos[seq[i]]) return false;
    return true;
  };
  std::vector<PermDiagram> chosen(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) {
    int k = static_cast<int>(t.children(mu).size());
    const auto& wt = want_t[mu];
    const auto& wb = want_b[mu];
    if (t.kind(mu) == NodeKind::Prime) {
      const PermDiagram& d = defaults[mu];
      std::array<PermDiagram, 4> cand{d, d.reversed(), d.swapped(), d.swapped().reversed()};
      int hit = -1;
      for (int i = 0; i < 4 && hit < 0; ++i) {
        std::vector<int> tp(k), bp(k);
        for (int c = 0; c < k; ++c) tp[c] = cand[i].top_pos(c), bp[c] = cand[i].bottom_pos(c);
        if (follows(wt, tp) && follows(wb, bp)) hit = i;
      }
      if (hit < 0) return Infeasible{"prime-mismatch", "prime node " + std::to_string(mu)};
      chosen[mu] = cand[hit];
      continue;
    }
    // COMPLETE and EMPTY: represented children in the given order, the rest after.
    std::vector<int> seq = wt;
    std::vector<char> used(k, 0);
    for (int c : seq) used[c] = 1;
    for (int c = 0; c < k; ++c)
      if (!used[c]) seq.push_back(c);
    chosen[mu] = t.kind(mu) == NodeKind::Complete ? PermDiagram::crossed(seq) : PermDiagram::parallel(seq);
  }
  PermDiagram d = compose_diagram(t, chosen);
  std::vector<char> keep(g.n(), 0);
  for (int v : partial.top()) keep[v] = 1;
  MODO_CHECK(d.restricted(keep) == partial, "extension must restrict to the partial diagram");
  return d;
}

inline Outcome<PermDiagram> rep_ext_perm(const Graph& g, const PermDiagram& partial) {
  if (g.n() == 0) {
    if (partial.size() != 0) throw input_error("partial diagram has vertices outside the graph");
    return PermDiagram();
  }
  MDTree t(g);
  auto d = default_diagrams(t);
  if (!d) return d.why();
  return rep_ext_perm(t, *d, partial);
}

// Diagrams of every input that agree on the shared vertices. The edge side
// and the non-edge side are separate simultaneous orientation problems over
// the same trees; their formulas are solved jointly.
inline Outcome<std::vector<PermDiagram>> sunflower_perm(const SunflowerInstance& inst) {
  if (auto v = validate_sunflower(inst); !v) throw input_error(v.diagnostic);
  const Graph& h = inst.shared;
  std::size_t r = inst.inputs.size();

  std::vector<MDTree> trees;
  std::vector<NodeRanks> rank, co_rank;
  std::vector<std::vector<PermDiagram>> defaults;
  trees.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    trees.emplace_back(inst.inputs[i]);
    const MDTree& t = trees.back();
    auto a = default_ranks(t);
    auto b = complement_ranks(t);
    if (!a || !b) return Infeasible{"not-permutation", "input graph " + std::to_string(i)};
    auto d = diagrams_from_ranks(t, *a, *b);
    if (!d) return Infeasible{"not-permutation", "input graph " + std::to_string(i)};
    rank.push_back(std::move(*a));
    co_rank.push_back(std::move(*b));
    defaults.push_back(std::move(*d));
  }

  std::vector<PermDiagram> out;
  if (h.n() == 0) {
    for (std::size_t i = 0; i < r; ++i) out.push_back(compose_diagram(trees[i], defaults[i]));
    return out;
  }

  MDTree b(h);
  auto b_rank = default_ranks(b);
  auto b_co = complement_ranks(b);
  if (!b_rank || !b_co) return Infeasible{"not-permutation", "shared graph"};
  std::vector<std::vector<int>> embed;
  for (std::size_t i = 0; i < r; ++i) embed.push_back(inst.embedding(i));

  std::array<ConstrainedMD, 2> side;
  for (int co = 0; co < 2; ++co) {
    std::vector<ConstrainedMD> cs;
    for (std::size_t i = 0; i < r; ++i) {
      RestrictedMD rest(trees[i], co ? co_rank[i] : rank[i], embed[i], co != 0);
      cs.push_back(build_constraints(b, co ? *b_co : *b_rank, rest));
    }
    side[co] = intersect_constraints(cs);
    if (int mu = side[co].null_node(); mu >= 0)
      return Infeasible{"null-tree", std::string(co ? "complement " : "") + "node " + std::to_string(mu)};
  }
  Formula2 joint;
  int off_edge = joint.absorb(side[0].formula);
  int off_co = joint.absorb(side[1].formula);
  auto x = solve(joint);
  if (!x) return Infeasible{"unsat", "2-SAT formula unsatisfiable"};
  std::vector<bool> xe(x->begin() + off_edge, x->begin() + off_edge + side[0].formula.vars());
  std::vector<bool> xc(x->begin() + off_co, x->begin() + off_co + side[1].formula.vars());

  auto shared_nodes = diagrams_from_ranks(b, ranks_from_assignment(side[0], xe), ranks_from_assignment(side[1], xc));
  MODO_CHECK(shared_nodes.ok(), "shared diagram assembly failed");
  PermDiagram dh = compose_diagram(b, *shared_nodes);
  for (std::size_t i = 0; i < r; ++i) {
    auto d = rep_ext_perm(trees[i], defaults[i], dh.renamed(embed[i]));
    MODO_CHECK(d.ok(), "shared diagram failed to extend to input " + std::to_string(i));
    out.push_back(std::move(*d));
  }
  return out;
}

}  // namespace modo
