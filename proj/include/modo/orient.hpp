#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "detail/refiner.hpp"
#include "mdecomp.hpp"

namespace modo {

namespace detail {

inline std::vector<int> ordered_refinement(const Graph& q, int start, bool complement) {
  Refiner r(q, complement ? Refiner::Mode::OrderedComplement : Refiner::Mode::Ordered);
  r.run(start);
  if (r.parts() != q.n()) return {};
  return r.order();
}

// Exact transitivity test of "a -> b iff rank[a] < rank[b]". Picks between
// word-parallel successor containment and a marked-neighbourhood walk.
inline bool transitive_by_rank(const Graph& q, const std::vector<int>& rank) {
  int k = q.n();
  double walk = 0;
  for (int v = 0; v < k; ++v) {
    double in = 0, out = 0;
    for (int w : q.adj(v)) (rank[w] < rank[v] ? in : out) += 1;
    walk += in * out;
  }
  int words = (k + 63) / 64;
  double bits = static_cast<double>(q.m()) * words;
  if (k <= 16384 && bits < walk) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) * words, 0);
    for (int v = 0; v < k; ++v)
      for (int w : q.adj(v)) row[static_cast<std::size_t>(rank[v]) * words + rank[w] / 64] |= 1ull << (rank[w] % 64);
    for (int e = 0; e < q.m(); ++e) {
      int a = rank[q.edge(e).first], b = rank[q.edge(e).second];
      if (a > b) std::swap(a, b);
      // successors of b must all be neighbours of a
      const std::uint64_t* rb = &row[static_cast<std::size_t>(b) * words];
      const std::uint64_t* ra = &row[static_cast<std::size_t>(a) * words];
      int w0 = (b + 1) / 64;
      for (int w = w0; w < words; ++w) {
        std::uint64_t bad = rb[w] & ~ra[w];
        if (w == w0) bad &= ~0ull << ((b + 1) % 64);
        if (bad) return false;
      }
    }
    return true;
  }
  std::vector<int> stamp(k, -1);
  for (int u = 0; u < k; ++u) {
    for (int w : q.adj(u)) stamp[w] = u;
    for (int v : q.adj(u)) {
      if (rank[v] < rank[u]) continue;
      for (int w : q.adj(v))
        if (rank[w] > rank[v] && stamp[w] != u) return false;
    }
  }
  return true;
}

}  // namespace detail

// Linear extension of one transitive orientation of a prime graph (of its
// complement when `complement` is set), as a vertex sequence. Found by two
// rounds of ordered vertex partitioning: the last vertex of the first round
// is extreme, the second round started there yields the extension. Empty
// when refinement stalls. The result is not verified here.
inline std::vector<int> prime_linear_extension(const Graph& q, bool complement = false) {
  if (q.n() <= 1) return std::vector<int>(q.n(), 0);
  auto first = detail::ordered_refinement(q, 0, complement);
  if (first.empty()) return {};
  return detail::ordered_refinement(q, first.back(), complement);
}

inline std::vector<int> ranks_of(const std::vector<int>& seq) {
  std::vector<int> r(seq.size());
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) r[seq[i]] = i;
  return r;
}

inline Orientation orientation_by_rank(const Graph& q, const std::vector<int>& rank) {
  Orientation o(q);
  for (int e = 0; e < q.m(); ++e) o.set_forward(e, rank[q.edge(e).first] < rank[q.edge(e).second]);
  return o;
}

// Ranks of the verified default orientation of a prime graph, or nullopt.
inline std::optional<std::vector<int>> prime_default_ranks(const Graph& q) {
  auto seq = prime_linear_extension(q);
  if (seq.empty()) return std::nullopt;
  auto r = ranks_of(seq);
  if (!detail::transitive_by_rank(q, r)) return std::nullopt;
  return r;
}

inline Outcome<Orientation> prime_default_orientation(const Graph& q) {
  auto r = prime_default_ranks(q);
  if (!r) return Infeasible{"not-comparability", "prime graph has no transitive orientation"};
  return orientation_by_rank(q, *r);
}

// Default ranks for every PRIME node; nullopt-style failure names the node.
inline Outcome<NodeRanks> default_ranks(const MDTree& t) {
  NodeRanks ranks(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) {
    if (t.kind(mu) != NodeKind::Prime) continue;
    auto r = prime_default_ranks(t.quotient(mu));
    if (!r) return Infeasible{"not-comparability", "prime node " + std::to_string(mu)};
    ranks[mu] = std::move(*r);
  }
  return ranks;
}

// Complement-side ranks for PRIME nodes (not verified; a permutation diagram
// check certifies them downstream).
inline Outcome<NodeRanks> complement_ranks(const MDTree& t) {
  NodeRanks ranks(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) {
    if (t.kind(mu) != NodeKind::Prime) continue;
    auto seq = prime_linear_extension(t.quotient(mu), true);
    if (seq.empty()) return Infeasible{"not-cocomparability", "prime node " + std::to_string(mu)};
    ranks[mu] = ranks_of(seq);
  }
  return ranks;
}

// Orientation of G choosing, at every node with edges, a -> b iff rank[a] < rank[b].
// A node with no ranks orders its children by index.
inline Orientation orientation_by_node_ranks(const MDTree& t, const NodeRanks& ranks) {
  const Graph& g = t.graph();
  Orientation o(g);
  for (int e = 0; e < g.m(); ++e) {
    const auto& r = ranks[t.rep_node(e)];
    auto [ca, cb] = t.rep_children(e);
    o.set_forward(e, r.empty() ? ca < cb : r[ca] < r[cb]);
  }
  return o;
}

inline bool recognize_comparability(const Graph& g) {
  if (g.n() == 0) return true;
  MDTree t(g);
  return default_ranks(t).ok();
}

// Per-node quotient partial orientation: dir[mu][qe] is +1 when quotient edge
// qe = {x<y} is oriented x -> y, -1 for y -> x, 0 when free.
struct QuotientPartial {
  std::vector<std::vector<std::int8_t>> dir;
};

inline Outcome<QuotientPartial> lift_partial(const MDTree& t, const PartialOrientation& w) {
  const Graph& g = t.graph();
  QuotientPartial p;
  p.dir.resize(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) p.dir[mu].assign(t.quotient(mu).m(), 0);
  std::vector<std::vector<int>> why(t.size());
  for (auto [tail, head] : w.arcs()) {
    int e = g.edge_id(tail, head);
    int mu = t.rep_node(e), qe = t.rep_qedge(e);
    auto [ca, cb] = t.rep_children(e);
    int from = tail == g.edge(e).first ? ca : cb;
    std::int8_t d = from == t.quotient(mu).edge(qe).first ? 1 : -1;
    auto& slot = p.dir[mu][qe];
    if (slot == -d) {
      auto [a, b] = g.edge(why[mu][qe]);
      return Infeasible{"conflict", g.id(tail) + "->" + g.id(head) + " against an opposite arc on " +
                                        g.id(a) + "-" + g.id(b)};
    }
    if (slot == 0) {
      if (why[mu].empty()) why[mu].assign(t.quotient(mu).m(), -1);
      why[mu][qe] = e;
    }
    slot = d;
  }
  return p;
}

// Ranks per node extending the lifted constraints, using `defaults` for PRIME nodes.
inline Outcome<NodeRanks> extend_ranks(const MDTree& t, const NodeRanks& defaults,
                                       const QuotientPartial& p) {
  NodeRanks ranks(t.size());
  for (int mu = t.n(); mu < t.size(); ++mu) {
    const Graph& q = t.quotient(mu);
    int k = q.n();
    switch (t.kind(mu)) {
      case NodeKind::Empty:
      case NodeKind::Leaf: break;
      case NodeKind::Complete: {
        std::vector<std::vector<int>> out(k);
        std::vector<int> indeg(k, 0);
        for (int e = 0; e < q.m(); ++e) {
          if (!p.dir[mu][e]) continue;
          auto [x, y] = q.edge(e);
          if (p.dir[mu][e] < 0) std::swap(x, y);
          out[x].push_back(y);
          ++indeg[y];
        }
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int x = 0; x < k; ++x)
          if (!indeg[x]) ready.push(x);
        auto& r = ranks[mu];
        r.assign(k, -1);
        int next = 0;
        while (!ready.empty()) {
          int x = ready.top();
          ready.pop();
          r[x] = next++;
          for (int y : out[x])
            if (--indeg[y] == 0) ready.push(y);
        }
        if (next < k) return Infeasible{"cycle", "complete node " + std::to_string(mu)};
        break;
      }
      case NodeKind::Prime: {
        const auto& d = defaults[mu];
        bool fits = true, fits_rev = true;
        for (int e = 0; e < q.m() && (fits || fits_rev); ++e) {
          if (!p.dir[mu][e]) continue;
          auto [x, y] = q.edge(e);
          bool along = (d[x] < d[y]) == (p.dir[mu][e] > 0);
          (along ? fits_rev : fits) = false;
        }
        if (!fits && !fits_rev) return Infeasible{"prime-mismatch", "prime node " + std::to_string(mu)};
        auto& r = ranks[mu];
        r = d;
        if (!fits)
          for (auto& x : r) x = k - 1 - x;
        break;
      }
    }
  }
  return ranks;
}

inline Outcome<Orientation> orient_ext(const MDTree& t, const NodeRanks& defaults,
                                       const PartialOrientation& w) {
  auto p = lift_partial(t, w);
  if (!p) return p.why();
  auto ranks = extend_ranks(t, defaults, *p);
  if (!ranks) return ranks.why();
  Orientation o = orientation_by_node_ranks(t, *ranks);
  MODO_CHECK(contains(o, w), "orient_ext result must contain the partial orientation");
  return o;
}

inline Outcome<Orientation> orient_ext(const Graph& g, const PartialOrientation& w) {
  if (g.n() == 0) return Orientation(g);
  MDTree t(g);
  auto d = default_ranks(t);
  if (!d) return d.why();
  return orient_ext(t, *d, w);
}

}  // namespace modo
