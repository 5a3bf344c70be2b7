#pragma once

// Circular permutation diagrams in cut form.
//
// Chords join an outer and an inner circle. Reading both circles clockwise
// from a reference ray gives two orders; a chord is "wrapped" when it
// crosses the ray. Two chords with the same wrap status cross iff their
// relative order differs between the circles; with different status, iff it
// agrees. Toggling a chord's wrap status (switching it) complements exactly
// that chord's adjacencies.
//
// Switching every neighbour of a vertex v isolates v, and a diagram with an
// isolated chord can be cut open next to it into a linear diagram. Both
// extension and simultaneous representation reduce to permutation diagrams
// this way.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "perm.hpp"

namespace modo {

class CPermDiagram {
 public:
  CPermDiagram() = default;
  CPermDiagram(std::vector<int> outer, std::vector<int> inner, std::vector<int> wrapped)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    (void)PermDiagram(outer_, inner_);  // same vertices, no repeats
    int span = 0;
    for (int v : outer_) span = std::max(span, v + 1);
    opos_.assign(span, -1);
    ipos_.assign(span, -1);
    wrap_.assign(span, 0);
    for (int i = 0; i < size(); ++i) opos_[outer_[i]] = i, ipos_[inner_[i]] = i;
    for (int v : wrapped) {
      if (!contains(v)) throw input_error("wrapped vertex " + std::to_string(v) + " is not in the diagram");
      wrap_[v] = 1;
    }
  }

  // A linear diagram drawn on the annulus without crossing the ray.
  static CPermDiagram closed(const PermDiagram& d) { return {d.top(), d.bottom(), {}}; }

  const std::vector<int>& outer() const { return outer_; }
  const std::vector<int>& inner() const { return inner_; }
  std::vector<int> wrapped() const {
    std::vector<int> w;
    for (int v = 0; v < static_cast<int>(wrap_.size()); ++v)
      if (wrap_[v]) w.push_back(v);
    return w;
  }
  int size() const { return static_cast<int>(outer_.size()); }
  bool contains(int v) const { return v >= 0 && v < static_cast<int>(opos_.size()) && opos_[v] >= 0; }
  int outer_pos(int v) const { return opos_[v]; }
  int inner_pos(int v) const { return ipos_[v]; }
  bool is_wrapped(int v) const { return wrap_[v] != 0; }

  bool crosses(int u, int v) const {
    bool differ = (opos_[u] < opos_[v]) != (ipos_[u] < ipos_[v]);
    return differ != (wrap_[u] != wrap_[v]);
  }

  CPermDiagram restricted(const std::vector<char>& keep) const {
    auto in = [&](int v) { return v < static_cast<int>(keep.size()) && keep[v]; };
    std::vector<int> o, i, w;
    for (int v : outer_)
      if (in(v)) {
        o.push_back(v);
        if (wrap_[v]) w.push_back(v);
      }
    for (int v : inner_)
      if (in(v)) i.push_back(v);
    return {std::move(o), std::move(i), std::move(w)};
  }
  CPermDiagram renamed(const std::vector<int>& to) const {
    std::vector<int> o, i, w;
    for (int v : outer_) o.push_back(to[v]);
    for (int v : inner_) i.push_back(to[v]);
    for (int v : wrapped()) w.push_back(to[v]);
    return {std::move(o), std::move(i), std::move(w)};
  }

  // The same drawing read from a ray through outer gap x (before position x)
  // and inner gap g. Wrap bits change so that every crossing is preserved.
  CPermDiagram recut(int x, int g) const {
    std::vector<int> o(outer_.begin() + x, outer_.end()), i(inner_.begin() + g, inner_.end()), w;
    o.insert(o.end(), outer_.begin(), outer_.begin() + x);
    i.insert(i.end(), inner_.begin(), inner_.begin() + g);
    for (int v : outer_)
      if (wrap_[v] != ((opos_[v] < x) != (ipos_[v] < g))) w.push_back(v);
    return {std::move(o), std::move(i), std::move(w)};
  }

  friend bool operator==(const CPermDiagram& a, const CPermDiagram& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_ && a.wrapped() == b.wrapped();
  }
  friend bool operator<(const CPermDiagram& a, const CPermDiagram& b) {
    if (a.outer_ != b.outer_) return a.outer_ < b.outer_;
    if (a.inner_ != b.inner_) return a.inner_ < b.inner_;
    return a.wrapped() < b.wrapped();
  }

 private:
  std::vector<int> outer_, inner_;
  std::vector<int> opos_, ipos_;
  std::vector<char> wrap_;
};

// Rotation of `seq` starting at its smallest element: equal iff cyclically equal.
inline std::vector<int> cyclic_normal(const std::vector<int>& seq) {
  if (seq.empty()) return {};
  auto lo = std::min_element(seq.begin(), seq.end());
  std::vector<int> out(lo, seq.end());
  out.insert(out.end(), seq.begin(), lo);
  return out;
}

// Same cyclic orders on both circles.
inline bool same_circles(const CPermDiagram& a, const CPermDiagram& b) {
  return cyclic_normal(a.outer()) == cyclic_normal(b.outer()) && cyclic_normal(a.inner()) == cyclic_normal(b.inner());
}

// G with every vertex of S switched; adjacency answered without building it.
class SwitchedGraph {
 public:
  SwitchedGraph(const Graph& g, const std::vector<int>& s) : g_(&g), in_(g.n(), 0) {
    for (int v : s) {
      if (v < 0 || v >= g.n()) throw input_error("switched vertex out of range");
      in_[v] = 1;
    }
  }
  SwitchedGraph(Graph&&, const std::vector<int>&) = delete;

  const Graph& base() const { return *g_; }
  bool switched(int v) const { return in_[v] != 0; }
  bool adjacent(int u, int v) const { return u != v && g_->adjacent(u, v) != (in_[u] != in_[v]); }

  // O(n + m + |S| n).
  Graph materialize() const {
    const Graph& g = *g_;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
      if (in_[u] == in_[v]) edges.emplace_back(u, v);
    std::vector<int> mark(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
      if (!in_[s]) continue;
      for (int w : g.adj(s)) mark[w] = s;
      for (int w = 0; w < g.n(); ++w)
        if (!in_[w] && mark[w] != s) edges.emplace_back(std::min(s, w), std::max(s, w));
    }
    if (g.labeled()) return Graph::with_ids(g.n(), edges, g.ids());
    return Graph::from_edges(g.n(), edges);
  }

 private:
  const Graph* g_;
  std::vector<char> in_;
};

// Graph realized by a diagram over vertices 0..n-1 (all pairs, O(n^2)).
inline Graph cdiagram_graph(const CPermDiagram& c, std::vector<std::string> ids = {}) {
  int n = c.size();
  for (int v = 0; v < n; ++v)
    if (!c.contains(v)) throw input_error("diagram does not cover vertices 0.." + std::to_string(n - 1));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (c.crosses(u, v)) edges.emplace_back(u, v);
  if (ids.empty()) return Graph::from_edges(n, edges);
  return Graph::with_ids(n, edges, std::move(ids));
}

// c's chords lie in V(g) and cross exactly along the edges of g among them.
inline bool realizes_induced(const CPermDiagram& c, const Graph& g) {
  const auto& vs = c.outer();
  for (int v : vs)
    if (v >= g.n()) return false;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (c.crosses(vs[a], vs[b]) != g.adjacent(vs[a], vs[b])) return false;
  return true;
}

inline bool realizes(const CPermDiagram& c, const Graph& g) { return c.size() == g.n() && realizes_induced(c, g); }

inline CPermDiagram switch_chords(const CPermDiagram& c, const std::vector<int>& s) {
  std::vector<char> flip(c.outer().empty() ? 0 : *std::max_element(c.outer().begin(), c.outer().end()) + 1, 0);
  for (int v : s) {
    if (!c.contains(v)) throw input_error("switched chord " + std::to_string(v) + " is not in the diagram");
    flip[v] ^= 1;
  }
  std::vector<int> w;
  for (int v : c.outer())
    if (c.is_wrapped(v) != (flip[v] != 0)) w.push_back(v);
  return {c.outer(), c.inner(), std::move(w)};
}

// Every cut (x, g) after which no chord is wrapped: the linear diagram
// (outer from x, inner from g) then realizes the same graph. Recutting
// flips chord v's status by [outer_pos < x] xor [inner_pos < g], so along
// the inner circle the statuses must switch value at most once, at g. At
// most one g per x; `only_x`, if set, restricts x. O(n log n).
inline std::vector<std::pair<int, int>> openings(const CPermDiagram& c, int only_x = -1) {
  int n = c.size();
  if (n == 0) return {{0, 0}};
  // q[j]: status of the chord at inner position j after cutting the outer circle at x
  std::vector<char> q(n);
  for (int j = 0; j < n; ++j) q[j] = c.is_wrapped(c.inner()[j]);
  std::set<int> change;  // j with q[j-1] != q[j]
  for (int j = 1; j < n; ++j)
    if (q[j - 1] != q[j]) change.insert(j);
  auto toggle = [&](int j) {
    q[j] ^= 1;
    for (int k : {j, j + 1}) {
      if (k <= 0 || k >= n) continue;
      if (q[k - 1] != q[k]) change.insert(k);
      else change.erase(k);
    }
  };
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    if (x > 0) toggle(c.inner_pos(c.outer()[x - 1]));
    if (only_x >= 0 && x != only_x) continue;
    if (change.empty()) out.emplace_back(x, 0);
    else if (change.size() == 1) out.emplace_back(x, *change.begin());
  }
  return out;
}

// A linear diagram realizing the same graph with the same cyclic orders, or
// nullopt if every cut is crossed.
inline std::optional<PermDiagram> open_diagram(const CPermDiagram& c) {
  if (c.wrapped().empty()) return PermDiagram(c.outer(), c.inner());
  auto cuts = openings(c);
  if (cuts.empty()) return std::nullopt;
  auto r = c.recut(cuts[0].first, cuts[0].second);
  return PermDiagram(r.outer(), r.inner());
}

inline std::vector<int> neighbours(const Graph& g, int v) { return {g.adj(v).begin(), g.adj(v).end()}; }

// Diagram of G with the partial's cyclic orders on its vertices.
inline Outcome<CPermDiagram> rep_ext_cperm(const Graph& g, const CPermDiagram& partial) {
  for (int v : partial.outer())
    if (v >= g.n()) throw input_error("partial diagram has vertices outside the graph");
  if (!realizes_induced(partial, g)) return Infeasible{"partial-mismatch", "partial diagram does not realize G[W]"};
  int n = g.n();
  if (n == 0) return CPermDiagram();
  int v = 0;
  for (int u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;
  auto s = neighbours(g, v);
  Graph gs = SwitchedGraph(g, s).materialize();

  std::vector<int> s_in_w;
  for (int u : s)
    if (partial.contains(u)) s_in_w.push_back(u);
  CPermDiagram ps = switch_chords(partial, s_in_w);

  MDTree t(gs);
  auto defaults = default_diagrams(t);
  if (!defaults) return Infeasible{"not-circular-permutation", "switched graph is not a permutation graph"};
  // With v drawn, the cut must run along chord v; otherwise any cut may be the one v sits in.
  int only_x = partial.contains(v) ? ps.outer_pos(v) : -1;
  for (auto [x, gap] : openings(ps, only_x)) {
    auto cut = ps.recut(x, gap);
    auto d = rep_ext_perm(t, *defaults, PermDiagram(cut.outer(), cut.inner()));
    if (!d) continue;
    CPermDiagram out = switch_chords(CPermDiagram::closed(*d), s);
    std::vector<char> keep(n, 0);
    for (int u : partial.outer()) keep[u] = 1;
    MODO_CHECK(same_circles(out.restricted(keep), partial), "extension must keep the partial's circular orders");
    return out;
  }
  return Infeasible{"no-opening", "no cut of the switched partial diagram extends"};
}

// Circular diagrams of every input, identical on the shared vertices.
// Switches the neighbourhood of one shared vertex in every input, so the
// switched graphs are built explicitly (quadratic in the worst case).
inline Outcome<std::vector<CPermDiagram>> sunflower_cperm(const SunflowerInstance& inst) {
  if (auto v = validate_sunflower(inst); !v) throw input_error(v.diagnostic);
  const Graph& h = inst.shared;
  if (h.n() == 0) throw input_error("circular simultaneous representation needs a shared vertex");
  std::size_t r = inst.inputs.size();
  SunflowerInstance sw{SwitchedGraph(h, neighbours(h, 0)).materialize(), {}};
  std::vector<std::vector<int>> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Graph& g = inst.inputs[i];
    s[i] = neighbours(g, g.require(h.id(0)));
    sw.inputs.push_back(SwitchedGraph(g, s[i]).materialize());
  }
  auto lin = sunflower_perm(sw);
  if (!lin) return lin.why();
  std::vector<CPermDiagram> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(switch_chords(CPermDiagram::closed((*lin)[i]), s[i]));
  return out;
}

}  // namespace modo
