#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "outcome.hpp"

namespace modo {

using Edge = std::pair<int, int>;

// Undirected simple graph in CSR form. Vertices are dense indices 0..n-1;
// each carries an opaque string id used for I/O and cross-graph identity.
// Edge e joins edge(e).first < edge(e).second; edge ids follow lexicographic order.
class Graph {
 public:
  Graph() = default;

  // Unlabeled graph; ids are the decimal indices.
  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g;
    g.build(n, edges);
    return g;
  }

  static Graph from_labeled(std::vector<std::string> ids,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    g.labels_ = std::move(ids);
    g.index_.reserve(g.labels_.size());
    for (int v = 0; v < static_cast<int>(g.labels_.size()); ++v)
      if (!g.index_.emplace(g.labels_[v], v).second)
        throw input_error("duplicate vertex id '" + g.labels_[v] + "'");
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [a, b] : edges) es.emplace_back(g.require(a), g.require(b));
    g.build(static_cast<int>(g.labels_.size()), es);
    return g;
  }

  // Same structure, explicit ids (size must be n).
  static Graph with_ids(int n, const std::vector<Edge>& edges, std::vector<std::string> ids) {
    Graph g = from_edges(n, edges);
    if (static_cast<int>(ids.size()) != n) throw input_error("id list size mismatch");
    g.labels_ = std::move(ids);
    for (int v = 0; v < n; ++v)
      if (!g.index_.emplace(g.labels_[v], v).second)
        throw input_error("duplicate vertex id '" + g.labels_[v] + "'");
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(ends_.size()); }

  std::span<const int> adj(int v) const {
    return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]};
  }
  // Edge ids aligned with adj(v).
  std::span<const int> incident(int v) const {
    return {eid_.data() + off_[v], eid_.data() + off_[v + 1]};
  }
  int degree(int v) const { return off_[v + 1] - off_[v]; }

  int edge_id(int u, int v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto a = adj(u);
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return -1;
    return eid_[off_[u] + (it - a.begin())];
  }
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
  const Edge& edge(int e) const { return ends_[e]; }
  const std::vector<Edge>& edges() const { return ends_; }

  bool labeled() const { return !labels_.empty(); }
  std::string id(int v) const { return labeled() ? labels_[v] : std::to_string(v); }
  std::vector<std::string> ids() const {
    std::vector<std::string> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = id(v);
    return out;
  }

  // -1 when absent.
  int index_of(std::string_view id) const {
    if (labeled()) {
      auto it = index_.find(std::string(id));
      return it == index_.end() ? -1 : it->second;
    }
    int v = 0;
    if (id.empty() || id.size() > 9) return -1;
    for (char c : id) {
      if (c < '0' || c > '9') return -1;
      v = v * 10 + (c - '0');
    }
    return v < n_ ? v : -1;
  }
  int require(std::string_view id) const {
    int v = index_of(id);
    if (v < 0) throw input_error("unknown vertex id '" + std::string(id) + "'");
    return v;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.ends_ == b.ends_;
  }

 private:
  void build(int n, const std::vector<Edge>& edges) {
    n_ = n;
    ends_.clear();
    ends_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
      if (u == v) throw input_error("self-loop at vertex " + id(u));
      ends_.emplace_back(std::min(u, v), std::max(u, v));
    }
    // two counting-sort passes: by second endpoint, then stable by first
    std::vector<int> cnt(n + 1);
    std::vector<Edge> tmp(ends_.size());
    for (auto& e : ends_) ++cnt[e.second + 1];
    for (int i = 0; i < n; ++i) cnt[i + 1] += cnt[i];
    for (auto& e : ends_) tmp[cnt[e.second]++] = e;
    std::fill(cnt.begin(), cnt.end(), 0);
    for (auto& e : tmp) ++cnt[e.first + 1];
    for (int i = 0; i < n; ++i) cnt[i + 1] += cnt[i];
    for (auto& e : tmp) ends_[cnt[e.first]++] = e;
    for (std::size_t i = 1; i < ends_.size(); ++i)
      if (ends_[i] == ends_[i - 1])
        throw input_error("parallel edge " + id(ends_[i].first) + " " + id(ends_[i].second));

    off_.assign(n + 1, 0);
    for (auto [u, v] : ends_) ++off_[u + 1], ++off_[v + 1];
    for (int i = 0; i < n; ++i) off_[i + 1] += off_[i];
    nbr_.resize(2 * ends_.size());
    eid_.resize(2 * ends_.size());
    std::vector<int> pos(off_.begin(), off_.end() - 1);
    // Edges are sorted by (first, second). Emitting "lower" slots in order of
    // first endpoint keeps each list sorted: smaller neighbours arrive first.
    for (int e = 0; e < m(); ++e) {
      auto [u, v] = ends_[e];
      nbr_[pos[v]] = u, eid_[pos[v]++] = e;
    }
    for (int e = 0; e < m(); ++e) {
      auto [u, v] = ends_[e];
      nbr_[pos[u]] = v, eid_[pos[u]++] = e;
    }
  }

  int n_ = 0;
  std::vector<int> off_{0};
  std::vector<int> nbr_, eid_;
  std::vector<Edge> ends_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// One direction per edge of the underlying graph.
class Orientation {
 public:
  Orientation() = default;
  // All edges pointing from the smaller to the larger index.
  explicit Orientation(const Graph& g) : g_(&g), fwd_(g.m(), 1) {}
  explicit Orientation(Graph&&) = delete;

  const Graph& graph() const { return *g_; }
  int tail(int e) const { return fwd_[e] ? g_->edge(e).first : g_->edge(e).second; }
  int head(int e) const { return fwd_[e] ? g_->edge(e).second : g_->edge(e).first; }
  // For edge e = {a<b}: forward means a -> b.
  bool forward(int e) const { return fwd_[e]; }
  void set_forward(int e, bool f) { fwd_[e] = f; }
  void set(int tail, int head) {
    int e = g_->edge_id(tail, head);
    if (e < 0) throw input_error("not an edge: " + g_->id(tail) + " " + g_->id(head));
    fwd_[e] = tail < head;
  }
  // True iff uv is an edge oriented u -> v.
  bool directed(int u, int v) const {
    int e = g_->edge_id(u, v);
    return e >= 0 && fwd_[e] == (u < v);
  }
  Orientation reversed() const {
    Orientation r = *this;
    for (auto& f : r.fwd_) f ^= 1;
    return r;
  }
  const std::vector<std::uint8_t>& bits() const { return fwd_; }

  friend bool operator==(const Orientation& a, const Orientation& b) { return a.fwd_ == b.fwd_; }
  friend bool operator<(const Orientation& a, const Orientation& b) { return a.fwd_ < b.fwd_; }

 private:
  const Graph* g_ = nullptr;
  std::vector<std::uint8_t> fwd_;
};

// Directed pairs over a subset of the edges.
class PartialOrientation {
 public:
  PartialOrientation() = default;
  PartialOrientation(Graph&&, const std::vector<Edge>&) = delete;
  PartialOrientation(const Graph& g, const std::vector<Edge>& arcs) : g_(&g) {
    std::vector<std::int8_t> seen(g.m(), 0);
    for (auto [t, h] : arcs) {
      int e = g.edge_id(t, h);
      if (e < 0) throw input_error("partial orientation uses non-edge " + g.id(t) + " " + g.id(h));
      std::int8_t d = t < h ? 1 : -1;
      if (seen[e] == -d) throw input_error("edge oriented both ways: " + g.id(t) + " " + g.id(h));
      if (seen[e] == d) continue;
      seen[e] = d;
      arcs_.emplace_back(t, h);
    }
  }
  const Graph& graph() const { return *g_; }
  const std::vector<Edge>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  std::size_t size() const { return arcs_.size(); }
  PartialOrientation reversed() const {
    PartialOrientation r = *this;
    for (auto& a : r.arcs_) std::swap(a.first, a.second);
    return r;
  }

 private:
  const Graph* g_ = nullptr;
  std::vector<Edge> arcs_;
};

inline bool contains(const Orientation& o, const PartialOrientation& w) {
  for (auto [t, h] : w.arcs())
    if (!o.directed(t, h)) return false;
  return true;
}

// Every directed path u->v->w must be closed by u->w. O(sum of deg^2).
inline bool is_transitive(const Graph& g, const Orientation& o) {
  std::vector<std::vector<int>> out(g.n());
  for (int e = 0; e < g.m(); ++e) out[o.tail(e)].push_back(o.head(e));
  std::vector<int> stamp(g.n(), -1);
  for (int u = 0; u < g.n(); ++u) {
    for (int v : out[u]) stamp[v] = u;
    for (int v : out[u])
      for (int w : out[v])
        if (stamp[w] != u) return false;
  }
  return true;
}

// G[s] with ids preserved; vertex i of the result is s[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] < 0 || s[i] >= g.n()) throw input_error("vertex out of range in induced_subgraph");
    if (local[s[i]] >= 0) throw input_error("repeated vertex in induced_subgraph");
    local[s[i]] = i;
  }
  std::vector<Edge> es;
  std::vector<std::string> ids;
  ids.reserve(s.size());
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    ids.push_back(g.id(s[i]));
    for (int w : g.adj(s[i]))
      if (local[w] > i) es.emplace_back(i, local[w]);
  }
  return Graph::with_ids(static_cast<int>(s.size()), es, std::move(ids));
}

inline Graph induced_subgraph(const Graph& g, const std::vector<std::string>& ids) {
  std::vector<int> s;
  s.reserve(ids.size());
  for (const auto& id : ids) s.push_back(g.require(id));
  return induced_subgraph(g, s);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph::with_ids(g.n(), es, g.ids());
}

struct SunflowerInstance {
  Graph shared;
  std::vector<Graph> inputs;

  // position i holds the index in inputs[k] of shared vertex i
  std::vector<int> embedding(std::size_t k) const {
    std::vector<int> at(shared.n());
    for (int v = 0; v < shared.n(); ++v) at[v] = inputs[k].require(shared.id(v));
    return at;
  }
};

struct Verdict {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

inline Verdict validate_sunflower(const SunflowerInstance& inst) {
  const Graph& h = inst.shared;
  std::unordered_map<std::string, std::size_t> owner;
  for (std::size_t k = 0; k < inst.inputs.size(); ++k) {
    const Graph& g = inst.inputs[k];
    std::vector<int> at(h.n());
    for (int v = 0; v < h.n(); ++v) {
      at[v] = g.index_of(h.id(v));
      if (at[v] < 0)
        return {false, "graph " + std::to_string(k) + " lacks shared vertex " + h.id(v)};
    }
    std::vector<int> back(g.n(), -1);
    for (int v = 0; v < h.n(); ++v) back[at[v]] = v;
    for (int u = 0; u < h.n(); ++u) {
      int seen = 0;
      for (int x : g.adj(at[u])) {
        if (back[x] < 0) continue;
        ++seen;
        if (!h.adjacent(u, back[x]))
          return {false, "graph " + std::to_string(k) + " has extra shared edge " + h.id(u) +
                             " " + h.id(back[x])};
      }
      if (seen != h.degree(u))
        return {false, "graph " + std::to_string(k) + " misses a shared edge at " + h.id(u)};
    }
    for (int x = 0; x < g.n(); ++x) {
      std::string id = g.id(x);
      if (h.index_of(id) >= 0) continue;
      auto [it, fresh] = owner.emplace(id, k);
      if (!fresh)
        return {false, "graphs " + std::to_string(it->second) + " and " + std::to_string(k) +
                           " share private vertex " + id};
    }
  }
  return {};
}

}  // namespace modo
