#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "detail/refiner.hpp"
#include "detail/tree_index.hpp"
#include "graph.hpp"

namespace modo {

enum class NodeKind : std::uint8_t { Leaf, Empty, Complete, Prime };

inline const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "LEAF";
    case NodeKind::Empty: return "EMPTY";
    case NodeKind::Complete: return "COMPLETE";
    case NodeKind::Prime: return "PRIME";
  }
  return "?";
}

// Complement view: the decomposition of the complement graph is the same tree
// with EMPTY and COMPLETE exchanged.
inline NodeKind flip_kind(NodeKind k) {
  if (k == NodeKind::Empty) return NodeKind::Complete;
  if (k == NodeKind::Complete) return NodeKind::Empty;
  return k;
}

// Canonical modular decomposition. Leaves are nodes 0..n-1 (node v is vertex
// v); inner nodes follow. Children are ordered by their smallest vertex.
// Holds a reference to the graph, which must outlive the tree.
class MDTree {
 public:
  struct EdgeRep {
    int node;
    int qedge;
    int child_u;  // child index of the node on u's side
    int child_v;
  };

  // Borrows g; it must outlive the tree.
  explicit MDTree(const Graph& g);
  explicit MDTree(Graph&&) = delete;

  const Graph& graph() const { return *g_; }
  int root() const { return root_; }
  int size() const { return static_cast<int>(kind_.size()); }
  int n() const { return g_->n(); }
  NodeKind kind(int x) const { return kind_[x]; }
  bool is_leaf(int x) const { return x < n(); }
  int parent(int x) const { return parent_[x]; }
  const std::vector<int>& children(int x) const { return kids_[x]; }
  int child_index(int x) const { return slot_[x]; }
  // L(x) in DFS order.
  std::span<const int> leaves(int x) const {
    return {leaf_seq_.data() + lo_[x], leaf_seq_.data() + hi_[x]};
  }
  int leaf_count(int x) const { return hi_[x] - lo_[x]; }

  // Graph on the children of mu; vertex i is children(mu)[i].
  const Graph& quotient(int mu) const { return quot_[mu]; }
  std::span<const int> represented(int mu, int qe) const {
    const auto& off = rep_off_[mu];
    return {rep_list_[mu].data() + off[qe], rep_list_[mu].data() + off[qe + 1]};
  }
  int rep_node(int e) const { return rnode_[e]; }
  int rep_qedge(int e) const { return rqedge_[e]; }
  // Child index of mu holding each endpoint of original edge e = {a<b}.
  std::pair<int, int> rep_children(int e) const {
    auto [a, b] = quot_[rnode_[e]].edge(rqedge_[e]);
    return rflip_[e] ? std::pair{b, a} : std::pair{a, b};
  }
  EdgeRep rep_edge(int u, int v) const {
    int e = g_->edge_id(u, v);
    if (e < 0) throw input_error("rep_edge on non-edge " + g_->id(u) + " " + g_->id(v));
    auto [cu, cv] = rep_children(e);
    if (u > v) std::swap(cu, cv);
    return {rnode_[e], rqedge_[e], cu, cv};
  }

  int lca(int a, int b) const { return index_.lca(a, b); }
  bool is_ancestor(int a, int b) const { return index_.is_ancestor(a, b); }
  // Index of the child of mu whose subtree holds node x (rep_mu).
  int child_toward(int mu, int x) const { return index_.child_toward(kids_[mu], x); }
  // One vertex per child, aligned with children(mu).
  const std::vector<int>& mu_set(int mu) const {
    if (is_leaf(mu)) throw input_error("maximal mu-set of a leaf");
    return mu_set_[mu];
  }
  const detail::TreeIndex& index() const { return index_; }

  // Inner nodes, children before parents.
  std::vector<int> postorder() const {
    std::vector<int> order;
    for (int x : by_tout_)
      if (!is_leaf(x)) order.push_back(x);
    return order;
  }

 private:
  void build_raw(std::vector<NodeKind>& kind, std::vector<std::vector<int>>& kids, int& root);
  void finish(const std::vector<NodeKind>& kind, const std::vector<std::vector<int>>& kids, int root);
  void build_quotients();

  const Graph* g_;
  int root_ = 0;
  std::vector<NodeKind> kind_;
  std::vector<int> parent_, slot_;
  std::vector<std::vector<int>> kids_;
  std::vector<int> leaf_seq_, lo_, hi_, by_tout_;
  std::vector<std::vector<int>> mu_set_;
  std::vector<Graph> quot_;
  std::vector<std::vector<int>> rep_off_, rep_list_;
  std::vector<int> rnode_, rqedge_;
  std::vector<std::uint8_t> rflip_;
  detail::TreeIndex index_;
};

inline MDTree canonical_md(const Graph& g) { return MDTree(g); }

namespace detail {

// SCCs of the forcing digraph on the parts of P(G, v): X -> Y iff Y is
// adjacent to exactly one of X and v. Returned sink first. Out- and
// in-neighbourhoods are mostly complements of quotient neighbourhoods, so
// unvisited candidates are walked through skip pointers.
inline std::vector<std::vector<int>> forcing_levels(const Graph& q, const std::vector<char>& near) {
  int p = q.n();
  auto skipper = [](int len) {
    std::vector<int> nxt(len + 1);
    for (int i = 0; i <= len; ++i) nxt[i] = i;
    return nxt;
  };
  auto next_free = [](std::vector<int>& nxt, int i) {
    int r = i;
    while (nxt[r] != r) r = nxt[r];
    while (nxt[i] != r) {
      int t = nxt[i];
      nxt[i] = r;
      i = t;
    }
    return r;
  };

  std::vector<int> near_list, near_pos(p, -1);
  for (int x = 0; x < p; ++x)
    if (near[x]) near_pos[x] = static_cast<int>(near_list.size()), near_list.push_back(x);

  // pass 1: finishing order along out-edges
  std::vector<char> seen(p, 0);
  std::vector<int> finish;
  finish.reserve(p);
  {
    auto nxt = skipper(static_cast<int>(near_list.size()));
    auto visit = [&](int x) {
      seen[x] = 1;
      if (near_pos[x] >= 0) nxt[near_pos[x]] = near_pos[x] + 1;
    };
    struct Frame { int x, i, cursor; };
    std::vector<Frame> st;
    for (int s = 0; s < p; ++s) {
      if (seen[s]) continue;
      visit(s);
      st.push_back({s, 0, 0});
      while (!st.empty()) {
        Frame& f = st.back();
        auto a = q.adj(f.x);
        int next = -1;
        while (f.i < static_cast<int>(a.size())) {
          int y = a[f.i++];
          if (!near[y] && !seen[y]) { next = y; break; }
        }
        if (next < 0) {
          while (true) {
            int j = next_free(nxt, f.cursor);
            if (j >= static_cast<int>(near_list.size())) break;
            int y = near_list[j];
            if (std::binary_search(a.begin(), a.end(), y)) { f.cursor = j + 1; continue; }
            next = y;
            break;
          }
        }
        if (next < 0) {
          finish.push_back(f.x);
          st.pop_back();
        } else {
          visit(next);
          st.push_back({next, 0, 0});
        }
      }
    }
  }

  // pass 2: reverse edges in decreasing finish time
  std::vector<std::vector<int>> comps;
  std::fill(seen.begin(), seen.end(), 0);
  auto nxt = skipper(p);
  auto visit = [&](int x) { seen[x] = 1, nxt[x] = x + 1; };
  for (int t = p - 1; t >= 0; --t) {
    int s = finish[t];
    if (seen[s]) continue;
    comps.emplace_back();
    std::vector<std::pair<int, int>> st{{s, 0}};
    visit(s);
    while (!st.empty()) {
      auto& [y, cur] = st.back();
      auto a = q.adj(y);
      int next = -1;
      if (near[y]) {
        while (true) {
          int x = next_free(nxt, cur);
          if (x >= p) break;
          if (std::binary_search(a.begin(), a.end(), x)) { cur = x + 1; continue; }
          next = x;
          break;
        }
      } else {
        while (cur < static_cast<int>(a.size())) {
          int x = a[cur++];
          if (!seen[x]) { next = x; break; }
        }
      }
      if (next < 0) {
        comps.back().push_back(y);
        st.pop_back();
      } else {
        visit(next);
        st.emplace_back(next, 0);
      }
    }
  }
  std::reverse(comps.begin(), comps.end());
  return comps;
}

}  // namespace detail

inline MDTree::MDTree(const Graph& g) : g_(&g) {
  if (g.n() == 0) throw input_error("modular decomposition of an empty graph");
  std::vector<NodeKind> kind;
  std::vector<std::vector<int>> kids;
  int root = 0;
  build_raw(kind, kids, root);
  finish(kind, kids, root);
  build_quotients();
}

// Recursive decomposition over P(G, v), driven by an explicit stack. Each task
// owns the induced subgraph of one part; the modules containing v form a
// chain whose consecutive differences become the spine levels.
inline void MDTree::build_raw(std::vector<NodeKind>& kind, std::vector<std::vector<int>>& kids,
                              int& root) {
  const Graph& g = *g_;
  int n = g.n();
  kind.assign(n, NodeKind::Leaf);
  kids.assign(n, {});

  struct Task {
    std::vector<int> verts;  // global ids, local vertex i is verts[i]
    std::shared_ptr<const Graph> local;
    int parent, slot;
  };
  auto attach = [&](const Task& t, int node) {
    if (t.parent < 0) root = node;
    else kids[t.parent][t.slot] = node;
  };

  std::vector<Task> stack;
  {
    Task t;
    t.verts.resize(n);
    for (int v = 0; v < n; ++v) t.verts[v] = v;
    t.local = std::shared_ptr<const Graph>(&g, [](const Graph*) {});
    t.parent = -1, t.slot = 0;
    stack.push_back(std::move(t));
  }

  std::vector<int> part_idx, local_id, stamp;
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const Graph& L = *task.local;
    int k = L.n();
    if (k == 1) {
      attach(task, task.verts[0]);
      continue;
    }

    detail::Refiner ref(L, detail::Refiner::Mode::Unordered);
    ref.run(0);
    int vpart = ref.part_of(0);
    part_idx.assign(ref.parts(), -1);
    std::vector<int> part_ids;
    for (int p = 0; p < ref.parts(); ++p)
      if (p != vpart) part_idx[p] = static_cast<int>(part_ids.size()), part_ids.push_back(p);
    int np = static_cast<int>(part_ids.size());

    std::vector<char> near(np, 0);
    for (int y : L.adj(0)) near[part_idx[ref.part_of(y)]] = 1;

    // quotient on the parts, and the edges inside each part
    std::vector<Edge> qedges;
    std::vector<std::vector<Edge>> inner(np);
    local_id.assign(k, -1);
    for (int i = 0; i < np; ++i) {
      auto mem = ref.members(part_ids[i]);
      for (int j = 0; j < static_cast<int>(mem.size()); ++j) local_id[mem[j]] = j;
    }
    stamp.assign(np, -1);
    for (int i = 0; i < np; ++i)
      for (int x : ref.members(part_ids[i]))
        for (int y : L.adj(x)) {
          if (y == 0) continue;
          int j = part_idx[ref.part_of(y)];
          if (j == i) {
            if (x < y) inner[i].emplace_back(local_id[x], local_id[y]);
          } else if (j > i && stamp[j] != i) {
            stamp[j] = i;
            qedges.emplace_back(i, j);
          }
        }
    Graph q = Graph::from_edges(np, qedges);
    auto levels = detail::forcing_levels(q, near);

    int cur = task.verts[0];
    for (const auto& lvl : levels) {
      NodeKind kd = lvl.size() >= 2 ? NodeKind::Prime
                                    : (near[lvl[0]] ? NodeKind::Complete : NodeKind::Empty);
      int node = static_cast<int>(kind.size());
      kind.push_back(kd);
      kids.emplace_back(1 + lvl.size(), -1);
      kids[node][0] = cur;
      for (int s = 0; s < static_cast<int>(lvl.size()); ++s) {
        int i = lvl[s];
        auto mem = ref.members(part_ids[i]);
        Task sub;
        sub.verts.reserve(mem.size());
        for (int x : mem) sub.verts.push_back(task.verts[x]);
        sub.local = std::make_shared<const Graph>(
            Graph::from_edges(static_cast<int>(mem.size()), inner[i]));
        inner[i].clear();
        inner[i].shrink_to_fit();
        sub.parent = node, sub.slot = s + 1;
        stack.push_back(std::move(sub));
      }
      cur = node;
    }
    attach(task, cur);
  }
}

// Merge same-kind degenerate parent/child pairs, renumber, sort children by
// smallest leaf and index the result.
inline void MDTree::finish(const std::vector<NodeKind>& kind,
                           const std::vector<std::vector<int>>& raw_kids, int root) {
  int n = g_->n();
  int total = static_cast<int>(kind.size());
  std::vector<std::vector<int>> kids = raw_kids;
  std::vector<char> alive(total, 1);
  std::vector<int> minleaf(total, 0);
  for (int v = 0; v < n; ++v) minleaf[v] = v;

  // postorder over the raw tree
  std::vector<int> post;
  {
    std::vector<std::pair<int, int>> st{{root, 0}};
    while (!st.empty()) {
      auto& [x, i] = st.back();
      if (i < static_cast<int>(kids[x].size())) {
        int c = kids[x][i++];
        st.emplace_back(c, 0);
      } else {
        post.push_back(x);
        st.pop_back();
      }
    }
  }
  for (int x : post) {
    if (x < n) continue;
    std::vector<int> merged;
    for (int c : kids[x]) {
      if (c >= n && kind[x] != NodeKind::Prime && kind[c] == kind[x]) {
        alive[c] = 0;
        merged.insert(merged.end(), kids[c].begin(), kids[c].end());
      } else {
        merged.push_back(c);
      }
    }
    std::sort(merged.begin(), merged.end(),
              [&](int a, int b) { return minleaf[a] < minleaf[b]; });
    minleaf[x] = minleaf[merged[0]];
    kids[x] = std::move(merged);
  }

  // renumber inner nodes breadth-first from the root
  std::vector<int> id(total, -1);
  for (int v = 0; v < n; ++v) id[v] = v;
  int next = n;
  std::vector<int> bfs{root};
  for (std::size_t h = 0; h < bfs.size(); ++h) {
    int x = bfs[h];
    if (x >= n) id[x] = next++;
    for (int c : kids[x])
      if (c >= n) bfs.push_back(c);
  }
  kind_.assign(next, NodeKind::Leaf);
  kids_.assign(next, {});
  parent_.assign(next, -1);
  slot_.assign(next, 0);
  for (int x : bfs) {
    if (x < n) continue;
    kind_[id[x]] = kind[x];
    auto& out = kids_[id[x]];
    for (int c : kids[x]) out.push_back(id[c]);
    for (int s = 0; s < static_cast<int>(out.size()); ++s) parent_[out[s]] = id[x], slot_[out[s]] = s;
  }
  root_ = id[root];

  index_.build(root_, kids_);
  lo_.assign(next, 0);
  hi_.assign(next, 0);
  leaf_seq_.clear();
  by_tout_.clear();
  std::vector<std::pair<int, int>> st{{root_, 0}};
  lo_[root_] = 0;
  if (root_ < n) leaf_seq_.push_back(root_);
  while (!st.empty()) {
    auto& [x, i] = st.back();
    if (i < static_cast<int>(kids_[x].size())) {
      int c = kids_[x][i++];
      lo_[c] = static_cast<int>(leaf_seq_.size());
      if (c < n) leaf_seq_.push_back(c);
      st.emplace_back(c, 0);
    } else {
      hi_[x] = static_cast<int>(leaf_seq_.size());
      by_tout_.push_back(x);
      st.pop_back();
    }
  }
  mu_set_.assign(next, {});
  for (int x = n; x < next; ++x)
    for (int c : kids_[x]) mu_set_[x].push_back(leaf_seq_[lo_[c]]);
}

// Bottom-up sweep: edges are bucketed by the lca of their endpoints; when a
// node is processed, union-find over its already merged child subtrees names
// the children holding each endpoint. Parallel quotient edges are grouped by
// a two-pass counting sort on child indices.
inline void MDTree::build_quotients() {
  const Graph& g = *g_;
  int n = g.n(), m = g.m(), total = size();
  std::vector<int> cnt(total + 1, 0), bucket(m);
  std::vector<int> at(m);
  for (int e = 0; e < m; ++e) at[e] = lca(g.edge(e).first, g.edge(e).second), ++cnt[at[e] + 1];
  for (int x = 0; x < total; ++x) cnt[x + 1] += cnt[x];
  {
    std::vector<int> fill(cnt.begin(), cnt.end() - 1);
    for (int e = 0; e < m; ++e) bucket[fill[at[e]]++] = e;
  }

  quot_.assign(total, Graph());
  rep_off_.assign(total, {});
  rep_list_.assign(total, {});
  rnode_.assign(m, -1);
  rqedge_.assign(m, -1);
  rflip_.assign(m, 0);

  detail::DisjointSets ds(n);
  std::vector<int> top(n);
  for (int v = 0; v < n; ++v) top[v] = v;

  struct Rec { int a, b, e; std::uint8_t flip; };
  std::vector<Rec> recs, tmp;
  std::vector<int> ccount;
  for (int mu : by_tout_) {
    if (is_leaf(mu)) continue;
    int k = static_cast<int>(kids_[mu].size());
    recs.clear();
    for (int i = cnt[mu]; i < cnt[mu + 1]; ++i) {
      int e = bucket[i];
      auto [u, v] = g.edge(e);
      int cu = slot_[top[ds.find(u)]], cv = slot_[top[ds.find(v)]];
      assert(parent_[top[ds.find(u)]] == mu && parent_[top[ds.find(v)]] == mu);
      recs.push_back({std::min(cu, cv), std::max(cu, cv), e, static_cast<std::uint8_t>(cu > cv)});
    }
    int r = mu_set_[mu][0];
    for (int c = 1; c < k; ++c) r = ds.unite(r, mu_set_[mu][c]);
    top[ds.find(r)] = mu;

    // radix sort on (a, b)
    tmp.resize(recs.size());
    for (int pass = 0; pass < 2; ++pass) {
      ccount.assign(k + 1, 0);
      for (auto& rc : recs) ++ccount[(pass ? rc.a : rc.b) + 1];
      for (int i = 0; i < k; ++i) ccount[i + 1] += ccount[i];
      for (auto& rc : recs) tmp[ccount[pass ? rc.a : rc.b]++] = rc;
      recs.swap(tmp);
    }
    std::vector<Edge> qe;
    auto& off = rep_off_[mu];
    auto& lst = rep_list_[mu];
    lst.reserve(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (i == 0 || recs[i].a != recs[i - 1].a || recs[i].b != recs[i - 1].b) {
        off.push_back(static_cast<int>(i));
        qe.emplace_back(recs[i].a, recs[i].b);
      }
      int e = recs[i].e;
      rnode_[e] = mu;
      rqedge_[e] = static_cast<int>(qe.size()) - 1;
      rflip_[e] = recs[i].flip;
      lst.push_back(e);
    }
    off.push_back(static_cast<int>(recs.size()));
    quot_[mu] = Graph::from_edges(k, qe);
  }
}

// Per-node linear extension ranks: for a PRIME node, rank[c] is the position
// of child c in a linear extension of the chosen orientation of its quotient.
// Edge ab of the quotient is oriented a -> b iff rank[a] < rank[b].
using NodeRanks = std::vector<std::vector<int>>;

// Restriction T|_H with labels and restricted default orientations.
// Node 0..|H|-1 are the leaves (H vertex i); inner nodes follow.
class RestrictedMD {
 public:
  RestrictedMD(const MDTree& t, const NodeRanks& ranks, const std::vector<int>& h_vertices,
               bool complement = false);
  RestrictedMD(MDTree&&, const NodeRanks&, const std::vector<int>&, bool = false) = delete;

  const MDTree& source() const { return *t_; }
  // Labels are those of the complement's tree (COMPLETE and EMPTY swapped).
  bool complement() const { return co_; }
  int size() const { return static_cast<int>(label_.size()); }
  int n() const { return static_cast<int>(h_.size()); }
  int root() const { return root_; }
  bool is_leaf(int x) const { return x < n(); }
  NodeKind label(int x) const { return label_[x]; }
  int stem(int x) const { return stem_[x]; }
  int parent(int x) const { return parent_[x]; }
  const std::vector<int>& children(int x) const { return kids_[x]; }
  // H vertex i sits at G vertex h_vertices[i].
  int g_vertex(int i) const { return h_[i]; }
  // PRIME-labeled nodes: child a precedes child b in D iff key(x)[a] < key(x)[b].
  const std::vector<int>& key(int x) const { return key_[x]; }
  int lca(int a, int b) const { return index_.lca(a, b); }
  int child_toward(int x, int y) const { return index_.child_toward(kids_[x], y); }
  const detail::TreeIndex& index() const { return index_; }

 private:
  const MDTree* t_;
  std::vector<int> h_;
  bool co_ = false;
  int root_ = 0;
  std::vector<NodeKind> label_;
  std::vector<int> stem_, parent_;
  std::vector<std::vector<int>> kids_, key_;
  detail::TreeIndex index_;
};

inline RestrictedMD::RestrictedMD(const MDTree& t, const NodeRanks& ranks,
                                  const std::vector<int>& h_vertices, bool complement)
    : t_(&t), h_(h_vertices), co_(complement) {
  int nh = static_cast<int>(h_.size());
  if (nh == 0) throw input_error("restriction to an empty vertex set");
  std::vector<int> hid(t.size(), -1);
  for (int i = 0; i < nh; ++i) {
    if (h_[i] < 0 || h_[i] >= t.n() || hid[h_[i]] >= 0) throw input_error("bad restriction vertex");
    hid[h_[i]] = i;
  }
  // count H-bearing children; branching nodes survive
  std::vector<int> bearing(t.size(), 0);
  std::vector<char> has(t.size(), 0);
  for (int i = 0; i < nh; ++i) has[h_[i]] = 1;
  std::vector<int> keep_id(t.size(), -1);
  for (int i = 0; i < nh; ++i) keep_id[h_[i]] = i;
  for (int x : t.postorder())
    for (int c : t.children(x))
      if (has[c]) has[x] = 1, ++bearing[x];

  label_.assign(nh, NodeKind::Leaf);
  stem_.assign(nh, -1);
  for (int i = 0; i < nh; ++i) stem_[i] = h_[i];
  // walk top-down from the source root, tracking the nearest kept ancestor
  std::vector<std::pair<int, int>> st{{t.root(), -1}};
  parent_.assign(nh, -1);
  kids_.assign(nh, {});
  key_.assign(nh, {});
  root_ = -1;
  while (!st.empty()) {
    auto [x, up] = st.back();
    st.pop_back();
    if (!has[x]) continue;
    int self = up;
    if (t.is_leaf(x) || bearing[x] >= 2) {
      if (t.is_leaf(x)) {
        self = keep_id[x];
      } else {
        self = static_cast<int>(label_.size());
        NodeKind k = complement ? flip_kind(t.kind(x)) : t.kind(x);
        label_.push_back(k);
        stem_.push_back(x);
        parent_.push_back(-1);
        kids_.emplace_back();
        key_.emplace_back();
      }
      parent_[self] = up;
      if (up >= 0) kids_[up].push_back(self);
      else root_ = self;
    }
    const auto& ch = t.children(x);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) st.emplace_back(*it, self);
  }
  // children were pushed in source order; record keys for PRIME labels
  for (int x = nh; x < size(); ++x) {
    if (label_[x] != NodeKind::Prime) continue;
    int s = stem_[x];
    for (int c : kids_[x]) {
      int leaf = c < nh ? h_[c] : t.leaves(stem_[c])[0];
      key_[x].push_back(ranks[s][t.child_toward(s, leaf)]);
    }
  }
  index_.build(root_, kids_);
}

// Orientation of G from one orientation per quotient (indexed by node).
inline Orientation orientations_from_tree(const MDTree& t, const std::vector<Orientation>& per_node) {
  const Graph& g = t.graph();
  Orientation o(g);
  for (int e = 0; e < g.m(); ++e) {
    int mu = t.rep_node(e);
    if (mu >= static_cast<int>(per_node.size()) || per_node[mu].bits().size() != static_cast<std::size_t>(t.quotient(mu).m()))
      throw input_error("missing orientation for quotient of node " + std::to_string(mu));
    auto [ca, cb] = t.rep_children(e);
    // edge {a<b} is forward iff the quotient points from a's child to b's child
    o.set_forward(e, per_node[mu].directed(ca, cb));
  }
  return o;
}

}  // namespace modo
