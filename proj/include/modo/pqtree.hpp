#pragma once

// PQ-trees over the ground set {0..n-1}.
//
// Node ids 0..n-1 are the leaves (element = node id); inner nodes follow in
// BFS order from the root. A Q-node's stored child order is its "forward"
// orientation. Q-nodes always have at least three children: two-child
// Q-nodes are turned into P-nodes whenever a tree is finalized.
//
// reduce() applies the classic templates in one pass over the tree, so it
// costs O(size of tree) per constraint rather than the amortized bound.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "detail/tree_index.hpp"
#include "outcome.hpp"

namespace modo {

class PQTree {
 public:
  enum class Kind : std::uint8_t { Leaf, P, Q };

  PQTree() = default;

  static PQTree universal(int n) {
    if (n <= 0) throw input_error("PQ-tree over an empty ground set");
    PQTree t = leaves_only(n);
    if (n == 1) {
      t.root_ = 0;
    } else {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      t.root_ = t.add(Kind::P, std::move(all));
    }
    t.finish();
    return t;
  }
  static PQTree null_tree(int n) {
    PQTree t;
    t.n_ = n;
    return t;
  }
  // Builds from an explicit node table; kinds/kids beyond n describe inner nodes.
  static PQTree from_nodes(int n, int root, std::vector<Kind> kinds, std::vector<std::vector<int>> kids) {
    PQTree t;
    t.n_ = n;
    t.root_ = root;
    t.kind_ = std::move(kinds);
    t.kids_ = std::move(kids);
    t.finish();
    return t;
  }

  bool is_null() const { return root_ < 0; }
  int ground() const { return n_; }
  int root() const { return root_; }
  int size() const { return static_cast<int>(kind_.size()); }
  Kind kind(int x) const { return kind_[x]; }
  bool is_leaf(int x) const { return x < n_; }
  const std::vector<int>& children(int x) const { return kids_[x]; }
  int parent(int x) const { return parent_[x]; }

  std::vector<int> q_nodes() const {
    std::vector<int> out;
    for (int x = n_; x < size(); ++x)
      if (kind_[x] == Kind::Q) out.push_back(x);
    return out;
  }
  // Nodes whose children admit exactly one order up to reversal: Q-nodes and
  // two-child nodes. Each has a forward (stored) and a reversed state.
  bool orientable(int x) const { return !is_leaf(x) && (kind_[x] == Kind::Q || kids_[x].size() == 2); }
  std::vector<int> orientable_nodes() const {
    std::vector<int> out;
    for (int x = n_; x < size(); ++x)
      if (orientable(x)) out.push_back(x);
    return out;
  }

  // Leaves below x in stored order, reversing orientable nodes where rev[x] is set.
  std::vector<int> frontier_of(int x, const std::vector<char>& rev = {}) const {
    std::vector<int> out, st{x};
    while (!st.empty()) {
      int y = st.back();
      st.pop_back();
      if (is_leaf(y)) {
        out.push_back(y);
        continue;
      }
      const auto& k = kids_[y];
      bool flip = y < static_cast<int>(rev.size()) && rev[y] && orientable(y);
      if (flip) st.insert(st.end(), k.begin(), k.end());
      else st.insert(st.end(), k.rbegin(), k.rend());
    }
    return out;
  }
  std::vector<int> frontier(const std::vector<char>& rev = {}) const {
    MODO_CHECK(!is_null(), "frontier of the null tree");
    return frontier_of(root_, rev);
  }

  // Children before parents.
  std::vector<int> postorder() const {
    std::vector<int> out;
    if (is_null()) return out;
    std::vector<std::pair<int, int>> st{{root_, 0}};
    while (!st.empty()) {
      auto& [x, i] = st.back();
      if (i < static_cast<int>(kids_[x].size())) {
        int c = kids_[x][i++];
        st.emplace_back(c, 0);
      } else {
        out.push_back(x);
        st.pop_back();
      }
    }
    return out;
  }

  // Textual form such as P(x, Q(a, b, c), y); "NULL" for the null tree.
  std::string str(const std::vector<std::string>& names = {}) const {
    if (is_null()) return "NULL";
    std::vector<std::string> s(size());
    for (int x : postorder()) {
      if (is_leaf(x)) {
        s[x] = names.empty() ? std::to_string(x) : names[x];
        continue;
      }
      std::string r = kind_[x] == Kind::P ? "P(" : "Q(";
      for (std::size_t i = 0; i < kids_[x].size(); ++i) r += (i ? ", " : "") + s[kids_[x][i]];
      s[x] = r + ")";
    }
    return s[root_];
  }

  // Equal strings iff the trees are equivalent.
  std::string canonical() const {
    if (is_null()) return "NULL";
    std::vector<std::string> s(size());
    for (int x : postorder()) {
      if (is_leaf(x)) {
        s[x] = std::to_string(x);
        continue;
      }
      std::vector<std::string> parts;
      for (int c : kids_[x]) parts.push_back(s[c]);
      if (kind_[x] == Kind::P) std::sort(parts.begin(), parts.end());
      else {
        std::vector<std::string> rev(parts.rbegin(), parts.rend());
        parts = std::min(parts, rev);
      }
      std::string r = kind_[x] == Kind::P ? "P(" : "Q(";
      for (std::size_t i = 0; i < parts.size(); ++i) r += (i ? "," : "") + parts[i];
      s[x] = r + ")";
    }
    return s[root_];
  }

  // Orders of this tree in which s is consecutive; the null tree if none.
  PQTree reduced(const std::vector<int>& s) const;

 private:
  static PQTree leaves_only(int n) {
    PQTree t;
    t.n_ = n;
    t.kind_.assign(n, Kind::Leaf);
    t.kids_.assign(n, {});
    return t;
  }
  int add(Kind k, std::vector<int> kids) {
    kind_.push_back(k);
    kids_.push_back(std::move(kids));
    return size() - 1;
  }
  // Drops unreachable nodes, renumbers inner nodes in BFS order, demotes
  // two-child Q-nodes, fills parents.
  void finish() {
    if (is_null()) return;
    std::vector<Kind> nk(n_, Kind::Leaf);
    std::vector<std::vector<int>> nkids(n_);
    if (root_ >= n_) {
      std::vector<int> id(size(), -1), order{root_};
      id[root_] = n_;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : kids_[order[i]])
          if (c >= n_) {
            MODO_CHECK(id[c] < 0, "PQ node reached twice");
            id[c] = n_ + static_cast<int>(order.size());
            order.push_back(c);
          }
      nk.resize(n_ + order.size());
      nkids.resize(n_ + order.size());
      for (int x : order) {
        auto& k = nkids[id[x]];
        for (int c : kids_[x]) k.push_back(c < n_ ? c : id[c]);
        MODO_CHECK(k.size() >= 2, "inner PQ node with fewer than two children");
        nk[id[x]] = kind_[x] == Kind::Q && k.size() >= 3 ? Kind::Q : Kind::P;
      }
      root_ = n_;
    }
    kind_ = std::move(nk);
    kids_ = std::move(nkids);
    parent_.assign(size(), -1);
    int leaves = 0;
    for (int x = 0; x < size(); ++x)
      for (int c : kids_[x]) parent_[c] = x;
    for (int x = 0; x < n_; ++x) leaves += x == root_ || parent_[x] >= 0;
    MODO_CHECK(leaves == n_, "PQ-tree does not hold every ground element once");
  }

  int n_ = 0;
  int root_ = -1;
  std::vector<Kind> kind_;
  std::vector<std::vector<int>> kids_;
  std::vector<int> parent_;
};

inline PQTree PQTree::reduced(const std::vector<int>& s) const {
  if (is_null()) return *this;
  std::vector<char> in(n_, 0);
  int k = 0;
  for (int x : s) {
    if (x < 0 || x >= n_) throw input_error("consecutivity constraint outside the ground set");
    k += !in[x];
    in[x] = 1;
  }
  if (k <= 1 || k == n_) return *this;

  PQTree t = *this;
  const int orig = t.size();
  std::vector<int> full(orig, 0), total(orig, 0);
  auto post = t.postorder();
  for (int x : post) {
    if (t.is_leaf(x)) {
      total[x] = 1;
      full[x] = in[x];
      continue;
    }
    for (int c : t.kids_[x]) full[x] += full[c], total[x] += total[c];
  }
  // Pertinent root: deepest node holding all of s.
  int r = t.root_;
  for (bool moved = true; moved;) {
    moved = false;
    for (int c : t.kids_[r])
      if (full[c] == k) {
        r = c;
        moved = true;
        break;
      }
  }
  enum { EMPTY, PARTIAL, FULL };
  auto status = [&](int x) { return full[x] == 0 ? EMPTY : full[x] == total[x] ? FULL : PARTIAL; };
  if (status(r) == FULL) return *this;
  auto group = [&](std::vector<int> ks) { return ks.size() == 1 ? ks[0] : t.add(Kind::P, std::move(ks)); };

  // seq[x] for a partial node below r: its replacement as a run of subtrees,
  // empty side first, full side last.
  std::unordered_map<int, std::vector<int>> seq;
  auto append_seq = [&](std::vector<int>& out, int c, bool backwards) {
    if (status(c) != PARTIAL) {
      out.push_back(c);
      return;
    }
    auto& q = seq.at(c);
    if (backwards) out.insert(out.end(), q.rbegin(), q.rend());
    else out.insert(out.end(), q.begin(), q.end());
  };
  // E* (partial)? F* reading left to right.
  auto one_sided = [&](const std::vector<int>& ks) {
    bool closed = false;
    for (int c : ks) {
      int st = status(c);
      if (closed && st != FULL) return false;
      if (st != EMPTY) closed = true;
    }
    return true;
  };

  for (int x : post) {
    if (x == r) break;  // partial nodes other than r are its descendants
    if (status(x) != PARTIAL) continue;
    std::vector<int> out;
    if (t.kind_[x] == Kind::P) {
      std::vector<int> e, f, p;
      for (int c : t.kids_[x]) (status(c) == EMPTY ? e : status(c) == FULL ? f : p).push_back(c);
      if (p.size() > 1) return null_tree(n_);
      if (!e.empty()) out.push_back(group(e));
      if (!p.empty()) append_seq(out, p[0], false);
      if (!f.empty()) out.push_back(group(f));
    } else {
      std::vector<int> ks = t.kids_[x];
      if (!one_sided(ks)) {
        std::reverse(ks.begin(), ks.end());
        if (!one_sided(ks)) return null_tree(n_);
      }
      for (int c : ks) append_seq(out, c, false);
    }
    seq.emplace(x, std::move(out));
  }

  if (t.kind_[r] == Kind::P) {
    std::vector<int> e, f, p;
    for (int c : t.kids_[r]) (status(c) == EMPTY ? e : status(c) == FULL ? f : p).push_back(c);
    if (p.size() > 2) return null_tree(n_);
    if (p.empty()) {
      e.push_back(group(f));
      t.kids_[r] = std::move(e);
    } else {
      std::vector<int> block;
      append_seq(block, p[0], false);
      if (!f.empty()) block.push_back(group(f));
      if (p.size() == 2) append_seq(block, p[1], true);
      if (e.empty()) {
        t.kind_[r] = Kind::Q;
        t.kids_[r] = std::move(block);
      } else {
        e.push_back(t.add(Kind::Q, std::move(block)));
        t.kids_[r] = std::move(e);
      }
    }
  } else {
    const auto& ks = t.kids_[r];
    int lo = 0, hi = static_cast<int>(ks.size()) - 1;
    while (status(ks[lo]) == EMPTY) ++lo;
    while (status(ks[hi]) == EMPTY) --hi;
    MODO_CHECK(lo < hi, "pertinent root is not the deepest");
    for (int i = lo + 1; i < hi; ++i)
      if (status(ks[i]) != FULL) return null_tree(n_);
    std::vector<int> out(ks.begin(), ks.begin() + lo);
    append_seq(out, ks[lo], false);
    out.insert(out.end(), ks.begin() + lo + 1, ks.begin() + hi);
    append_seq(out, ks[hi], true);
    out.insert(out.end(), ks.begin() + hi + 1, ks.end());
    t.kids_[r] = std::move(out);
  }
  t.finish();
  return t;
}

inline PQTree reduce(const PQTree& t, const std::vector<int>& s) { return t.reduced(s); }

// Sets whose consecutivity characterizes t: every non-root node's leaves and
// every pair of neighbouring Q-node children.
inline std::vector<std::vector<int>> consecutivity_constraints(const PQTree& t) {
  std::vector<std::vector<int>> out;
  if (t.is_null()) return out;
  for (int x = t.ground(); x < t.size(); ++x) {
    if (x != t.root()) out.push_back(t.frontier_of(x));
    if (t.kind(x) != PQTree::Kind::Q) continue;
    const auto& k = t.children(x);
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      auto a = t.frontier_of(k[i]), b = t.frontier_of(k[i + 1]);
      a.insert(a.end(), b.begin(), b.end());
      out.push_back(std::move(a));
    }
  }
  return out;
}

struct QContainment {
  int node = -1;  // containing orientable node of the intersection, -1 for other nodes
  bool forward = true;
};

struct PQIntersection {
  PQTree tree;
  // contained[i][x]: for orientable node x of input i, where it sits in `tree`.
  std::vector<std::vector<QContainment>> contained;
};

// Where each orientable node of `input` sits inside `out`, which must refine it.
// The container is the lca of the node's leaves; the direction compares the
// positions of its first and last child there.
inline std::vector<QContainment> locate_q_nodes(const PQTree& input, const PQTree& out) {
  std::vector<QContainment> rec(input.size());
  auto qs = input.orientable_nodes();
  if (qs.empty()) return rec;
  std::vector<std::vector<int>> kids(out.size());
  for (int x = 0; x < out.size(); ++x) kids[x] = out.children(x);
  detail::TreeIndex idx;
  idx.build(out.root(), kids);
  auto some_leaf = [&](int x) {
    while (!input.is_leaf(x)) x = input.children(x).front();
    return x;
  };
  for (int q : qs) {
    int a = some_leaf(input.children(q).front()), b = some_leaf(input.children(q).back());
    int y = idx.lca(a, b);
    MODO_CHECK(out.orientable(y), "orientable node not contained in an orientable node");
    rec[q] = {y, idx.child_toward(kids[y], a) < idx.child_toward(kids[y], b)};
  }
  return rec;
}

inline PQIntersection intersect(const std::vector<PQTree>& ts) {
  MODO_CHECK(!ts.empty(), "intersection of no trees");
  PQIntersection res;
  res.tree = ts[0];
  for (std::size_t j = 1; j < ts.size() && !res.tree.is_null(); ++j) {
    MODO_CHECK(ts[j].ground() == ts[0].ground(), "PQ-trees over different ground sets");
    if (ts[j].is_null()) res.tree = ts[j];
    for (const auto& s : consecutivity_constraints(ts[j])) {
      if (res.tree.is_null()) break;
      res.tree = res.tree.reduced(s);
    }
  }
  if (res.tree.is_null()) return res;
  for (const auto& t : ts) res.contained.push_back(locate_q_nodes(t, res.tree));
  return res;
}

// Parses P(..)/Q(..) text. Leaf names are looked up in `names`; when `names`
// is empty they are numbered in order of appearance and recorded there.
inline PQTree parse_pq(std::string_view text, std::vector<std::string>& names) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto word = [&] {
    skip();
    std::size_t b = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '-' ||
                               text[i] == '.'))
      ++i;
    if (b == i) throw input_error("PQ text: expected a name at offset " + std::to_string(b));
    return std::string(text.substr(b, i - b));
  };
  bool fixed = !names.empty();
  std::unordered_map<std::string, int> at;
  for (std::size_t k = 0; k < names.size(); ++k) at[names[k]] = static_cast<int>(k);

  std::vector<PQTree::Kind> kinds;
  std::vector<std::vector<int>> inner;  // inner node kids, leaves encoded as ~element
  std::vector<int> seen;
  // Returns ~element for a leaf, inner index otherwise.
  auto node = [&](auto&& self) -> int {
    std::string w = word();
    skip();
    if ((w == "P" || w == "Q") && i < text.size() && text[i] == '(') {
      ++i;
      int me = static_cast<int>(kinds.size());
      kinds.push_back(w == "P" ? PQTree::Kind::P : PQTree::Kind::Q);
      inner.emplace_back();
      for (;;) {
        int c = self(self);
        inner[me].push_back(c);
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw input_error("PQ text: expected ',' or ')' at offset " + std::to_string(i));
      }
      if (inner[me].size() < 2) throw input_error("PQ text: inner node with one child");
      return me;
    }
    auto it = at.find(w);
    if (it == at.end()) {
      if (fixed) throw input_error("PQ text: unknown element " + w);
      it = at.emplace(w, static_cast<int>(names.size())).first;
      names.push_back(w);
    }
    seen.push_back(it->second);
    return ~it->second;
  };

  skip();
  if (text.substr(i) == "NULL") {
    if (names.empty()) throw input_error("PQ text: NULL needs a known ground set");
    return PQTree::null_tree(static_cast<int>(names.size()));
  }
  int top = node(node);
  skip();
  if (i != text.size()) throw input_error("PQ text: trailing characters");
  int n = static_cast<int>(names.size());
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(seen.size()) != n || std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw input_error("PQ text: every element must appear exactly once");
  auto enc = [&](int c) { return c < 0 ? ~c : n + c; };
  std::vector<PQTree::Kind> kk(n, PQTree::Kind::Leaf);
  std::vector<std::vector<int>> kids(n);
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    kk.push_back(kinds[k]);
    std::vector<int> ch;
    for (int c : inner[k]) ch.push_back(enc(c));
    kids.push_back(std::move(ch));
  }
  return PQTree::from_nodes(n, enc(top), std::move(kk), std::move(kids));
}

}  // namespace modo
