#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <vector>

namespace modo::detail {

// DFS timestamps plus Euler-tour/sparse-table LCA over a rooted tree given as
// child lists. Children are visited in list order, so the discovery times of a
// node's children are increasing along its child list.
class TreeIndex {
 public:
  TreeIndex() = default;

  void build(int root, const std::vector<std::vector<int>>& children) {
    int n = static_cast<int>(children.size());
    tin_.assign(n, -1);
    tout_.assign(n, -1);
    depth_.assign(n, 0);
    first_.assign(n, -1);
    euler_.clear();
    euler_.reserve(2 * n);
    int clock = 0;
    std::vector<std::pair<int, int>> st{{root, 0}};
    tin_[root] = clock++;
    first_[root] = 0;
    euler_.push_back(root);
    while (!st.empty()) {
      auto& [x, i] = st.back();
      if (i < static_cast<int>(children[x].size())) {
        int c = children[x][i++];
        depth_[c] = depth_[x] + 1;
        tin_[c] = clock++;
        first_[c] = static_cast<int>(euler_.size());
        euler_.push_back(c);
        st.emplace_back(c, 0);
      } else {
        tout_[x] = clock++;
        st.pop_back();
        if (!st.empty()) euler_.push_back(st.back().first);
      }
    }
    build_table();
  }

  int lca(int a, int b) const {
    int l = first_[a], r = first_[b];
    if (l > r) std::swap(l, r);
    int k = std::bit_width(static_cast<unsigned>(r - l + 1)) - 1;
    int x = table_[k][l], y = table_[k][r - (1 << k) + 1];
    return depth_[x] <= depth_[y] ? x : y;
  }
  bool is_ancestor(int a, int b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }
  int tin(int x) const { return tin_[x]; }
  int tout(int x) const { return tout_[x]; }
  int depth(int x) const { return depth_[x]; }

  // Position in `kids` of the child subtree containing descendant x.
  int child_toward(const std::vector<int>& kids, int x) const {
    auto it = std::upper_bound(kids.begin(), kids.end(), tin_[x],
                               [&](int t, int c) { return t < tin_[c]; });
    assert(it != kids.begin());
    return static_cast<int>(it - kids.begin()) - 1;
  }

 private:
  void build_table() {
    int len = static_cast<int>(euler_.size());
    int levels = std::bit_width(static_cast<unsigned>(len));
    table_.assign(levels, {});
    table_[0] = euler_;
    for (int k = 1; k < levels; ++k) {
      int span = 1 << k, half = span >> 1;
      table_[k].resize(len - span + 1);
      for (int i = 0; i + span <= len; ++i) {
        int x = table_[k - 1][i], y = table_[k - 1][i + half];
        table_[k][i] = depth_[x] <= depth_[y] ? x : y;
      }
    }
  }

  std::vector<int> tin_, tout_, depth_, first_, euler_;
  std::vector<std::vector<int>> table_;
};

// Union-find with union by rank and path compression.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0) : parent_(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    int r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      int nx = parent_[x];
      parent_[x] = r;
      x = nx;
    }
    return r;
  }
  int unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

 private:
  std::vector<int> parent_, rank_;
};

}  // namespace modo::detail
