#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "modo/graph.hpp"

namespace testkit {

using modo::Edge;
using modo::Graph;

inline Graph make(const std::vector<std::string>& ids, const std::vector<std::pair<std::string, std::string>>& es) {
  return Graph::from_labeled(ids, es);
}

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}
inline Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}
inline Graph clique(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

inline bool connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : g.adj(x))
      if (!seen[y]) seen[y] = 1, ++cnt, st.push_back(y);
  }
  return cnt == g.n();
}

// Graphs on n vertices up to isomorphism, smallest-mask representatives.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  int s = static_cast<int>(slots.size());
  std::vector<std::vector<int>> maps;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Edge, int> at;
  for (int i = 0; i < s; ++i) at[slots[i]] = i;
  do {
    std::vector<int> mp(s);
    for (int i = 0; i < s; ++i) {
      int a = perm[slots[i].first], b = perm[slots[i].second];
      mp[i] = at[{std::min(a, b), std::max(a, b)}];
    }
    maps.push_back(mp);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<char> done(1u << s, 0);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    if (done[mask]) continue;
    for (auto& mp : maps) {
      std::uint32_t img = 0;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1) img |= 1u << mp[i];
      done[img] = 1;
    }
    std::vector<Edge> es;
    for (int i = 0; i < s; ++i)
      if (mask >> i & 1) es.push_back(slots[i]);
    out.push_back(Graph::from_edges(n, es));
  }
  return out;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (connected(g)) out.push_back(g);
  return out;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

// Permutation graph of a random permutation: i ~ j iff their order flips.
inline Graph random_permutation_graph(int n, std::mt19937& rng) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pi[i] > pi[j]) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

inline std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// All subsets of {0..n-1} as sorted index lists (nonempty).
inline std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Random sunflower: shared graph on `shared` vertices s0.., each input adds
// private vertices p<i>_<j> (at most `max_n` vertices per input).
inline modo::SunflowerInstance random_sunflower(int shared, int inputs, int max_n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> sid;
  for (int i = 0; i < shared; ++i) sid.push_back("s" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> hes;
  for (int i = 0; i < shared; ++i)
    for (int j = i + 1; j < shared; ++j)
      if (coin(rng)) hes.emplace_back(sid[i], sid[j]);
  modo::SunflowerInstance inst{make(sid, hes), {}};
  for (int k = 0; k < inputs; ++k) {
    int extra = static_cast<int>(rng() % (max_n - shared + 1));
    auto ids = sid;
    for (int j = 0; j < extra; ++j) ids.push_back("p" + std::to_string(k) + "_" + std::to_string(j));
    auto es = hes;
    for (int i = shared; i < static_cast<int>(ids.size()); ++i)
      for (int j = 0; j < i; ++j)
        if (coin(rng)) es.emplace_back(ids[j], ids[i]);
    inst.inputs.push_back(make(ids, es));
  }
  return inst;
}

// The two-private-vertex gadget: x-a, x-y, x-z, y-z, z-b.
inline Graph gadget(const std::string& x, const std::string& y, const std::string& z, const std::string& a,
                    const std::string& b) {
  return make({x, y, z, a, b}, {{x, a}, {x, y}, {x, z}, {y, z}, {z, b}});
}

}  // namespace testkit
