#pragma once

// Brute-force references. Every routine here is a filter over an explicitly
// enumerated space and never calls the fast algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cperm.hpp"
#include "graph.hpp"
#include "perm.hpp"
#include "pqtree.hpp"
#include "reductions.hpp"
#include "simorient.hpp"
#include "twosat.hpp"

namespace modo::oracle {

struct EnumerationBudget {
  int max_vertices = 7;
  int max_edges = 20;
  long long max_tuples = 1ll << 24;
  int max_diagram_vertices = 6;
  int max_circular_vertices = 5;
};

struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Definitional transitivity: every directed 2-path closes.
inline bool transitive_naive(const Graph& g, const Orientation& o) {
  int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (u != w && o.directed(u, v) && o.directed(v, w) && !o.directed(u, w)) return false;
  return true;
}

inline std::vector<Orientation> enum_transitive_orientations(const Graph& g,
                                                             const EnumerationBudget& b = {}) {
  if (g.m() > b.max_edges) throw budget_exceeded("too many edges for orientation enumeration");
  std::vector<Orientation> out;
  Orientation o(g);
  for (std::uint32_t mask = 0; mask < (1u << g.m()); ++mask) {
    for (int e = 0; e < g.m(); ++e) o.set_forward(e, (mask >> e) & 1);
    if (transitive_naive(g, o)) out.push_back(o);
  }
  return out;
}

// Vertex set s is a module: every outside vertex sees all of s or none.
inline bool is_module(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(g.n(), 0);
  for (int v : s) in[v] = 1;
  for (int x = 0; x < g.n(); ++x) {
    if (in[x]) continue;
    int c = 0;
    for (int v : s) c += g.adjacent(x, v);
    if (c != 0 && c != static_cast<int>(s.size())) return false;
  }
  return true;
}

// Orientation restricted to a vertex subset, as (tail, head) pairs in subset order.
inline std::vector<Edge> restrict_arcs(const Orientation& o, const std::vector<int>& s) {
  std::vector<Edge> arcs;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    for (int j = 0; j < static_cast<int>(s.size()); ++j)
      if (o.directed(s[i], s[j])) arcs.emplace_back(i, j);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

// Every frontier of every equivalent tree, by explicit expansion.
inline std::set<std::vector<int>> frontiers(const PQTree& t, int max_ground = 8) {
  if (t.is_null()) return {};
  if (t.ground() > max_ground) throw budget_exceeded("ground set too large for frontier enumeration");
  std::vector<std::vector<std::vector<int>>> at(t.size());
  for (int x : t.postorder()) {
    if (t.is_leaf(x)) {
      at[x] = {{x}};
      continue;
    }
    std::vector<std::vector<int>> orders;
    std::vector<int> kids = t.children(x);
    std::vector<std::vector<int>> arrangements;
    if (t.kind(x) == PQTree::Kind::Q) {
      arrangements.push_back(kids);
      arrangements.emplace_back(kids.rbegin(), kids.rend());
    } else {
      std::sort(kids.begin(), kids.end());
      do arrangements.push_back(kids);
      while (std::next_permutation(kids.begin(), kids.end()));
    }
    for (const auto& arr : arrangements) {
      std::vector<std::vector<int>> partial{{}};
      for (int c : arr) {
        std::vector<std::vector<int>> next;
        for (const auto& p : partial)
          for (const auto& tail : at[c]) {
            auto q = p;
            q.insert(q.end(), tail.begin(), tail.end());
            next.push_back(std::move(q));
          }
        partial = std::move(next);
      }
      orders.insert(orders.end(), partial.begin(), partial.end());
    }
    at[x] = std::move(orders);
  }
  return {at[t.root()].begin(), at[t.root()].end()};
}

// Orders of {0..n-1} in which every listed set is consecutive.
inline std::set<std::vector<int>> consecutive_orders(int n, const std::vector<std::vector<int>>& sets) {
  std::set<std::vector<int>> out;
  std::vector<int> perm(n), pos(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (const auto& s : sets) {
      int lo = n, hi = -1;
      for (int x : s) lo = std::min(lo, pos[x]), hi = std::max(hi, pos[x]);
      if (!s.empty() && hi - lo + 1 != static_cast<int>(std::set<int>(s.begin(), s.end()).size())) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Truth-table satisfiability; first satisfying assignment in binary order.
inline std::optional<std::vector<bool>> truth_table(const Formula2& f, int max_vars = 20) {
  if (f.vars() > max_vars) throw budget_exceeded("too many variables for a truth table");
  std::vector<bool> x(f.vars());
  for (std::uint32_t mask = 0; mask < (1u << f.vars()); ++mask) {
    for (int v = 0; v < f.vars(); ++v) x[v] = mask >> v & 1;
    if (f.satisfied_by(x)) return x;
  }
  return std::nullopt;
}

// Every (frontier, orientable-node flips) pair of t reachable by permuting
// P-nodes with three or more children and reversing orientable nodes.
inline std::vector<std::pair<std::vector<int>, std::vector<char>>> frontiers_with_flips(const PQTree& t) {
  std::vector<std::pair<std::vector<int>, std::vector<char>>> out;
  if (t.is_null()) return out;
  auto ors = t.orientable_nodes();
  std::vector<int> wide;
  for (int x = t.ground(); x < t.size(); ++x)
    if (!t.orientable(x)) wide.push_back(x);
  // P-node permutations are applied by rebuilding child lists.
  std::vector<std::vector<int>> kids(t.size());
  for (int x = 0; x < t.size(); ++x) kids[x] = t.children(x);
  auto emit = [&](std::uint32_t mask) {
    std::vector<char> rev(t.size(), 0);
    for (std::size_t i = 0; i < ors.size(); ++i) rev[ors[i]] = mask >> i & 1;
    std::vector<int> order, st{t.root()};
    while (!st.empty()) {
      int y = st.back();
      st.pop_back();
      if (t.is_leaf(y)) {
        order.push_back(y);
        continue;
      }
      if (rev[y]) st.insert(st.end(), kids[y].begin(), kids[y].end());
      else st.insert(st.end(), kids[y].rbegin(), kids[y].rend());
    }
    out.emplace_back(std::move(order), std::move(rev));
  };
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == wide.size()) {
      for (std::uint32_t mask = 0; mask < (1u << ors.size()); ++mask) emit(mask);
      return;
    }
    auto& k = kids[wide[i]];
    std::sort(k.begin(), k.end());
    do self(self, i + 1);
    while (std::next_permutation(k.begin(), k.end()));
  };
  walk(walk, 0);
  return out;
}

// Orientations of H (the base graph of c) the constrained decomposition
// represents: every choice per node, kept when the formula stays satisfiable
// with the induced flags fixed.
inline std::set<Orientation> to_set(const ConstrainedMD& c, int max_vertices = 6) {
  const MDTree& b = *c.base;
  const Graph& h = b.graph();
  if (h.n() > max_vertices) throw budget_exceeded("shared graph too large for to_set");
  if (c.co) throw std::invalid_argument("to_set enumerates orientations of the shared graph itself");
  std::set<Orientation> out;
  if (c.null_node() >= 0) return out;
  struct Choice {
    std::vector<int> rank;
    std::vector<std::pair<int, bool>> fixes;
  };
  std::vector<int> nodes;
  std::vector<std::vector<Choice>> options;
  for (int mu = b.n(); mu < b.size(); ++mu) {
    int k = static_cast<int>(b.children(mu).size());
    if (b.kind(mu) == NodeKind::Prime) {
      std::vector<int> rev(k);
      for (int i = 0; i < k; ++i) rev[i] = k - 1 - c.defaults[mu][i];
      options.push_back({{c.defaults[mu], {{c.prime_var[mu], false}}}, {rev, {{c.prime_var[mu], true}}}});
    } else if (b.kind(mu) == NodeKind::Complete) {
      std::vector<Choice> opts;
      for (auto& [order, rev] : frontiers_with_flips(c.pq[mu])) {
        Choice ch;
        ch.rank.assign(k, 0);
        for (int i = 0; i < k; ++i) ch.rank[order[i]] = i;
        for (int q : c.pq[mu].orientable_nodes()) ch.fixes.emplace_back(c.flip_var[mu][q], rev[q] != 0);
        opts.push_back(std::move(ch));
      }
      options.push_back(std::move(opts));
    } else {
      continue;
    }
    nodes.push_back(mu);
  }
  std::vector<std::size_t> pick(nodes.size(), 0);
  for (;;) {
    Formula2 f = c.formula;
    std::vector<std::vector<int>> rank(b.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& ch = options[i][pick[i]];
      rank[nodes[i]] = ch.rank;
      for (auto [v, val] : ch.fixes) f.fix(val ? pos(v) : neg(v));
    }
    if (truth_table(f, 24)) {
      Orientation o(h);
      for (int e = 0; e < h.m(); ++e) {
        auto [u, v] = h.edge(e);
        int mu = b.lca(u, v);
        o.set_forward(e, rank[mu][b.child_toward(mu, u)] < rank[mu][b.child_toward(mu, v)]);
      }
      out.insert(o);
    }
    std::size_t i = 0;
    while (i < nodes.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == nodes.size()) break;
  }
  return out;
}

// Brute-force sunflower orientation: an agreeing tuple of transitive
// orientations, one per input, or nullopt.
inline std::optional<std::vector<Orientation>> brute_simorient(const SunflowerInstance& inst,
                                                              const EnumerationBudget& budget = {}) {
  const Graph& h = inst.shared;
  std::size_t r = inst.inputs.size();
  // H-edge direction signature of each orientation, per input
  std::vector<std::map<std::vector<char>, Orientation>> by_sig(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Graph& g = inst.inputs[i];
    if (g.n() > budget.max_vertices) throw budget_exceeded("input graph too large");
    std::vector<int> at(h.n());
    for (int v = 0; v < h.n(); ++v) at[v] = g.require(h.id(v));
    for (auto& o : enum_transitive_orientations(g, budget)) {
      std::vector<char> sig(h.m());
      for (int e = 0; e < h.m(); ++e) sig[e] = o.directed(at[h.edge(e).first], at[h.edge(e).second]);
      by_sig[i].emplace(std::move(sig), o);
    }
  }
  if (r == 0) return std::vector<Orientation>{};
  for (auto& [sig, o0] : by_sig[0]) {
    std::vector<Orientation> tuple{o0};
    for (std::size_t i = 1; i < r; ++i) {
      auto it = by_sig[i].find(sig);
      if (it == by_sig[i].end()) break;
      tuple.push_back(it->second);
    }
    if (tuple.size() == r) return tuple;
  }
  return std::nullopt;
}

// Every (top, bottom) pair of orders of V(g) whose crossings are exactly E(g).
inline std::vector<PermDiagram> enum_perm_diagrams(const Graph& g, const EnumerationBudget& budget = {}) {
  int n = g.n();
  if (n > budget.max_diagram_vertices) throw budget_exceeded("too many vertices for diagram enumeration");
  std::vector<std::vector<int>> orders, pos;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    orders.push_back(p);
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[p[i]] = i;
    pos.push_back(at);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<PermDiagram> out;
  for (std::size_t a = 0; a < orders.size(); ++a)
    for (std::size_t b = 0; b < orders.size(); ++b) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        for (int v = u + 1; v < n && ok; ++v)
          ok = ((pos[a][u] < pos[a][v]) != (pos[b][u] < pos[b][v])) == (adj[u][v] != 0);
      if (ok) out.emplace_back(orders[a], orders[b]);
    }
  return out;
}

// Some diagram of g restricting to `partial`, by exhaustive search.
inline std::optional<PermDiagram> brute_rep_ext_perm(const Graph& g, const PermDiagram& partial,
                                                     const EnumerationBudget& budget = {}) {
  std::vector<char> keep(g.n(), 0);
  for (int v : partial.top()) keep[v] = 1;
  for (auto& d : enum_perm_diagrams(g, budget))
    if (d.restricted(keep) == partial) return d;
  return std::nullopt;
}

// Diagrams of all inputs with identical restrictions to the shared vertices.
inline std::optional<std::vector<PermDiagram>> brute_sunflower_perm(const SunflowerInstance& inst,
                                                                    const EnumerationBudget& budget = {}) {
  const Graph& h = inst.shared;
  std::size_t r = inst.inputs.size();
  std::vector<std::map<PermDiagram, PermDiagram>> by_trace(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Graph& g = inst.inputs[i];
    std::vector<char> keep(g.n(), 0);
    std::vector<int> to_h(g.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
      int x = g.require(h.id(v));
      keep[x] = 1;
      to_h[x] = v;
    }
    for (auto& d : enum_perm_diagrams(g, budget)) by_trace[i].emplace(d.restricted(keep).renamed(to_h), d);
  }
  if (r == 0) return std::vector<PermDiagram>{};
  for (auto& [trace, d0] : by_trace[0]) {
    std::vector<PermDiagram> tuple{d0};
    for (std::size_t i = 1; i < r; ++i) {
      auto it = by_trace[i].find(trace);
      if (it == by_trace[i].end()) break;
      tuple.push_back(it->second);
    }
    if (tuple.size() == r) return tuple;
  }
  return std::nullopt;
}

// Every cut-form diagram (outer, inner, wrapped) whose crossings are E(g).
inline std::vector<CPermDiagram> enum_cperm_diagrams(const Graph& g, const EnumerationBudget& budget = {}) {
  int n = g.n();
  if (n > budget.max_circular_vertices) throw budget_exceeded("too many vertices for circular diagram enumeration");
  std::vector<std::vector<int>> orders, pos;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    orders.push_back(p);
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[p[i]] = i;
    pos.push_back(at);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<CPermDiagram> out;
  for (std::size_t a = 0; a < orders.size(); ++a)
    for (std::size_t b = 0; b < orders.size(); ++b)
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
          for (int v = u + 1; v < n && ok; ++v) {
            bool differ = (pos[a][u] < pos[a][v]) != (pos[b][u] < pos[b][v]);
            bool one_wrapped = ((mask >> u) & 1) != ((mask >> v) & 1);
            ok = (differ != one_wrapped) == (adj[u][v] != 0);
          }
        if (!ok) continue;
        std::vector<int> w;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) w.push_back(v);
        out.emplace_back(orders[a], orders[b], w);
      }
  return out;
}

// Some diagram of g with the partial's cyclic orders, by exhaustive search.
inline std::optional<CPermDiagram> brute_rep_ext_cperm(const Graph& g, const CPermDiagram& partial,
                                                       const EnumerationBudget& budget = {}) {
  std::vector<char> keep(g.n(), 0);
  for (int v : partial.outer()) keep[v] = 1;
  auto want_o = cyclic_normal(partial.outer()), want_i = cyclic_normal(partial.inner());
  for (auto& c : enum_cperm_diagrams(g, budget)) {
    auto r = c.restricted(keep);
    if (cyclic_normal(r.outer()) == want_o && cyclic_normal(r.inner()) == want_i) return c;
  }
  return std::nullopt;
}

// Circular diagrams of all inputs with equal cyclic orders on the shared vertices.
inline std::optional<std::vector<CPermDiagram>> brute_sunflower_cperm(const SunflowerInstance& inst,
                                                                      const EnumerationBudget& budget = {}) {
  const Graph& h = inst.shared;
  std::size_t r = inst.inputs.size();
  using Trace = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<std::map<Trace, CPermDiagram>> by_trace(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Graph& g = inst.inputs[i];
    std::vector<char> keep(g.n(), 0);
    std::vector<int> to_h(g.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
      int x = g.require(h.id(v));
      keep[x] = 1;
      to_h[x] = v;
    }
    for (auto& c : enum_cperm_diagrams(g, budget)) {
      auto t = c.restricted(keep).renamed(to_h);
      by_trace[i].emplace(Trace{cyclic_normal(t.outer()), cyclic_normal(t.inner())}, c);
    }
  }
  if (r == 0) return std::vector<CPermDiagram>{};
  for (auto& [trace, c0] : by_trace[0]) {
    std::vector<CPermDiagram> tuple{c0};
    for (std::size_t i = 1; i < r; ++i) {
      auto it = by_trace[i].find(trace);
      if (it == by_trace[i].end()) break;
      tuple.push_back(it->second);
    }
    if (tuple.size() == r) return tuple;
  }
  return std::nullopt;
}

// Some order of the elements satisfying every betweenness triple.
inline std::optional<std::vector<std::string>> brute_total_ordering(const TotalOrderingInstance& inst) {
  inst.validate();
  auto order = inst.elements;
  std::sort(order.begin(), order.end());
  do {
    if (inst.satisfied_by(order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// Transitive orientations of every graph agreeing on each edge any two of them
// share (edges matched by endpoint ids). No sunflower structure assumed.
inline std::optional<std::vector<Orientation>> brute_simorient(const std::vector<Graph>& gs,
                                                              const EnumerationBudget& budget = {}) {
  std::size_t r = gs.size();
  std::vector<std::vector<Orientation>> tos(r);
  long long tuples = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (gs[i].n() > budget.max_vertices) throw budget_exceeded("input graph too large");
    tos[i] = enum_transitive_orientations(gs[i], budget);
    if (tos[i].empty()) return std::nullopt;
    tuples *= static_cast<long long>(tos[i].size());
    if (tuples > budget.max_tuples) throw budget_exceeded("too many orientation tuples");
  }
  // shared[k]: (j < k, edge in j, edge in k, same endpoint order)
  struct Shared {
    std::size_t j;
    int ej, ek;
    bool same;
  };
  std::vector<std::vector<Shared>> shared(r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (int ek = 0; ek < gs[k].m(); ++ek) {
        auto [u, v] = gs[k].edge(ek);
        int uj = gs[j].index_of(gs[k].id(u)), vj = gs[j].index_of(gs[k].id(v));
        if (uj < 0 || vj < 0) continue;
        int ej = gs[j].edge_id(uj, vj);
        if (ej >= 0) shared[k].push_back({j, ej, ek, uj < vj});
      }
  std::vector<std::size_t> pick(r, 0);
  std::size_t k = 0;
  auto fits = [&](std::size_t k) {
    const Orientation& o = tos[k][pick[k]];
    for (const auto& s : shared[k])
      if ((tos[s.j][pick[s.j]].forward(s.ej) == o.forward(s.ek)) != s.same) return false;
    return true;
  };
  // iterative backtracking over the tuple space
  while (true) {
    if (k == r) {
      std::vector<Orientation> out;
      for (std::size_t i = 0; i < r; ++i) out.push_back(tos[i][pick[i]]);
      return out;
    }
    if (pick[k] < tos[k].size() && fits(k)) {
      ++k;
      continue;
    }
    while (pick[k] + 1 >= tos[k].size()) {
      if (k == 0) return std::nullopt;
      pick[k] = 0;
      --k;
    }
    ++pick[k];
  }
}

}  // namespace modo::oracle
