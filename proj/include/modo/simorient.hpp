#pragma once

// Simultaneous transitive orientation of sunflower instances.
//
// Each input G_i is summarized as a constrained decomposition of the shared
// graph H: the canonical tree B of H, one PQ-tree per COMPLETE node of B
// (orders of that node's children) and a 2-CNF formula tying together the
// orientation choices of prime nodes and orientable PQ nodes. Intersecting
// these summaries and solving the formula yields an orientation of H that
// extends to every G_i.
//
// Every variable is a "reversed" flag: TRUE means the prime node uses the
// reversal of its default ranks, or the PQ node is reversed relative to its
// stored child order.
//
// The same machinery runs on complements without building them: the tree of
// a complement is the same tree with COMPLETE and EMPTY swapped, and a prime
// quotient's complement is oriented by separate ranks over its non-edges.

#include <string>
#include <utility>
#include <vector>

#include "mdecomp.hpp"
#include "orient.hpp"
#include "pqtree.hpp"
#include "twosat.hpp"

namespace modo {

struct ConstrainedMD {
  const MDTree* base = nullptr;
  bool co = false;                // constraints on the complement of base's graph
  NodeRanks defaults;             // default ranks of the PRIME nodes of base
  std::vector<int> prime_var;     // per base node; variable of a PRIME node, else -1
  std::vector<PQTree> pq;         // per base node; S for COMPLETE nodes (ground = child index)
  std::vector<std::vector<int>> flip_var;  // per base node, per PQ node: variable of an orientable node
  Formula2 formula;               // variables below `shared` are the prime_var of base
  int shared = 0;

  NodeKind kind(int mu) const { return co ? flip_kind(base->kind(mu)) : base->kind(mu); }

  // First COMPLETE node whose PQ-tree is null, or -1.
  int null_node() const {
    for (int mu = 0; mu < static_cast<int>(pq.size()); ++mu)
      if (kind(mu) == NodeKind::Complete && pq[mu].is_null()) return mu;
    return -1;
  }
};

namespace detail {

inline ConstrainedMD constraint_skeleton(const MDTree& b, const NodeRanks& defaults, bool co) {
  ConstrainedMD c;
  c.base = &b;
  c.co = co;
  c.defaults = defaults;
  c.prime_var.assign(b.size(), -1);
  c.pq.resize(b.size());
  c.flip_var.resize(b.size());
  for (int mu = b.n(); mu < b.size(); ++mu) {
    if (c.kind(mu) == NodeKind::Prime) c.prime_var[mu] = c.formula.add_var("B" + std::to_string(mu));
    else if (c.kind(mu) == NodeKind::Complete) c.pq[mu] = PQTree::universal(static_cast<int>(b.children(mu).size()));
  }
  c.shared = c.formula.vars();
  return c;
}

inline void add_flip_vars(ConstrainedMD& c, int mu, const std::string& tag) {
  const PQTree& t = c.pq[mu];
  c.flip_var[mu].assign(t.is_null() ? 0 : t.size(), -1);
  if (t.is_null()) return;
  for (int q : t.orientable_nodes())
    c.flip_var[mu][q] = c.formula.add_var(tag + std::to_string(mu) + "." + std::to_string(q));
}

inline void tie(Formula2& f, int a, int b, bool same) {
  if (same) f.iff(pos(a), pos(b));
  else f.differ(pos(a), pos(b));
}

// Children (a, b) of prime node mu that are adjacent in its quotient, or
// non-adjacent when `co` is set.
inline std::pair<int, int> quotient_pair(const MDTree& t, int mu, bool co) {
  const Graph& q = t.quotient(mu);
  if (!co) return q.edge(0);
  int k = q.n();
  for (int a = 0; a < k; ++a) {
    if (q.degree(a) == k - 1) continue;
    std::vector<char> near(k, 0);
    near[a] = 1;
    for (int w : q.adj(a)) near[w] = 1;
    for (int b = 0; b < k; ++b)
      if (!near[b]) return a < b ? std::pair{a, b} : std::pair{b, a};
  }
  MODO_CHECK(false, "prime quotient without a non-edge");
  return {};
}

}  // namespace detail

// Constraints that restriction r of an input decomposition places on B.
// r's leaves must be numbered like the vertices of H (= leaves of b). A
// complement restriction yields constraints on the complements, with
// `defaults` then holding complement ranks of b.
// mu_sets[mu], when given, overrides the maximal mu-set used for node mu.
inline ConstrainedMD build_constraints(const MDTree& b, const NodeRanks& defaults, const RestrictedMD& r,
                                       const std::vector<std::vector<int>>& mu_sets = {}) {
  MODO_CHECK(r.n() == b.n(), "restriction and base disagree on the shared vertex count");
  ConstrainedMD c = detail::constraint_skeleton(b, defaults, r.complement());
  auto chosen = [&](int mu) -> const std::vector<int>& {
    return mu < static_cast<int>(mu_sets.size()) && !mu_sets[mu].empty() ? mu_sets[mu] : b.mu_set(mu);
  };
  std::vector<int> tvar(r.size(), -1);
  auto source_var = [&](int x) {
    if (tvar[x] < 0) tvar[x] = c.formula.add_var("T" + std::to_string(r.stem(x)));
    return tvar[x];
  };
  auto precedes = [&](int x, int u, int v) {
    const auto& k = r.key(x);
    return k[r.child_toward(x, u)] < k[r.child_toward(x, v)];
  };

  // Prime nodes: one represented edge locates the prime source node and
  // compares the two default orientations on it.
  for (int mu = b.n(); mu < b.size(); ++mu) {
    if (c.kind(mu) != NodeKind::Prime) continue;
    const auto& u_set = chosen(mu);
    auto [ca, cb] = detail::quotient_pair(b, mu, c.co);
    int u = u_set[ca], v = u_set[cb];
    int x = r.lca(u, v);
    MODO_CHECK(r.label(x) == NodeKind::Prime, "prime node of the base restricts from a non-prime node");
    bool base_uv = defaults[mu][ca] < defaults[mu][cb];
    detail::tie(c.formula, c.prime_var[mu], source_var(x), base_uv == precedes(x, u, v));
  }

  // Complete nodes: sort every maximal mu-set by discovery time in one
  // counting pass, then build the active-node tree of each.
  const auto& idx = r.index();
  std::vector<int> complete;
  for (int mu = b.n(); mu < b.size(); ++mu)
    if (c.kind(mu) == NodeKind::Complete) complete.push_back(mu);
  std::vector<std::vector<int>> by_tin(2 * r.size());
  for (std::size_t i = 0; i < complete.size(); ++i)
    for (int v : chosen(complete[i])) by_tin[idx.tin(v)].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> sorted(complete.size());
  for (std::size_t t = 0; t < by_tin.size(); ++t)
    for (int i : by_tin[t]) sorted[i].push_back(static_cast<int>(t));
  std::vector<int> at_tin(2 * r.size(), -1);
  for (int x = 0; x < r.size(); ++x) at_tin[idx.tin(x)] = x;

  std::vector<int> elem(r.size(), -1), par(r.size(), -1);
  std::vector<std::vector<int>> kids(r.size());
  for (std::size_t i = 0; i < complete.size(); ++i) {
    int mu = complete[i];
    const auto& u_set = chosen(mu);
    for (int ci = 0; ci < static_cast<int>(u_set.size()); ++ci) elem[u_set[ci]] = ci;
    std::vector<int> leaves;
    for (int t : sorted[i]) leaves.push_back(at_tin[t]);

    // Active nodes: the leaves and the lca of each consecutive pair.
    std::vector<int> stack{leaves[0]}, touched{leaves[0]};
    auto attach = [&](int child, int parent) { par[child] = parent; };
    for (std::size_t j = 1; j < leaves.size(); ++j) {
      int v = leaves[j];
      int l = r.lca(stack.back(), v);
      while (!stack.empty() && idx.depth(stack.back()) > idx.depth(l)) {
        int top = stack.back();
        stack.pop_back();
        if (!stack.empty() && idx.depth(stack.back()) > idx.depth(l)) attach(top, stack.back());
        else attach(top, l);
      }
      if (stack.empty() || stack.back() != l) {
        stack.push_back(l);
        touched.push_back(l);
      }
      stack.push_back(v);
      touched.push_back(v);
    }
    for (std::size_t j = 1; j < stack.size(); ++j) attach(stack[j], stack[j - 1]);
    int top = stack[0];
    for (int x : touched)
      if (x != top) kids[par[x]].push_back(x);

    // Lay the active tree out as a PQ-tree, inner nodes numbered in BFS order.
    int k = static_cast<int>(u_set.size());
    std::vector<PQTree::Kind> kinds(k, PQTree::Kind::Leaf);
    std::vector<std::vector<int>> pkids(k);
    std::vector<int> order{top};
    std::vector<int> pid(r.size(), -1);
    for (std::size_t j = 0; j < order.size(); ++j) {
      int x = order[j];
      pid[x] = k + static_cast<int>(j);
      auto& ch = kids[x];
      NodeKind lab = r.label(x);
      MODO_CHECK(lab != NodeKind::Empty, "active node of a complete node is empty");
      if (lab == NodeKind::Prime) {
        const auto& key = r.key(x);
        std::sort(ch.begin(), ch.end(), [&](int p, int q) { return key[r.child_toward(x, p)] < key[r.child_toward(x, q)]; });
      } else {
        std::sort(ch.begin(), ch.end(), [&](int p, int q) { return idx.tin(p) < idx.tin(q); });
      }
      for (int y : ch)
        if (!r.is_leaf(y)) order.push_back(y);
    }
    for (int x : order) {
      kinds.push_back(r.label(x) == NodeKind::Prime ? PQTree::Kind::Q : PQTree::Kind::P);
      std::vector<int> ch;
      for (int y : kids[x]) ch.push_back(r.is_leaf(y) ? elem[y] : pid[y]);
      pkids.push_back(std::move(ch));
    }
    c.pq[mu] = PQTree::from_nodes(k, k, std::move(kinds), std::move(pkids));
    detail::add_flip_vars(c, mu, "S");
    for (std::size_t j = 0; j < order.size(); ++j) {
      int x = order[j], q = k + static_cast<int>(j);
      if (r.label(x) == NodeKind::Prime) {
        MODO_CHECK(c.pq[mu].orientable(q), "prime active node lost its order");
        detail::tie(c.formula, source_var(x), c.flip_var[mu][q], true);
      }
    }
    for (int x : touched) par[x] = -1, kids[x].clear();
    for (int v : u_set) elem[v] = -1;
  }
  return c;
}

// Conjunction of constrained decompositions sharing one base.
inline ConstrainedMD intersect_constraints(const std::vector<ConstrainedMD>& cs) {
  MODO_CHECK(!cs.empty(), "no constrained decompositions to intersect");
  const MDTree& b = *cs[0].base;
  ConstrainedMD out = detail::constraint_skeleton(b, cs[0].defaults, cs[0].co);
  std::vector<int> off;
  for (const auto& c : cs) {
    MODO_CHECK(c.base == &b && c.co == out.co && c.shared == out.shared,
               "constrained decompositions over different bases");
    off.push_back(out.formula.absorb(c.formula, c.shared));
  }
  auto local = [&](std::size_t i, int v) { return v < out.shared ? v : off[i] + (v - out.shared); };
  for (int mu = b.n(); mu < b.size(); ++mu) {
    if (out.kind(mu) != NodeKind::Complete) continue;
    std::vector<PQTree> ts;
    for (const auto& c : cs) ts.push_back(c.pq[mu]);
    auto res = intersect(ts);
    out.pq[mu] = std::move(res.tree);
    detail::add_flip_vars(out, mu, "I");
    if (out.pq[mu].is_null()) continue;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (int q : cs[i].pq[mu].orientable_nodes()) {
        auto [y, forward] = res.contained[i][q];
        detail::tie(out.formula, local(i, cs[i].flip_var[mu][q]), out.flip_var[mu][y], forward);
      }
  }
  return out;
}

// Ranks of base from a satisfying assignment of c.formula.
inline NodeRanks ranks_from_assignment(const ConstrainedMD& c, const std::vector<bool>& x) {
  const MDTree& b = *c.base;
  NodeRanks ranks(b.size());
  for (int mu = b.n(); mu < b.size(); ++mu) {
    if (c.kind(mu) == NodeKind::Prime) {
      ranks[mu] = c.defaults[mu];
      if (x[c.prime_var[mu]]) {
        int k = static_cast<int>(ranks[mu].size());
        for (auto& v : ranks[mu]) v = k - 1 - v;
      }
    } else if (c.kind(mu) == NodeKind::Complete) {
      const PQTree& t = c.pq[mu];
      std::vector<char> rev(t.size(), 0);
      for (int q : t.orientable_nodes()) rev[q] = x[c.flip_var[mu][q]];
      ranks[mu] = ranks_of(t.frontier(rev));
    }
  }
  return ranks;
}

inline Outcome<std::vector<Orientation>> sim_orient(const SunflowerInstance& inst) {
  if (auto v = validate_sunflower(inst); !v) throw input_error(v.diagnostic);
  const Graph& h = inst.shared;
  std::size_t r = inst.inputs.size();

  std::vector<MDTree> trees;
  std::vector<NodeRanks> defaults;
  trees.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    trees.emplace_back(inst.inputs[i]);
    auto d = default_ranks(trees.back());
    if (!d) return Infeasible{"not-comparability", "input graph " + std::to_string(i)};
    defaults.push_back(std::move(*d));
  }

  std::vector<Orientation> out;
  if (h.m() == 0) {
    for (std::size_t i = 0; i < r; ++i) out.push_back(orientation_by_node_ranks(trees[i], defaults[i]));
    return out;
  }

  MDTree b(h);
  auto bdef = default_ranks(b);
  if (!bdef) return Infeasible{"not-comparability", "shared graph"};
  std::vector<std::vector<int>> embed;
  std::vector<ConstrainedMD> cs;
  for (std::size_t i = 0; i < r; ++i) {
    embed.push_back(inst.embedding(i));
    RestrictedMD rest(trees[i], defaults[i], embed.back());
    cs.push_back(build_constraints(b, *bdef, rest));
  }
  ConstrainedMD all = intersect_constraints(cs);
  if (int mu = all.null_node(); mu >= 0) return Infeasible{"null-tree", "node " + std::to_string(mu)};
  auto x = solve(all.formula);
  if (!x) return Infeasible{"unsat", "2-SAT formula unsatisfiable"};

  Orientation oh = orientation_by_node_ranks(b, ranks_from_assignment(all, *x));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Edge> arcs;
    arcs.reserve(h.m());
    for (int e = 0; e < h.m(); ++e) arcs.emplace_back(embed[i][oh.tail(e)], embed[i][oh.head(e)]);
    auto o = orient_ext(trees[i], defaults[i], PartialOrientation(inst.inputs[i], arcs));
    MODO_CHECK(o.ok(), "shared orientation failed to extend to input " + std::to_string(i));
    out.push_back(std::move(*o));
  }
  return out;
}

}  // namespace modo
