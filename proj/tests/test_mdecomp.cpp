#include <gtest/gtest.h>

#include <functional>

#include "modo/mdecomp.hpp"
#include "modo/oracle.hpp"
#include "modo/orient.hpp"
#include "support.hpp"

using namespace modo;

namespace {

std::set<std::vector<int>> tree_sets(const MDTree& t) {
  std::set<std::vector<int>> out;
  for (int x = 0; x < t.size(); ++x) {
    auto l = t.leaves(x);
    std::vector<int> s(l.begin(), l.end());
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

// Strong modules: modules overlapping no other module.
std::set<std::vector<int>> strong_modules(const Graph& g) {
  int n = g.n();
  std::vector<std::uint32_t> mods;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (oracle::is_module(g, s)) mods.push_back(mask);
  }
  std::set<std::vector<int>> out;
  for (auto a : mods) {
    bool strong = true;
    for (auto b : mods)
      if ((a & b) && (a & ~b) && (b & ~a)) strong = false;
    if (!strong) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (a >> i & 1) s.push_back(i);
    out.insert(s);
  }
  return out;
}

bool quotient_is_prime(const Graph& q) {
  if (q.n() < 3) return false;
  for (std::uint32_t mask = 1; mask + 1 < (1u << q.n()); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> s;
    for (int i = 0; i < q.n(); ++i)
      if (mask >> i & 1) s.push_back(i);
    if (oracle::is_module(q, s)) return false;
  }
  return true;
}

void check_structure(const Graph& g, const MDTree& t, bool brute_prime) {
  ASSERT_LE(t.size(), 2 * g.n() - 1);
  for (int x = g.n(); x < t.size(); ++x) {
    auto l = t.leaves(x);
    ASSERT_TRUE(oracle::is_module(g, std::vector<int>(l.begin(), l.end())));
    const Graph& q = t.quotient(x);
    int k = q.n();
    ASSERT_EQ(k, static_cast<int>(t.children(x).size()));
    ASSERT_GE(k, 2);
    switch (t.kind(x)) {
      case NodeKind::Empty: ASSERT_EQ(q.m(), 0); break;
      case NodeKind::Complete: ASSERT_EQ(q.m(), k * (k - 1) / 2); break;
      case NodeKind::Prime:
        if (brute_prime) ASSERT_TRUE(quotient_is_prime(q));
        break;
      default: FAIL();
    }
    for (int c : t.children(x)) {
      ASSERT_EQ(t.parent(c), x);
      if (t.kind(x) != NodeKind::Prime) ASSERT_NE(t.kind(c), t.kind(x));
    }
    const auto& ms = t.mu_set(x);
    for (int i = 0; i < k; ++i) ASSERT_EQ(t.child_toward(x, ms[i]), i);
  }
  // every edge represented once, at the lca, between the right children
  std::vector<int> hits(g.m(), 0);
  for (int x = g.n(); x < t.size(); ++x)
    for (int qe = 0; qe < t.quotient(x).m(); ++qe)
      for (int e : t.represented(x, qe)) {
        ++hits[e];
        auto [u, v] = g.edge(e);
        auto r = t.rep_edge(u, v);
        ASSERT_EQ(r.node, x);
        ASSERT_EQ(r.node, t.lca(u, v));
        ASSERT_EQ(r.qedge, qe);
        ASSERT_EQ(r.child_u, t.child_toward(x, u));
        ASSERT_EQ(r.child_v, t.child_toward(x, v));
      }
  for (int e = 0; e < g.m(); ++e) ASSERT_EQ(hits[e], 1);
}

}  // namespace

TEST(MDecomp, FourCycle) {
  Graph g = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  MDTree t(g);
  int r = t.root();
  EXPECT_EQ(t.kind(r), NodeKind::Complete);
  ASSERT_EQ(t.children(r).size(), 2u);
  auto s = tree_sets(t);
  EXPECT_TRUE(s.count({0, 2}));
  EXPECT_TRUE(s.count({1, 3}));
  for (int c : t.children(r)) EXPECT_EQ(t.kind(c), NodeKind::Empty);

  auto rep = t.rep_edge(g.require("a"), g.require("b"));
  EXPECT_EQ(rep.node, r);
  EXPECT_EQ(t.leaves(t.children(r)[rep.child_u]).size(), 2u);
  EXPECT_EQ(t.child_toward(r, g.require("a")), rep.child_u);
  EXPECT_THROW(t.rep_edge(g.require("a"), g.require("c")), input_error);
}

TEST(MDecomp, PathAndClique) {
  Graph gp = testkit::path(4);
  MDTree p4(gp);
  EXPECT_EQ(p4.kind(p4.root()), NodeKind::Prime);
  EXPECT_EQ(p4.children(p4.root()).size(), 4u);
  EXPECT_EQ(p4.mu_set(p4.root()), (std::vector<int>{0, 1, 2, 3}));
  auto rep = p4.rep_edge(1, 2);
  EXPECT_EQ(rep.node, p4.root());

  Graph gk3 = testkit::clique(3);
  MDTree k3(gk3);
  EXPECT_EQ(k3.kind(k3.root()), NodeKind::Complete);
  EXPECT_EQ(k3.children(k3.root()).size(), 3u);

  Graph gk2 = testkit::clique(2);
  MDTree k2(gk2);
  EXPECT_EQ(k2.mu_set(k2.root()).size(), 2u);
  EXPECT_THROW(k2.mu_set(0), input_error);

  Graph g1 = Graph::from_edges(1, {});
  MDTree one(g1);
  EXPECT_EQ(one.root(), 0);
  EXPECT_EQ(one.size(), 1);
}

TEST(MDecomp, DisconnectedAndCoDisconnected) {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  MDTree t(g);
  EXPECT_EQ(t.kind(t.root()), NodeKind::Empty);
  EXPECT_EQ(t.children(t.root()).size(), 2u);
  Graph gc = complement(g);
  MDTree c(gc);
  EXPECT_EQ(c.kind(c.root()), NodeKind::Complete);
}

TEST(MDecomp, MatchesStrongModulesExhaustively) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      MDTree t(g);
      check_structure(g, t, true);
      ASSERT_EQ(tree_sets(t), strong_modules(g));
    }
}

TEST(MDecomp, RandomLargerGraphs) {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + rng() % 9;
    double p = std::uniform_real_distribution<>(0.05, 0.95)(rng);
    Graph g = testkit::random_graph(n, p, rng);
    MDTree t(g);
    check_structure(g, t, true);
    ASSERT_EQ(tree_sets(t), strong_modules(g));
  }
  for (int rep = 0; rep < 40; ++rep) {
    int n = 20 + rng() % 60;
    Graph g = rep % 2 ? testkit::random_permutation_graph(n, rng)
                      : testkit::random_graph(n, std::uniform_real_distribution<>(0.02, 0.5)(rng), rng);
    MDTree t(g);
    check_structure(g, t, false);
  }
}

TEST(MDecomp, NestedCographDepth) {
  // alternating joins and unions: a chain of degenerate nodes
  std::vector<Edge> es;
  int n = 200;
  for (int v = 1; v < n; ++v)
    if (v % 2)
      for (int u = 0; u < v; ++u) es.emplace_back(u, v);
  Graph g = Graph::from_edges(n, es);
  MDTree t(g);
  check_structure(g, t, false);
  EXPECT_EQ(t.size(), 2 * n - 1);
}

TEST(MDecomp, OrientationsFromTree) {
  Graph c4 = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  MDTree t(c4);
  std::vector<Orientation> per(t.size());
  int r = t.root();
  per[r] = Orientation(t.quotient(r));  // child 0 -> child 1
  int ac = t.child_toward(r, c4.require("a"));
  if (ac != 0) per[r] = per[r].reversed();
  Orientation o = orientations_from_tree(t, per);
  EXPECT_TRUE(o.directed(c4.require("a"), c4.require("b")));
  EXPECT_TRUE(o.directed(c4.require("a"), c4.require("d")));
  EXPECT_TRUE(o.directed(c4.require("c"), c4.require("b")));
  EXPECT_TRUE(o.directed(c4.require("c"), c4.require("d")));
  EXPECT_TRUE(is_transitive(c4, o));
  EXPECT_THROW(orientations_from_tree(t, {}), input_error);
}

namespace {

// Enumerate TO of a restricted decomposition as sorted arc lists over H.
std::set<std::vector<Edge>> restricted_orientations(const RestrictedMD& r, const Graph& h) {
  std::vector<int> inner;
  for (int x = r.n(); x < r.size(); ++x) inner.push_back(x);
  std::vector<std::vector<int>> choice(r.size());
  std::set<std::vector<Edge>> out;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == inner.size()) {
      std::vector<Edge> arcs;
      for (int e = 0; e < h.m(); ++e) {
        auto [u, v] = h.edge(e);
        int x = r.lca(u, v);
        int a = r.child_toward(x, u), b = r.child_toward(x, v);
        EXPECT_NE(r.label(x), NodeKind::Empty);
        bool fwd = choice[x][a] < choice[x][b];
        arcs.push_back(fwd ? Edge{u, v} : Edge{v, u});
      }
      std::sort(arcs.begin(), arcs.end());
      out.insert(arcs);
      return;
    }
    int x = inner[i];
    int k = static_cast<int>(r.children(x).size());
    if (r.label(x) == NodeKind::Complete) {
      std::vector<int> perm = testkit::iota_vec(k);
      do {
        choice[x] = perm;
        go(i + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else if (r.label(x) == NodeKind::Prime) {
      choice[x] = r.key(x);
      go(i + 1);
      for (auto& c : choice[x]) c = -c;
      go(i + 1);
    } else {
      choice[x].assign(k, 0);
      go(i + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

TEST(MDecomp, RestrictExamples) {
  Graph p4 = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  MDTree t(p4);
  auto ranks = default_ranks(t);
  ASSERT_TRUE(ranks);
  RestrictedMD r(t, *ranks, {0, 1, 2});
  EXPECT_EQ(r.label(r.root()), NodeKind::Prime);
  EXPECT_EQ(r.children(r.root()).size(), 3u);

  Graph c4 = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  MDTree tc(c4);
  RestrictedMD rc(tc, NodeRanks(tc.size()), {0, 1});
  EXPECT_EQ(rc.label(rc.root()), NodeKind::Complete);
  EXPECT_EQ(rc.size(), 3);

  RestrictedMD whole(tc, NodeRanks(tc.size()), {0, 1, 2, 3});
  EXPECT_EQ(whole.size(), tc.size());
}

TEST(MDecomp, RestrictionMatchesRestrictedOrientations) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      auto all = oracle::enum_transitive_orientations(g);
      if (all.empty()) continue;
      MDTree t(g);
      auto ranks = default_ranks(t);
      ASSERT_TRUE(ranks);
      for (auto& s : testkit::subsets(n)) {
        Graph h = induced_subgraph(g, s);
        RestrictedMD r(t, *ranks, s);
        std::set<std::vector<Edge>> want;
        for (auto& o : all) want.insert(oracle::restrict_arcs(o, s));
        ASSERT_EQ(restricted_orientations(r, h), want);
      }
    }
}
