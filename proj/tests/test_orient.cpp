#include <gtest/gtest.h>

#include "modo/oracle.hpp"
#include "modo/orient.hpp"
#include "support.hpp"

using namespace modo;

namespace {

Graph p4() { return testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}); }

Graph gadget() {
  return testkit::make({"x", "y", "z", "a", "b"},
                       {{"x", "a"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"z", "b"}});
}

bool prime(const Graph& g) {
  MDTree t(g);
  return t.kind(t.root()) == NodeKind::Prime && static_cast<int>(t.children(t.root()).size()) == g.n();
}

}  // namespace

TEST(Orient, PrimeDefaultExamples) {
  Graph g = p4();
  auto o = prime_default_orientation(g);
  ASSERT_TRUE(o);
  Orientation want(g);
  want.set(g.require("a"), g.require("b"));
  want.set(g.require("c"), g.require("b"));
  want.set(g.require("c"), g.require("d"));
  EXPECT_TRUE(*o == want || *o == want.reversed());

  EXPECT_FALSE(prime_default_orientation(testkit::cycle(5)));

  Graph gd = gadget();
  auto og = prime_default_orientation(gd);
  ASSERT_TRUE(og);
  Orientation gw(gd);
  for (auto [t, h] : std::vector<std::pair<std::string, std::string>>{
           {"x", "a"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"b", "z"}})
    gw.set(gd.require(t), gd.require(h));
  EXPECT_TRUE(*og == gw || *og == gw.reversed());
}

TEST(Orient, PrimeDefaultIsOneOfExactlyTwo) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int n = 4; n <= 7; ++n) {
    std::vector<Graph> pool;
    if (n <= 6) pool = testkit::all_graphs(n);
    else
      for (int i = 0; i < 400; ++i) pool.push_back(testkit::random_graph(n, 0.45, rng));
    for (const Graph& g : pool) {
      if (!prime(g) || g.m() > 20) continue;
      auto all = oracle::enum_transitive_orientations(g);
      auto o = prime_default_orientation(g);
      ASSERT_EQ(o.ok(), !all.empty());
      if (!o) continue;
      ASSERT_EQ(all.size(), 2u);
      ASSERT_TRUE(*o == all[0] || *o == all[1]);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Orient, LiftPartial) {
  Graph c4 = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  MDTree t(c4);
  int a = c4.require("a"), b = c4.require("b"), c = c4.require("c"), d = c4.require("d");
  auto p = lift_partial(t, PartialOrientation(c4, {{a, b}}));
  ASSERT_TRUE(p);
  int r = t.root();
  int ca = t.child_toward(r, a);
  EXPECT_EQ(p->dir[r][0], ca == 0 ? 1 : -1);
  auto bad = lift_partial(t, PartialOrientation(c4, {{a, b}, {d, c}}));
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.why().reason, "conflict");
  auto none = lift_partial(t, PartialOrientation(c4, {}));
  ASSERT_TRUE(none);
  for (auto& v : none->dir)
    for (auto x : v) EXPECT_EQ(x, 0);
}

TEST(Orient, OrientExtExamples) {
  Graph g = p4();
  int a = 0, b = 1, c = 2, d = 3;
  auto o = orient_ext(g, PartialOrientation(g, {{a, b}}));
  ASSERT_TRUE(o);
  EXPECT_TRUE(o->directed(a, b) && o->directed(c, b) && o->directed(c, d));
  auto no = orient_ext(g, PartialOrientation(g, {{a, b}, {b, c}}));
  ASSERT_FALSE(no);
  EXPECT_EQ(no.why().reason, "prime-mismatch");

  Graph k3 = testkit::clique(3);
  auto ok = orient_ext(k3, PartialOrientation(k3, {{0, 1}, {1, 2}}));
  ASSERT_TRUE(ok);
  EXPECT_TRUE(ok->directed(0, 2));
  auto cyc = orient_ext(k3, PartialOrientation(k3, {{0, 1}, {1, 2}, {2, 0}}));
  ASSERT_FALSE(cyc);
  EXPECT_EQ(cyc.why().reason, "cycle");
  Graph c5 = testkit::cycle(5);
  EXPECT_FALSE(orient_ext(c5, PartialOrientation(c5, {})));
}

TEST(Orient, OrientExtMatchesBruteForce) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      auto all = oracle::enum_transitive_orientations(g);
      int m = g.m();
      // every partial orientation over at most 3 edges
      std::vector<int> pick;
      std::function<void(int)> go = [&](int from) {
        int k = static_cast<int>(pick.size());
        for (int dirs = 0; dirs < (1 << k); ++dirs) {
          std::vector<Edge> arcs;
          for (int i = 0; i < k; ++i) {
            auto [u, v] = g.edge(pick[i]);
            arcs.push_back(dirs >> i & 1 ? Edge{v, u} : Edge{u, v});
          }
          PartialOrientation w(g, arcs);
          bool want = std::any_of(all.begin(), all.end(), [&](auto& o) { return contains(o, w); });
          auto got = orient_ext(g, w);
          ASSERT_EQ(got.ok(), want);
          if (got) {
            ASSERT_TRUE(is_transitive(g, *got));
            ASSERT_TRUE(contains(*got, w));
          }
          ASSERT_EQ(orient_ext(g, w.reversed()).ok(), want);
        }
        if (k == 3) return;
        for (int e = from; e < m; ++e) {
          pick.push_back(e);
          go(e + 1);
          pick.pop_back();
        }
      };
      go(0);
    }
}

TEST(Orient, Recognize) {
  EXPECT_FALSE(recognize_comparability(testkit::cycle(5)));
  EXPECT_TRUE(recognize_comparability(testkit::cycle(4)));
  EXPECT_TRUE(recognize_comparability(p4()));
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testkit::all_graphs(n))
      ASSERT_EQ(recognize_comparability(g), !oracle::enum_transitive_orientations(g).empty());
}

TEST(Orient, LargePermutationGraphs) {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = testkit::random_permutation_graph(100 + 30 * rep, rng);
    auto o = orient_ext(g, PartialOrientation(g, {}));
    ASSERT_TRUE(o);
    ASSERT_TRUE(is_transitive(g, *o));
    // pin an arbitrary edge either way: both must extend
    auto [u, v] = g.edge(g.m() / 2);
    ASSERT_TRUE(orient_ext(g, PartialOrientation(g, {{u, v}})));
    ASSERT_TRUE(orient_ext(g, PartialOrientation(g, {{v, u}})));
  }
}

TEST(Orient, RandomNonComparability) {
  std::mt19937 rng(9);
  int rejected = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = testkit::random_graph(8, 0.5, rng);
    bool want = g.m() <= 16 ? !oracle::enum_transitive_orientations(g).empty() : recognize_comparability(g);
    ASSERT_EQ(recognize_comparability(g), want);
    rejected += !want;
  }
  EXPECT_GT(rejected, 0);
}
