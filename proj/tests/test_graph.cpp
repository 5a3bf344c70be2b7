#include <gtest/gtest.h>

#include "modo/graph.hpp"
#include "modo/oracle.hpp"
#include "support.hpp"

using namespace modo;

namespace {

Graph p4() { return testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}); }

}  // namespace

TEST(Graph, CsrIsSortedAndSymmetric) {
  Graph g = Graph::from_edges(5, {{3, 1}, {0, 4}, {2, 1}, {4, 3}, {0, 1}});
  EXPECT_EQ(g.m(), 5);
  for (int v = 0; v < g.n(); ++v) {
    auto a = g.adj(v);
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    for (int w : a) EXPECT_TRUE(g.adjacent(w, v));
  }
  for (int e = 0; e < g.m(); ++e) EXPECT_EQ(g.edge_id(g.edge(e).first, g.edge(e).second), e);
}

TEST(Graph, RejectsLoopsAndParallelEdges) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), input_error);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), input_error);
  EXPECT_THROW(testkit::make({"a", "a"}, {}), input_error);
}

TEST(Graph, InducedSubgraphKeepsIds) {
  Graph g = p4();
  Graph h = induced_subgraph(g, std::vector<std::string>{"a", "b", "c"});
  EXPECT_EQ(h.n(), 3);
  EXPECT_EQ(h.m(), 2);
  EXPECT_TRUE(h.adjacent(h.require("a"), h.require("b")));
  EXPECT_FALSE(h.adjacent(h.require("a"), h.require("c")));

  Graph k3 = testkit::make({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  Graph one = induced_subgraph(k3, std::vector<std::string>{"x"});
  EXPECT_EQ(one.n(), 1);
  EXPECT_EQ(one.m(), 0);

  Graph c4 = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  Graph ac = induced_subgraph(c4, std::vector<std::string>{"a", "c"});
  EXPECT_EQ(ac.m(), 0);
  EXPECT_THROW(induced_subgraph(c4, std::vector<std::string>{"q"}), input_error);
}

TEST(Graph, InducedSubgraphComposes) {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = testkit::random_graph(7, 0.5, rng);
    std::vector<int> s{0, 2, 3, 5, 6}, inner{1, 3, 4};  // positions inside s
    Graph gs = induced_subgraph(g, s);
    Graph twice = induced_subgraph(gs, inner);
    Graph once = induced_subgraph(g, std::vector<int>{2, 5, 6});
    EXPECT_EQ(twice, once);
  }
}

TEST(Graph, TransitivityExamples) {
  Graph k3 = testkit::make({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  Orientation cyc(k3);
  cyc.set(0, 1), cyc.set(1, 2), cyc.set(2, 0);
  EXPECT_FALSE(is_transitive(k3, cyc));

  Graph g = p4();
  Orientation o(g);
  o.set(g.require("a"), g.require("b"));
  o.set(g.require("c"), g.require("b"));
  o.set(g.require("c"), g.require("d"));
  EXPECT_TRUE(is_transitive(g, o));

  Graph p3 = testkit::path(3);
  Orientation chain(p3);
  chain.set(0, 1), chain.set(1, 2);
  EXPECT_FALSE(is_transitive(p3, chain));
}

TEST(Graph, TransitivityMatchesTripleLoop) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testkit::all_graphs(n)) {
      Orientation o(g);
      for (std::uint32_t mask = 0; mask < (1u << g.m()); ++mask) {
        for (int e = 0; e < g.m(); ++e) o.set_forward(e, mask >> e & 1);
        bool t = is_transitive(g, o);
        ASSERT_EQ(t, oracle::transitive_naive(g, o));
        ASSERT_EQ(t, is_transitive(g, o.reversed()));
      }
    }
}

TEST(Graph, SunflowerValidation) {
  SunflowerInstance ok{testkit::make({"u", "v"}, {{"u", "v"}}),
                       {testkit::make({"u", "v", "w1"}, {{"u", "v"}, {"v", "w1"}}),
                        testkit::make({"v", "u", "w2"}, {{"v", "u"}, {"u", "w2"}})}};
  EXPECT_TRUE(validate_sunflower(ok));

  SunflowerInstance missing{testkit::make({"u", "v"}, {{"u", "v"}}),
                            {testkit::make({"u", "v"}, {{"u", "v"}}), testkit::make({"u", "v"}, {})}};
  EXPECT_FALSE(validate_sunflower(missing));

  SunflowerInstance shared_private{testkit::make({"u"}, {}),
                                   {testkit::make({"u", "w"}, {{"u", "w"}}), testkit::make({"u", "w"}, {})}};
  auto v = validate_sunflower(shared_private);
  EXPECT_FALSE(v);
  EXPECT_NE(v.diagnostic.find("private"), std::string::npos);
}
