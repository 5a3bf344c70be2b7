#include <gtest/gtest.h>

#include "modo/generate.hpp"
#include "modo/simorient.hpp"

using namespace modo;

TEST(Generate, SparseDiagramHasExactCrossings) {
  std::mt19937_64 rng(61);
  for (auto [n, m] : std::vector<std::pair<int, long long>>{{1, 0}, {2, 1}, {10, 0}, {10, 45}, {10, 30}, {500, 2000}}) {
    PermDiagram d = gen::sparse_diagram(n, m, rng);
    EXPECT_EQ(crossings(d), m) << n << " " << m;
    EXPECT_EQ(diagram_graph(d).m(), m);
  }
  EXPECT_THROW(gen::sparse_diagram(4, 7, rng), input_error);
  EXPECT_THROW(gen::sparse_diagram(4, -1, rng), input_error);
}

TEST(Generate, SeedsAreReproducible) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(gen::random_diagram(50, a), gen::random_diagram(50, b));
  EXPECT_EQ(gen::sparse_diagram(50, 300, a), gen::sparse_diagram(50, 300, b));
}

TEST(Generate, DiagramSunflowerIsValidAndFeasible) {
  std::mt19937_64 rng(62);
  for (int rep = 0; rep < 20; ++rep) {
    auto inst = gen::diagram_sunflower(gen::random_diagram(40, rng), 10, 3, rng);
    ASSERT_TRUE(validate_sunflower(inst).ok);
    EXPECT_EQ(inst.shared.n(), 10);
    EXPECT_TRUE(sim_orient(inst).ok());
  }
}
