#include <gtest/gtest.h>

#include <random>

#include "modo/oracle.hpp"
#include "modo/twosat.hpp"

using namespace modo;

TEST(TwoSat, Chain) {
  Formula2 f;
  int x = f.add_var("x"), y = f.add_var("y"), z = f.add_var("z");
  f.iff(pos(x), pos(y));
  f.differ(pos(y), pos(z));
  auto a = solve(f);
  ASSERT_TRUE(a);
  EXPECT_EQ((*a)[x], (*a)[y]);
  EXPECT_NE((*a)[y], (*a)[z]);
}

TEST(TwoSat, SelfXorIsUnsat) {
  Formula2 f;
  int x = f.add_var();
  f.differ(pos(x), pos(x));
  EXPECT_FALSE(solve(f));
}

TEST(TwoSat, FreeVariablesDefaultFalse) {
  Formula2 f;
  for (int i = 0; i < 5; ++i) f.add_var();
  f.implies(pos(1), pos(2));
  auto a = solve(f);
  ASSERT_TRUE(a);
  for (bool b : *a) EXPECT_FALSE(b);
}

TEST(TwoSat, FixedLiteral) {
  Formula2 f;
  int x = f.add_var(), y = f.add_var();
  f.fix(pos(x));
  f.implies(pos(x), neg(y));
  auto a = solve(f);
  ASSERT_TRUE(a);
  EXPECT_TRUE((*a)[x]);
  EXPECT_FALSE((*a)[y]);
}

TEST(TwoSat, Absorb) {
  Formula2 f, g;
  f.add_var();
  int a = g.add_var(), b = g.add_var();
  g.differ(pos(a), pos(b));
  int off = f.absorb(g);
  EXPECT_EQ(off, 1);
  EXPECT_EQ(f.vars(), 3);
  f.fix(pos(off));
  f.fix(pos(off + 1));
  EXPECT_FALSE(solve(f));

  // a shared prefix is identified rather than copied
  Formula2 h, k;
  int s = h.add_var("s");
  k.add_var("s");
  int t = k.add_var("t");
  k.differ(pos(0), pos(t));
  int o = h.absorb(k, 1);
  EXPECT_EQ(h.vars(), 2);
  h.fix(pos(s));
  auto sol = solve(h);
  ASSERT_TRUE(sol);
  EXPECT_FALSE((*sol)[o]);
}

TEST(TwoSat, MatchesTruthTable) {
  std::mt19937 rng(11);
  int unsat = 0;
  for (int rep = 0; rep < 3000; ++rep) {
    int n = 1 + rng() % 15;
    int m = rng() % (3 * n + 1);
    Formula2 f;
    for (int i = 0; i < n; ++i) f.add_var();
    for (int i = 0; i < m; ++i) f.clause(Lit{static_cast<int>(rng() % (2 * n))}, Lit{static_cast<int>(rng() % (2 * n))});
    auto fast = solve(f);
    auto slow = oracle::truth_table(f);
    ASSERT_EQ(fast.has_value(), slow.has_value());
    if (fast) ASSERT_TRUE(f.satisfied_by(*fast));
    unsat += !slow;
  }
  EXPECT_GT(unsat, 100);
}

TEST(TwoSat, LongImplicationChain) {
  Formula2 f;
  const int n = 200000;
  for (int i = 0; i < n; ++i) f.add_var();
  for (int i = 0; i + 1 < n; ++i) f.implies(pos(i), pos(i + 1));
  f.fix(pos(0));
  auto a = solve(f);
  ASSERT_TRUE(a);
  EXPECT_TRUE((*a)[n - 1]);
  f.fix(neg(n - 1));
  EXPECT_FALSE(solve(f));
}
