#include <gtest/gtest.h>

#include "support.hpp"
#include "ybx/solution.hpp"

using namespace ybx;

TEST(Solution, AllFixturesValid) {
  for (const auto& f : ybx::testing::all_fixtures()) EXPECT_NO_THROW(validate_solution(f.s)) << f.name;
  EXPECT_NO_THROW(validate_solution(fixtures::zp2(3)));
}

TEST(Solution, ShiftIsLyubashenko) {
  SetSolution s = fixtures::shift(3);
  ASSERT_TRUE(is_lyubashenko(s));
  EXPECT_EQ(lyubashenko_sigma(s), (Map{1, 2, 0}));
  EXPECT_EQ(lyubashenko_tau(s), (Map{2, 0, 1}));
  EXPECT_FALSE(is_lyubashenko(fixtures::z4_nilpotent()));
}

TEST(Solution, NonInvolutiveRejected) {
  SetSolution s = fixtures::trivial(2);
  s.sigma = {{1, 0}, {1, 0}};  // r(x,y) = (1-y, x): not involutive
  EXPECT_THROW(validate_solution(s), ValidationError);
}

TEST(Solution, FrozenCounts) {
  // reflections, involutive reflections, automorphisms, orbits
  struct Row {
    const char* name;
    std::size_t refl, inv, aut, orb;
  };
  const Row rows[] = {{"trivial-2", 4, 2, 2, 2},   {"trivial-3", 27, 4, 6, 3},  {"shift-3", 27, 4, 3, 1},
                      {"shift-4", 256, 10, 4, 1},  {"reversal-3", 27, 4, 2, 2}, {"reversal-4", 256, 10, 8, 2},
                      {"z4-nilpotent", 24, 4, 4, 3}};
  for (const auto& row : rows) {
    SetSolution s;
    for (const auto& f : ybx::testing::all_fixtures())
      if (f.name == row.name) s = f.s;
    auto refl = find_reflections(s);
    std::size_t inv = 0;
    for (const auto& k : refl) inv += is_involutive_map(k);
    EXPECT_EQ(refl.size(), row.refl) << row.name;
    EXPECT_EQ(inv, row.inv) << row.name;
    EXPECT_EQ(automorphisms(s).size(), row.aut) << row.name;
    EXPECT_EQ(orbits(s).size(), row.orb) << row.name;
  }
}

TEST(Solution, Z4SpecialElements) {
  SpecialElements e = special_elements(fixtures::z4_nilpotent());
  EXPECT_EQ(e.flip_like, (std::vector<int>{0, 2}));
  EXPECT_EQ(e.diagonal_fixed, (std::vector<int>{0, 2}));
}

TEST(SolutionProperty, ReflectionCriterionMatchesBruteForce) {
  for (const auto& f : ybx::testing::all_fixtures()) {
    if (f.s.n > 3) continue;
    const int n = f.s.n;
    Map k(n, 0);
    int total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    for (int code = 0; code < total; ++code) {
      for (int i = 0, c = code; i < n; ++i, c /= n) k[i] = c % n;
      EXPECT_EQ(check_set_reflection(f.s, k).passed, reflection_criterion(f.s, k).passed) << f.name;
    }
  }
}

TEST(SolutionProperty, AutomorphismsAreMorphisms) {
  for (const auto& f : ybx::testing::all_fixtures())
    for (const auto& m : automorphisms(f.s)) EXPECT_TRUE(check_morphism(f.s, m).passed) << f.name;
}

TEST(SolutionProperty, OrbitsPartitionAndAreSigmaEquivariant) {
  for (const auto& f : ybx::testing::all_fixtures()) {
    std::vector<int> seen(f.s.n, 0);
    for (const auto& o : orbits(f.s)) {
      EXPECT_TRUE(is_sigma_equivariant_set(f.s, o).passed) << f.name;
      for (int x : o) ++seen[x];
    }
    for (int c : seen) EXPECT_EQ(c, 1) << f.name;
  }
}

TEST(SolutionProperty, SwapIsAlsoASolution) {
  for (const auto& f : ybx::testing::all_fixtures()) EXPECT_NO_THROW(validate_solution(swap_solution(f.s))) << f.name;
}

TEST(Solution, MapAlgebra) {
  Map f{1, 2, 0};
  EXPECT_EQ(compose(f, inverse_map(f)), identity_map(3));
  EXPECT_EQ(map_power(f, 3), identity_map(3));
  EXPECT_EQ(map_power(f, 2), inverse_map(f));
}
