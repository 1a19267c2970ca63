#include <gtest/gtest.h>

#include "support.hpp"
#include "ybx/linalg.hpp"
#include "ybx/linearization.hpp"

using namespace ybx;

TEST(Linearization, TrivialIsTheFlip) {
  for (int n : {2, 3}) EXPECT_EQ(linearize(fixtures::trivial(n)), swap_matrix(static_cast<std::size_t>(n)));
}

TEST(Linearization, ShiftTwoFrozen) {
  // r = sum e_{x,sigma(y)} (x) e_{y,tau(x)}, sigma(y) = y+1, tau(x) = x-1 (mod 2)
  QMatrix r = linearize(fixtures::shift(2));
  QMatrix expect({2, 2});
  expect(0, 3) = 1;  // (0,0) -> (1,1)
  expect(1, 1) = 1;  // (0,1) -> (0,1)
  expect(2, 2) = 1;  // (1,0) -> (1,0)
  expect(3, 0) = 1;  // (1,1) -> (0,0)
  EXPECT_EQ(r, expect);
}

TEST(Linearization, BaxterizedForm) {
  QMatrix r = linearize(fixtures::shift(3));
  Baxterized B = baxterize(r);
  EXPECT_EQ(coeff_matrix(B.check_R, 1), r);
  EXPECT_EQ(coeff_matrix(B.check_R, 0), QMatrix::identity({3, 3}));
  EXPECT_EQ(B.R, lift<UniPoly>(swap_matrix(3)) * B.check_R);
}

TEST(Linearization, BrokenMatrixFailsWithWitness) {
  QMatrix r = swap_matrix(2) * Rational(2);
  CheckResult h = check_hecke_a(r);
  EXPECT_FALSE(h.passed);
  EXPECT_FALSE(h.witnesses.empty());
}

class MatrixIdentities : public ::testing::TestWithParam<int> {};

TEST_P(MatrixIdentities, HoldExactly) {
  const auto f = ybx::testing::all_fixtures().at(static_cast<std::size_t>(GetParam()));
  QMatrix r = linearize(f.s);
  Baxterized B = baxterize(r);
  EXPECT_TRUE(check_ybe_spectral(B.check_R).passed) << f.name;
  EXPECT_TRUE(check_unitarity(B.R).passed) << f.name;
  EXPECT_TRUE(check_crossing(B.R, f.s.n).passed) << f.name;
  EXPECT_TRUE(check_hecke_a(r).passed) << f.name;
  EXPECT_TRUE(trace_identity(r).passed) << f.name;
  EXPECT_TRUE(check_eigen_multiplicities(r).passed) << f.name;
  const std::size_t n = static_cast<std::size_t>(f.s.n);
  QMatrix I = QMatrix::identity({n, n});
  EXPECT_EQ(rank(r - I), (n * n - n) / 2) << f.name;
  EXPECT_EQ(rank(r + I), (n * n + n) / 2) << f.name;
  EXPECT_EQ(partial_trace(embed_pair(r, 1, 0, 2), 0), QMatrix::identity({n})) << f.name;
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, MatrixIdentities, ::testing::Range(0, 10));
