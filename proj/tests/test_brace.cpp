#include <gtest/gtest.h>

#include "ybx/brace.hpp"
#include "ybx/solution.hpp"

using namespace ybx;

TEST(Brace, ZeroRingGivesFlip) {
  FiniteBrace b = brace_from_ring(zero_ring(3));
  EXPECT_EQ(b.circle, b.add);
  SetSolution s = solution_from_brace(b);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(s.apply(x, y), std::make_pair(y, x));
}

TEST(Brace, Z4CircleTableFrozen) {
  FiniteBrace b = brace_from_ring(zpk_ring(2, 2));
  // a o b = 2ab + a + b mod 4
  EXPECT_EQ(b.circle, (Table{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  EXPECT_EQ(circle_inverse(b, 1), 1);
  EXPECT_EQ(additive_inverse(b, 1), 3);
}

TEST(Brace, NilpotencyIndex) {
  EXPECT_EQ(validate_nilpotent_ring(zpk_ring(2, 2)), 3);
  EXPECT_EQ(validate_nilpotent_ring(zpk_ring(3, 2)), 3);
  EXPECT_EQ(validate_nilpotent_ring(zero_ring(4)), 2);
}

TEST(Brace, NonNilpotentRingRejected) {
  NilpotentRingSpec f2{2, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}};  // the field Z/2
  EXPECT_THROW(validate_nilpotent_ring(f2), ValidationError);
}

TEST(Brace, BrokenTablesRejectedWithWitness) {
  FiniteBrace b = brace_from_ring(zero_ring(3));
  b.circle[1][2] = 1;
  try {
    validate_brace(b);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.witness().empty());
  }
  FiniteBrace shape = brace_from_ring(zero_ring(3));
  shape.add.pop_back();
  EXPECT_THROW(validate_brace(shape), ValidationError);
}

TEST(Brace, RingProductRecovered) {
  for (int p : {2, 3}) {
    NilpotentRingSpec r = zpk_ring(p, 2);
    EXPECT_EQ(ring_product_from_brace(brace_from_ring(r)), r.mul);
  }
}

class RingBraces : public ::testing::TestWithParam<int> {};

TEST_P(RingBraces, AxiomsAndSolutionByExhaustion) {
  NilpotentRingSpec r = GetParam() == 0 ? zero_ring(4) : zpk_ring(GetParam(), 2);
  FiniteBrace b = brace_from_ring(r);
  EXPECT_NO_THROW(validate_brace(b));
  SetSolution s = solution_from_brace(b);
  EXPECT_NO_THROW(validate_solution(s));
  // the brace relation a o (b + c) = a o b - a + a o c
  const int n = b.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = b.circle[x][b.add[y][z]];
        int rhs = b.add[b.add[b.circle[x][y]][additive_inverse(b, x)]][b.circle[x][z]];
        ASSERT_EQ(lhs, rhs);
      }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, RingBraces, ::testing::Values(0, 2, 3));
