#include <gtest/gtest.h>

#include "support.hpp"
#include "ybx/linalg.hpp"
#include "ybx/linearization.hpp"
#include "ybx/twist.hpp"

using namespace ybx;

TEST(Twist, Z4FrozenPermutation) {
  Twist t = build_twist(fixtures::z4_nilpotent());
  // F is a permutation matrix on 16 cells; the nontrivial moves
  const std::pair<std::size_t, std::size_t> moves[] = {{5, 6}, {6, 7}, {7, 5}, {9, 13}, {13, 15}, {15, 9}};
  EXPECT_EQ(t.F.nnz(), 16u);
  for (auto [row, col] : moves) EXPECT_EQ(t.F(row, col), 1);
  EXPECT_EQ(t.pairing.fixed.size() + 2 * t.pairing.cycles.size(), 16u);
}

TEST(Twist, LyubashenkoVFrozen) {
  QMatrix V = lyubashenko_V(fixtures::shift(2));
  QMatrix expect({2});
  expect(0, 1) = 1;
  expect(1, 0) = 1;
  EXPECT_EQ(V, expect);
  EXPECT_THROW(lyubashenko_V(fixtures::z4_nilpotent()), ValidationError);
}

TEST(Twist, StandardCoproductFrozen) {
  QMatrix d = standard_coproduct(2, 0, 1, 2);
  EXPECT_EQ(d, kron(unit(2, 0, 1), QMatrix::identity({2})) + kron(QMatrix::identity({2}), unit(2, 0, 1)));
}

class TwistAll : public ::testing::TestWithParam<int> {};

TEST_P(TwistAll, ConjugatesFlipToR) {
  const auto f = ybx::testing::all_fixtures().at(static_cast<std::size_t>(GetParam()));
  QMatrix r = linearize(f.s);
  Twist t = build_twist(f.s);
  EXPECT_EQ(t.F * swap_matrix(static_cast<std::size_t>(f.s.n)) * invert(t.F), r) << f.name;
  EXPECT_TRUE(verify_twist(t.F, r).passed) << f.name;
  EXPECT_TRUE(check_gl_symmetry(r, coproduct_family(f.s, CoproductVariant::general, 2)).passed) << f.name;
}

TEST_P(TwistAll, LyubashenkoStructure) {
  const auto f = ybx::testing::all_fixtures().at(static_cast<std::size_t>(GetParam()));
  if (!is_lyubashenko(f.s)) GTEST_SKIP() << "not of Lyubashenko type";
  QMatrix r = linearize(f.s);
  EXPECT_TRUE(check_lyubashenko(f.s).passed) << f.name;
  for (auto v : {CoproductVariant::first, CoproductVariant::second}) {
    EXPECT_TRUE(check_gl_symmetry(r, coproduct_family(f.s, v, 2)).passed) << f.name;
    EXPECT_TRUE(check_gl_relations(coproduct_family(f.s, v, 3), static_cast<std::size_t>(f.s.n)).passed);
  }
  for (int v : {1, 2})
    for (std::size_t N : {2, 3}) EXPECT_TRUE(check_f_n(f.s, N, v).passed) << f.name << " variant " << v;
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, TwistAll, ::testing::Range(0, 10));

TEST(Twist, CoassociativityMeasured) {
  // identity sigma: co-associative; shift-3: the two iterations differ
  EXPECT_TRUE(coassociativity_probe(fixtures::trivial(2), 1).passed);
  EXPECT_FALSE(coassociativity_probe(fixtures::shift(3), 1).passed);
}
