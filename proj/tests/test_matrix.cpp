#include <gtest/gtest.h>

#include "support.hpp"
#include "ybx/linalg.hpp"

using namespace ybx;
using ybx::testing::random_matrix;
using ybx::testing::random_poly_matrix;

TEST(Matrix, UnitAndKron) {
  QMatrix e01 = unit(2, 0, 1);
  QMatrix k = kron(e01, unit(2, 1, 0));
  EXPECT_EQ(k.legs(), (Legs{2, 2}));
  EXPECT_EQ(k(1, 2), 1);  // rows (0,1), cols (1,0)
  EXPECT_EQ(k.nnz(), 1u);
}

TEST(Matrix, SwapMatrix) {
  QMatrix P = swap_matrix(2);
  EXPECT_EQ(P.nnz(), 4u);
  EXPECT_EQ(P * P, QMatrix::identity({2, 2}));
  QMatrix a = random_matrix({2}, 1), b = random_matrix({2}, 2);
  EXPECT_EQ(P * kron(a, b) * P, kron(b, a));
}

TEST(Matrix, EmbedPairAndOne) {
  QMatrix a = random_matrix({2, 2}, 3);
  QMatrix e = embed_pair(a, 0, 2, 3);
  QMatrix P12 = embed_pair(swap_matrix(2), 1, 2, 3);
  EXPECT_EQ(e, P12 * kron(a, QMatrix::identity({2})) * P12);
  QMatrix b = random_matrix({2}, 4);
  EXPECT_EQ(embed_one(b, 1, 3), kron_all<Rational>({QMatrix::identity({2}), b, QMatrix::identity({2})}));
}

TEST(Matrix, PartialTraceOfKron) {
  QMatrix a = random_matrix({3}, 5, 1), b = random_matrix({2}, 6, 1);
  EXPECT_EQ(partial_trace(kron(a, b), 0), b * trace(a));
  EXPECT_EQ(partial_trace(kron(a, b), 1), a * trace(b));
}

TEST(Matrix, AuxBlock) {
  QMatrix a = random_matrix({2}, 7, 1), b = random_matrix({3}, 8, 1);
  QMatrix k = kron(a, b);
  EXPECT_EQ(aux_block(k, 1, 0), b * a(1, 0));
}

TEST(Matrix, ShapeMismatchThrows) {
  EXPECT_THROW(QMatrix({2}) * QMatrix({3}), std::invalid_argument);
  EXPECT_THROW(QMatrix(Legs{}), std::invalid_argument);
}

TEST(MatrixProperty, PartialTransposeIsInvolution) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    QMatrix a = random_matrix({2, 3}, seed);
    for (std::size_t leg : {0, 1}) EXPECT_EQ(partial_transpose(partial_transpose(a, leg), leg), a);
    EXPECT_EQ(partial_transpose(partial_transpose(a, 0), 1), transpose(a));
  }
}

TEST(MatrixProperty, KronMixedProduct) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    QMatrix a = random_matrix({2}, seed), b = random_matrix({3}, seed + 100);
    QMatrix c = random_matrix({2}, seed + 200), d = random_matrix({3}, seed + 300);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(MatrixProperty, SubstituteAndEvaluateCommute) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    PolyMatrix p = random_poly_matrix({2, 2}, seed);
    Rational a = ratio(static_cast<long>(seed) - 4, 3), b = ratio(1, 2), v = 5;
    EXPECT_EQ(evaluate(substitute(p, a, b), v), evaluate(p, a * v + b));
    std::vector<QMatrix> cs;
    for (int k = 0; k <= degree(p); ++k) cs.push_back(coeff_matrix(p, k));
    EXPECT_EQ(from_coeffs(cs), p);
  }
}

TEST(Linalg, InvertAndDeterminant) {
  QMatrix a({2});
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  EXPECT_EQ(determinant(a), 1);
  EXPECT_EQ(a * invert(a), QMatrix::identity({2}));
  QMatrix s({2});
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  EXPECT_EQ(rank(s), 1u);
  EXPECT_THROW(invert(s), SingularMatrix);
}

TEST(LinalgProperty, InverseOfRandomInvertible) {
  int checked = 0;
  for (unsigned seed = 0; seed < 20; ++seed) {
    QMatrix a = random_matrix({4}, seed, 1) + QMatrix::identity({4}) * Rational(3);
    if (is_zero(determinant(a))) continue;
    EXPECT_EQ(invert(a) * a, QMatrix::identity({4}));
    EXPECT_EQ(rank(a), 4u);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Linalg, SpanBasisExpress) {
  SpanBasis b(3);
  EXPECT_TRUE(b.insert({1, 0, 1}));
  EXPECT_TRUE(b.insert({0, 1, 1}));
  EXPECT_FALSE(b.insert({1, 1, 2}));
  EXPECT_EQ(b.rank(), 2u);
  std::vector<std::vector<Rational>> vs{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  auto c = b.express({2, 3, 5});
  ASSERT_TRUE(c.has_value());
  std::vector<Rational> sum(3, Rational(0));
  for (const auto& [i, coef] : *c)
    for (std::size_t k = 0; k < 3; ++k) sum[k] += coef * vs.at(i)[k];
  EXPECT_EQ(sum, (std::vector<Rational>{2, 3, 5}));
  EXPECT_FALSE(b.express({0, 0, 1}).has_value());
}
