#include <gtest/gtest.h>

#include "ybx/linalg.hpp"
#include "ybx/qdeform.hpp"

using namespace ybx;

TEST(QDeform, GFrozenForN2) {
  LMatrix g = build_g(2);
  LaurentS q = LaurentS::q_pow(1);
  EXPECT_EQ(g(0, 0), q);
  EXPECT_EQ(g(3, 3), q);
  EXPECT_EQ(g(1, 2), LaurentS(1));  // e_01 (x) e_10
  EXPECT_EQ(g(2, 1), LaurentS(1));
  EXPECT_EQ(g(1, 1), LaurentS(0));  // q - q^{+1}
  EXPECT_EQ(g(2, 2), q - LaurentS::q_pow(-1));
}

TEST(QDeform, GReducesToFlipAtQOne) {
  for (std::size_t n : {2, 3}) EXPECT_EQ(at_s_one(build_g(n)), swap_matrix(n));
}

TEST(QDeform, HeckeAndBraid) {
  for (std::size_t n : {2, 3}) EXPECT_TRUE(check_hecke_q(build_g(n)).passed) << n;
}

TEST(QDeform, OnlyIdentityIsAdmissible) {
  for (std::size_t n : {2, 3, 4}) {
    auto adm = admissible_permutations(n);
    ASSERT_EQ(adm.size(), 1u) << n;
    EXPECT_EQ(adm[0], identity_map(static_cast<int>(n)));
  }
}

TEST(QDeform, BuildGRejectsNonIdentity) {
  LMatrix g = build_g(2);
  QMatrix V({2});
  V(0, 1) = 1;
  V(1, 0) = 1;
  EXPECT_FALSE(check_symq(g, V).passed);
  EXPECT_THROW(build_G(g, V), ValidationError);
  EXPECT_EQ(build_G(g, QMatrix::identity({2})), g);
}

TEST(QDeform, SgnConditionReadings) {
  SgnReport id = validate_sgn_condition({0, 1, 2}, {0, 1, 2});
  EXPECT_TRUE(id.statement.passed);
  EXPECT_TRUE(id.proof_form.passed);
  SgnReport sh = validate_sgn_condition({1, 2, 0}, {2, 0, 1});
  EXPECT_FALSE(sh.statement.passed);
  EXPECT_THROW(validate_sgn_condition({1, 2, 0}, {1, 2, 0}), std::invalid_argument);
}

TEST(QDeform, ConjugationIsInvertible) {
  LMatrix g = build_g(3);
  QMatrix V({3});
  V(0, 1) = 1;
  V(1, 2) = 1;
  V(2, 0) = 1;
  EXPECT_EQ(conjugate_g(conjugate_g(g, V), invert(V)), g);
}

TEST(QDeform, QuantumGroupSymmetry) {
  for (std::size_t n : {2, 3}) {
    LMatrix g = build_g(n);
    Map id = identity_map(static_cast<int>(n));
    EXPECT_TRUE(check_uq_symmetry(g, uq_coproducts(n, 2, UqVariant::standard, id)).passed) << n;
    for (std::size_t j = 0; j + 1 < n; ++j)
      EXPECT_TRUE(check_uq_symmetry(g, uq_fundamental_coproducts(n, j, UqVariant::standard, id)).passed);
    EXPECT_TRUE(check_serre_two_site(n).passed) << n;
  }
}

TEST(QDeform, VariantCoproductsAreConjugates) {
  for (int v : {1, 2}) EXPECT_TRUE(check_uq_conjugation(3, 2, v, {1, 2, 0}).passed) << v;
}
