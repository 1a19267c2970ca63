#include "ybx/linearization.hpp"

#include "ybx/linalg.hpp"

namespace ybx {

QMatrix linearize(const SetSolution& s) {
  const auto n = static_cast<std::size_t>(s.n);
  QMatrix r({n, n});
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      auto [a, b] = s.apply(x, y);
      r(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y),
        static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) = 1;
    }
  return r;
}

Baxterized baxterize(const QMatrix& r) {
  PolyMatrix lam = lift<UniPoly>(r) * UniPoly::x();
  PolyMatrix checkR = lam + PolyMatrix::identity(r.legs());
  PolyMatrix P = lift<UniPoly>(swap_matrix(r.legs().at(0)));
  return {checkR, P * checkR};
}

CheckResult check_ybe_spectral(const PolyMatrix& checkR) {
  CheckResult res("spectral Yang-Baxter (braid form)");
  auto at = [&](Rational a, Rational b, std::size_t i, std::size_t j) {
    return embed_pair(substitute2(checkR, a, b, 0), i, j, 3);
  };
  BiMatrix lhs = at(1, -1, 0, 1) * at(1, 0, 1, 2) * at(0, 1, 0, 1);
  BiMatrix rhs = at(0, 1, 1, 2) * at(1, 0, 0, 1) * at(1, -1, 1, 2);
  expect_equal(res, lhs, rhs);
  return res;
}

CheckResult check_unitarity(const PolyMatrix& R) {
  CheckResult res("unitarity");
  PolyMatrix lhs = R * substitute(flip_legs(R), -1, 0);
  PolyMatrix rhs = PolyMatrix::identity(R.legs()) * UniPoly({1, 0, -1});
  expect_equal(res, lhs, rhs);
  return res;
}

CheckResult check_crossing(const PolyMatrix& R, int n) {
  CheckResult res("crossing unitarity and transpose symmetry");
  PolyMatrix lhs = partial_transpose(R, 0) * substitute(partial_transpose(R, 1), -1, -n);
  // l (-l - n)
  PolyMatrix rhs = PolyMatrix::identity(R.legs()) * UniPoly({0, -n, -1});
  expect_equal(res, lhs, rhs, "crossing:");
  expect_equal(res, partial_transpose(partial_transpose(R, 0), 1), flip_legs(R), "transpose symmetry:");
  return res;
}

CheckResult check_hecke_a(const QMatrix& r) {
  CheckResult res("A-type Hecke relations at q = 1");
  expect_equal(res, r * r, QMatrix::identity(r.legs()), "quadratic r^2 = I:");
  QMatrix r12 = embed_pair(r, 0, 1, 3), r23 = embed_pair(r, 1, 2, 3);
  expect_equal(res, r12 * r23 * r12, r23 * r12 * r23, "braid:");
  QMatrix a = embed_pair(r, 0, 1, 4), b = embed_pair(r, 2, 3, 4);
  expect_zero(res, commutator(a, b), "locality [r_12, r_34]:");
  return res;
}

CheckResult trace_identity(const QMatrix& r) {
  CheckResult res("trace identity tr_0 r_{n0} = I");
  // r on legs (n, 0): first factor on the quantum leg, second on the auxiliary leg.
  QMatrix placed = embed_pair(r, 1, 0, 2);
  QMatrix t = partial_trace(placed, 0);
  expect_equal(res, t, QMatrix::identity({r.legs()[0]}));
  return res;
}

CheckResult check_eigen_multiplicities(const QMatrix& r) {
  CheckResult res("eigenvalue multiplicities");
  const std::size_t n = r.legs().at(0);
  const std::size_t plus = (n * n + n) / 2, minus = (n * n - n) / 2;
  QMatrix I = QMatrix::identity(r.legs());
  for (const auto& [name, m] : {std::pair<std::string, QMatrix>{"r", r}, {"P", swap_matrix(n)}}) {
    std::size_t kp = r.dim() - rank(m - I), km = r.dim() - rank(m + I);
    if (kp != plus || km != minus)
      res.fail(cat(name, ": +1 multiplicity ", kp, " (expected ", plus, "), -1 multiplicity ", km,
                   " (expected ", minus, ")"));
  }
  return res;
}

}  // namespace ybx
