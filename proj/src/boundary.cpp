#include "ybx/boundary.hpp"

#include <array>
#include <map>
#include <tuple>

#include "ybx/linalg.hpp"
#include "ybx/linearization.hpp"

namespace ybx {

namespace {

std::vector<std::size_t> aux_and_quantum(std::size_t aux, std::size_t quantum_legs) {
  std::vector<std::size_t> t{aux};
  for (std::size_t k = 0; k < quantum_legs; ++k) t.push_back(2 + k);
  return t;
}

Legs doubled_aux(const Legs& k_legs) {
  Legs total{k_legs.at(0), k_legs.at(0)};
  total.insert(total.end(), k_legs.begin() + 1, k_legs.end());
  return total;
}

// Quadratic relation with R evaluated at (ra1 l1 + ra2 l2 + rc) and R_hat at (ha1 l1 + ha2 l2 + hc).
CheckResult quadratic_relation(const std::string& name, const PolyMatrix& R, const PolyMatrix& R_hat,
                               const PolyMatrix& K, const std::array<Rational, 3>& ra,
                               const std::array<Rational, 3>& ha) {
  CheckResult res(name);
  if (R.leg_count() != 2 || R_hat.leg_count() != 2) throw std::invalid_argument(name + ": R must have two legs");
  if (K.legs().at(0) != R.legs()[0]) throw std::invalid_argument(name + ": auxiliary leg dimension mismatch");
  const Legs total = doubled_aux(K.legs());
  const std::size_t q = K.leg_count() - 1;
  BiMatrix r_arg = substitute2(R, ra[0], ra[1], ra[2]);
  BiMatrix h_arg = substitute2(R_hat, ha[0], ha[1], ha[2]);
  BiMatrix R12 = embed(r_arg, {0, 1}, total), R21 = embed(r_arg, {1, 0}, total);
  BiMatrix H12 = embed(h_arg, {0, 1}, total), H21 = embed(h_arg, {1, 0}, total);
  BiMatrix K1 = embed(substitute2(K, 1, 0, 0), aux_and_quantum(0, q), total);
  BiMatrix K2 = embed(substitute2(K, 0, 1, 0), aux_and_quantum(1, q), total);
  expect_equal(res, R12 * K1 * H12 * K2, K2 * H21 * K1 * R21);
  return res;
}

std::string nm(int n, int m) { return cat("(n,m) = (", n, ",", m, ")"); }

}  // namespace

BoundaryB make_boundary(QMatrix b, const Rational& Q) {
  if (b.leg_count() != 1) throw std::invalid_argument("boundary element must act on one leg");
  if (is_zero(Q)) throw std::invalid_argument("Q must be nonzero");
  Rational kappa = Q - 1 / Q;
  return {std::move(b), Q, kappa};
}

CheckResult check_btype(const QMatrix& r, const BoundaryB& B) {
  CheckResult res("B-type Hecke relations");
  const std::size_t n = r.legs().at(0);
  if (B.b.dim() != n) throw std::invalid_argument("check_btype: b and r dimensions differ");
  QMatrix b1 = kron(B.b, QMatrix::identity({n}));
  expect_equal(res, b1 * r * b1 * r, r * b1 * r * b1, "quadratic exchange (b x I) r (b x I) r:");
  expect_equal(res, B.b * B.b, B.b * B.kappa + QMatrix::identity({n}), "b^2 = kappa b + I:");
  QMatrix b3 = embed_one(B.b, 0, 3), r23 = embed_pair(r, 1, 2, 3);
  expect_zero(res, commutator(b3, r23), "locality [b_1, r_23]:");
  return res;
}

CheckResult check_btype_second_slot(const QMatrix& r, const BoundaryB& B) {
  CheckResult res("B-type exchange, second slot");
  const std::size_t n = r.legs().at(0);
  QMatrix b2 = kron(QMatrix::identity({n}), B.b);
  expect_equal(res, b2 * r * b2 * r, r * b2 * r * b2, "(I x b) r (I x b) r:");
  expect_equal(res, B.b * B.b, B.b * B.kappa + QMatrix::identity({n}), "b^2 = kappa b + I:");
  return res;
}

BoundaryB b_from_reflection(const SetSolution& s, const Map& k) {
  if (static_cast<int>(k.size()) != s.n) throw std::invalid_argument("b_from_reflection: k has wrong size");
  for (int x = 0; x < s.n; ++x) {
    if (k[x] < 0 || k[x] >= s.n) throw std::invalid_argument("b_from_reflection: k out of range");
    if (k[k[x]] != x) throw ValidationError("k(k(x)) = x", cat("x = ", x, ", k(k(x)) = ", k[k[x]]));
  }
  CheckResult crit = reflection_criterion(s, k);
  if (!crit) throw ValidationError("reflection criterion", crit.witnesses.front());
  const auto n = static_cast<std::size_t>(s.n);
  QMatrix b({n});
  for (std::size_t x = 0; x < n; ++x) b(x, static_cast<std::size_t>(k[x])) = 1;
  BoundaryB B = make_boundary(b, 1);
  CheckResult ok = check_btype(linearize(s), B);
  if (!ok) throw InternalInconsistency("b_from_reflection: criterion holds but " + ok.witnesses.front());
  return B;
}

PolyMatrix baxterize_K(const BoundaryB& B, const Rational& chat) {
  const Legs& l = B.b.legs();
  QMatrix lin = B.b - QMatrix::identity(l) * (B.kappa / 2);
  return lift<UniPoly>(lin) * UniPoly::x() + PolyMatrix::identity(l) * UniPoly(chat / 2);
}

PolyMatrix c_form_K(const QMatrix& b, const Rational& c) {
  return lift<UniPoly>(b) * UniPoly::monomial(c, 1) + PolyMatrix::identity(b.legs());
}

CheckResult check_spectral_reflection(const PolyMatrix& checkR, const PolyMatrix& K) {
  CheckResult res("spectral reflection equation (braid form)");
  BiMatrix Rm = substitute2(checkR, 1, -1, 0), Rp = substitute2(checkR, 1, 1, 0);
  BiMatrix K1 = embed_one(substitute2(K, 1, 0, 0), 0, 2), K2 = embed_one(substitute2(K, 0, 1, 0), 0, 2);
  expect_equal(res, Rm * K1 * Rp * K2, K2 * Rp * K1 * Rm);
  return res;
}

CheckResult check_baxterization(const QMatrix& r, const BoundaryB& B, const Rational& chat) {
  CheckResult res("Baxterization of the boundary element");
  // xi(l) = (chat - kappa l)/2, zeta(l) = l
  UniPoly xi({chat / 2, -B.kappa / 2}), zeta = UniPoly::x();
  auto l1 = [](const UniPoly& p) { return BiPoly::from_affine(p, 1, 0, 0); };
  auto l2 = [](const UniPoly& p) { return BiPoly::from_affine(p, 0, 1, 0); };
  BiPoly lam1 = BiPoly::monomial(1, 1, 0), lam2 = BiPoly::monomial(1, 0, 1);
  BiPoly rel = BiPoly(2) * lam1 * l1(xi) * l2(zeta) - BiPoly(2) * lam2 * l1(zeta) * l2(xi) +
               BiPoly(B.kappa) * (lam1 - lam2) * l1(zeta) * l2(zeta);
  if (!is_zero(rel)) res.fail("scalar relation residual " + rel.str());
  PolyMatrix K = baxterize_K(B, chat);
  PolyMatrix split = PolyMatrix::identity(B.b.legs()) * xi + lift<UniPoly>(B.b) * zeta;
  expect_equal(res, K, split, "K = xi I + zeta b:");
  res.absorb(check_spectral_reflection(baxterize(r).check_R, K));
  return res;
}

const char* to_string(HatVariant v) { return v == HatVariant::reflection ? "reflection" : "twisted"; }

HatR build_hat_R(const PolyMatrix& R, HatVariant v) {
  const std::size_t n = R.legs().at(0);
  if (v == HatVariant::reflection) {
    CheckResult u = check_unitarity(R);
    if (!u) throw ValidationError("unitarity", u.witnesses.front());
    return {flip_legs(R), UniPoly({1, 0, -1})};
  }
  return {substitute(partial_transpose(R, 0), -1, ratio(-static_cast<long>(n), 2)), UniPoly(1)};
}

RstarPhat rstar_phat(const QMatrix& r, HatVariant v) {
  const std::size_t n = r.legs().at(0);
  if (v == HatVariant::reflection) return {r, QMatrix::identity(r.legs())};
  QMatrix P = swap_matrix(n);
  QMatrix rt = partial_transpose(P * r, 0);
  return {rt * P, (rt * ratio(static_cast<long>(n), 2) - partial_transpose(P, 0)) * P};
}

CheckResult check_rstar_consistency(const QMatrix& r, HatVariant v) {
  CheckResult res(cat("hat matrix two-route consistency (", to_string(v), ")"));
  Baxterized bx = baxterize(r);
  PolyMatrix lhs = build_hat_R(bx.R, v).R_hat * lift<UniPoly>(swap_matrix(r.legs().at(0)));
  RstarPhat rp = rstar_phat(r, v);
  PolyMatrix star = lift<UniPoly>(rp.rstar) * UniPoly::x() + lift<UniPoly>(rp.phat);
  expect_equal(res, lhs, v == HatVariant::reflection ? star : -star);
  return res;
}

CheckResult check_quadratic_RE2(const PolyMatrix& R, const PolyMatrix& R_hat, const PolyMatrix& K) {
  return quadratic_relation("quadratic relation", R, R_hat, K, {1, -1, 0}, {1, 1, 0});
}

CheckResult check_dual_RE2(const PolyMatrix& R, const PolyMatrix& R_hat, const PolyMatrix& K_hat) {
  const auto n = static_cast<long>(R.legs().at(0));
  return quadratic_relation("dual quadratic relation", R, R_hat, K_hat, {-1, 1, 0}, {-1, -1, Rational(-n)});
}

std::vector<QMatrix> descending_coeffs(const PolyMatrix& K) {
  int d = degree(K);
  if (d < 0) d = 0;
  std::vector<QMatrix> out;
  for (int j = 0; j <= d; ++j) out.push_back(coeff_matrix(K, d - j));
  return out;
}

CheckResult check_exchange_relations(const QMatrix& r, HatVariant v, const std::vector<QMatrix>& Kc) {
  CheckResult res(cat("coefficient exchange relations (", to_string(v), ")"));
  if (Kc.empty()) throw std::invalid_argument("check_exchange_relations: no coefficients");
  const Legs total = doubled_aux(Kc[0].legs());
  const std::size_t q = Kc[0].leg_count() - 1;
  const int d = static_cast<int>(Kc.size()) - 1;
  RstarPhat rp = rstar_phat(r, v);
  QMatrix r12 = embed(r, {0, 1}, total), rs = embed(rp.rstar, {0, 1}, total), ph = embed(rp.phat, {0, 1}, total);
  std::vector<QMatrix> K1;
  for (const auto& k : Kc) K1.push_back(embed(k, aux_and_quantum(0, q), total));
  QMatrix zero(total);
  // prefix products Type_a K^b, memoised
  enum { X, Y, Z, W };  // r K^a r*, r K^a P_hat, K^a r*, K^a P_hat
  std::vector<std::vector<QMatrix>> pre(4);
  for (int a = 0; a <= d; ++a) {
    pre[X].push_back(r12 * K1[a] * rs);
    pre[Y].push_back(r12 * K1[a] * ph);
    pre[Z].push_back(K1[a] * rs);
    pre[W].push_back(K1[a] * ph);
  }
  std::map<std::tuple<int, int, int>, QMatrix> memo;
  auto term = [&](int type, int a, int b) -> const QMatrix& {
    if (a < 0 || a > d || b < 0 || b > d) return zero;
    auto key = std::make_tuple(type, a, b);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, pre[type][a] * K1[b]).first;
    return it->second;
  };
  for (int n = -2; n <= d; ++n)
    for (int m = -2; m <= d; ++m) {
      QMatrix lhs = term(X, n + 2, m) - term(X, n, m + 2) + term(Y, n + 1, m) - term(Y, n, m + 1) +
                    term(Z, n + 1, m) + term(Z, n, m + 1) + term(W, n, m);
      QMatrix rhs_r = term(Z, m, n + 2) - term(Z, m + 2, n) + term(W, m, n + 1) - term(W, m + 1, n);
      QMatrix rhs = rhs_r * r12 + term(Z, m + 1, n) + term(Z, m, n + 1) + term(W, m, n);
      std::string label = n == -2 ? "leading " : n == -1 ? "subleading " : "";
      expect_equal(res, lhs, rhs, label + nm(n, m));
    }
  return res;
}

CheckResult check_rela(const QMatrix& r, const std::vector<QMatrix>& Kc) {
  CheckResult res("reflection-algebra commutators");
  if (Kc.size() < 2) throw std::invalid_argument("check_rela: need K^(0) and K^(1)");
  const Legs total = doubled_aux(Kc[0].legs());
  const std::size_t q = Kc[0].leg_count() - 1;
  QMatrix r12 = embed(r, {0, 1}, total);
  std::vector<QMatrix> K1;
  for (const auto& k : Kc) K1.push_back(embed(k, aux_and_quantum(0, q), total));
  QMatrix a0 = r12 * K1[0] * r12, a1 = r12 * K1[1] * r12;
  for (std::size_t m = 0; m < K1.size(); ++m) {
    const QMatrix& Km = K1[m];
    expect_zero(res, commutator(a0, Km), cat("[r K0 r, K", m, "]"));
    QMatrix rhs = Km * K1[0] * r12 + Km * r12 * K1[0] - K1[0] * r12 * Km - r12 * K1[0] * Km;
    expect_equal(res, commutator(a1, Km), rhs, cat("[r K1 r, K", m, "]"));
  }
  return res;
}

CheckResult check_suba2(const QMatrix& V, const std::vector<QMatrix>& Kc) {
  CheckResult res("Lyubashenko subalgebra relations");
  if (Kc.size() < 2) throw std::invalid_argument("check_suba2: need K^(0) and K^(1)");
  const Legs total = doubled_aux(Kc[0].legs());
  const std::size_t q = Kc[0].leg_count() - 1;
  Legs rest(Kc[0].legs().begin() + 1, Kc[0].legs().end());
  QMatrix Vi = invert(V);
  QMatrix Va = kron(V, QMatrix::identity(rest)), Via = kron(Vi, QMatrix::identity(rest));
  std::vector<QMatrix> T1, T2;
  for (const auto& k : Kc) {
    QMatrix t = (Via * k * Va).reshaped(Kc[0].legs());
    T1.push_back(embed(t, aux_and_quantum(0, q), total));
    T2.push_back(embed(t, aux_and_quantum(1, q), total));
  }
  QMatrix P12 = embed(swap_matrix(V.dim()), {0, 1}, total);
  QMatrix s0 = T1[0] + T2[0];
  for (std::size_t m = 0; m < T1.size(); ++m)
    expect_equal(res, commutator(T2[1], T1[m]), P12 * (T2[m] * s0 - s0 * T1[m]), cat("m = ", m));
  return res;
}

CheckResult check_trace_commutation(const std::vector<QMatrix>& Kc) {
  CheckResult res("trace commutation [K1_xy, tr K^(m)]");
  if (Kc.size() < 2) throw std::invalid_argument("check_trace_commutation: need K^(1)");
  const std::size_t n = Kc[0].legs().at(0);
  std::vector<QMatrix> traces;
  for (const auto& k : Kc) traces.push_back(partial_trace(k, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      QMatrix blk = aux_block(Kc[1], x, y);
      for (std::size_t m = 0; m < traces.size(); ++m)
        expect_zero(res, commutator(blk, traces[m]), cat("(x,y) = (", x, ",", y, "), m = ", m));
    }
  return res;
}

std::vector<QMatrix> search_boundaries_n2(const QMatrix& r, const Rational& Q, const std::vector<Rational>& grid) {
  if (r.legs().at(0) != 2) throw std::invalid_argument("search_boundaries_n2: r must act on C^2 x C^2");
  std::vector<QMatrix> out;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid)
        for (const auto& d : grid) {
          QMatrix m({2});
          m(0, 0) = a;
          m(0, 1) = b;
          m(1, 0) = c;
          m(1, 1) = d;
          if (check_btype(r, make_boundary(m, Q))) out.push_back(m);
        }
  return out;
}

}  // namespace ybx
