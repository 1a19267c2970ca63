#pragma once

#include <vector>

#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// Boundary element b with b^2 = kappa b + I, kappa = Q - 1/Q.
struct BoundaryB {
  QMatrix b;
  Rational Q{1};
  Rational kappa{0};
};

BoundaryB make_boundary(QMatrix b, const Rational& Q = 1);

/// (b x I) r (b x I) r = r (b x I) r (b x I), b^2 = kappa b + I, and [b_1, r_23] = 0.
CheckResult check_btype(const QMatrix& r, const BoundaryB& B);
/// The same exchange with b on the second leg: (I x b) r (I x b) r = r (I x b) r (I x b).
CheckResult check_btype_second_slot(const QMatrix& r, const BoundaryB& B);

/// b = sum_x e_{x,k(x)} for an involutive k passing the set reflection equation.
/// Throws ValidationError (involutivity, reflection criterion) with a witness.
BoundaryB b_from_reflection(const SetSolution& s, const Map& k);

/// K(l) = l (b - kappa/2) + chat/2
PolyMatrix baxterize_K(const BoundaryB& B, const Rational& chat);
/// K(l) = l c b + I
PolyMatrix c_form_K(const QMatrix& b, const Rational& c);

/// R(l1 - l2) K_1(l1) R(l1 + l2) K_1(l2) = K_1(l2) R(l1 + l2) K_1(l1) R(l1 - l2), braid form.
CheckResult check_spectral_reflection(const PolyMatrix& check_R, const PolyMatrix& K);

/// K = xi I + zeta b with xi = (chat - l kappa)/2, zeta = l: the scalar relation
/// 2 l1 xi1 zeta2 - 2 l2 zeta1 xi2 + kappa (l1 - l2) zeta1 zeta2 = 0, plus the reflection
/// equation for the constructed K.
CheckResult check_baxterization(const QMatrix& r, const BoundaryB& B, const Rational& chat);

enum class HatVariant { reflection, twisted };
const char* to_string(HatVariant v);

/// R_hat with R_hat = scalar * R^{-1}(-l) (reflection: R_21(l), scalar 1 - l^2)
/// or R_hat = R^{t_1}(-l - n/2) (twisted: scalar 1).
struct HatR {
  PolyMatrix R_hat;
  UniPoly scalar;
};
/// Throws ValidationError when the reflection variant is requested for a non-unitary R.
HatR build_hat_R(const PolyMatrix& R, HatVariant v);

struct RstarPhat {
  QMatrix rstar;
  QMatrix phat;
};
RstarPhat rstar_phat(const QMatrix& r, HatVariant v);
/// R_hat(l) P = +-(l r* + P_hat): the two routes to the braid-form hat matrix agree.
CheckResult check_rstar_consistency(const QMatrix& r, HatVariant v);

/// Bivariate quadratic relation on legs [a1, a2, q...] for K on [aux, q...]:
/// R_12(l1-l2) K_1(l1) Rh_12(l1+l2) K_2(l2) = K_2(l2) Rh_21(l1+l2) K_1(l1) R_21(l1-l2).
CheckResult check_quadratic_RE2(const PolyMatrix& R, const PolyMatrix& R_hat, const PolyMatrix& K);
/// The dual relation (arguments l_i -> -l_i - n/2 in R and R_hat) for a c-number K_hat.
CheckResult check_dual_RE2(const PolyMatrix& R, const PolyMatrix& R_hat, const PolyMatrix& K_hat);

/// Coefficients K^(j), j = 0..d, of K(l) = l^d sum_j K^(j) / l^j.
std::vector<QMatrix> descending_coeffs(const PolyMatrix& K);

/// Exchange relations among coefficient matrices: every (l1^{-n} l2^{-m}) component of
/// the braid form of the quadratic relation, n, m in [-2, d], with K^(j<0) = K^(j>d) = 0.
/// Labels n = -2 and n = -1 as the leading relations.
CheckResult check_exchange_relations(const QMatrix& r, HatVariant v, const std::vector<QMatrix>& Kc);

/// Reflection-algebra consequences: [r K0 r, Km] = 0 and
/// [r K1 r, Km] = Km K0 r + Km r K0 - K0 r Km - r K0 Km for all m.
CheckResult check_rela(const QMatrix& r, const std::vector<QMatrix>& Kc);

/// Lyubashenko form, with Kt = V^-1 K V on the auxiliary leg:
/// [Kt2^(1), Kt1^(m)] = P12 (Kt2^(m) (Kt1^(0) + Kt2^(0)) - (Kt1^(0) + Kt2^(0)) Kt1^(m)).
CheckResult check_suba2(const QMatrix& V, const std::vector<QMatrix>& Kc);

/// [K^(1)_{x,y}, tr_aux K^(m)] = 0 for all x, y, m.
CheckResult check_trace_commutation(const std::vector<QMatrix>& Kc);

/// b on one leg of size 2 over grid^4 passing check_btype against r, in lexicographic order.
std::vector<QMatrix> search_boundaries_n2(const QMatrix& r, const Rational& Q,
                                          const std::vector<Rational>& grid);

}  // namespace ybx
