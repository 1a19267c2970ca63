#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybx/boundary.hpp"
#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// Polynomial matrix on legs [aux, 1..N] with a scalar factor left out of the entries.
struct Monodromy {
  PolyMatrix M;
  UniPoly scalar{1};
};

/// T(l) = R_0N(l) ... R_01(l), R = l P r + P.
PolyMatrix build_T(const QMatrix& r, std::size_t N);
/// reflection: R_10(l) ... R_N0(l) = (1 - l^2)^N T^-1(-l); twisted: T^{t_0}(-l - n/2).
Monodromy build_That(const QMatrix& r, std::size_t N, HatVariant v);
/// T(-l) That(l) = (1 - l^2)^N I for the reflection variant.
CheckResult check_That_inverse(const QMatrix& r, std::size_t N);
/// R_00'(l1 - l2) T_0(l1) T_0'(l2) = T_0'(l2) T_0(l1) R_00'(l1 - l2) on legs [0, 0', 1..N].
CheckResult check_RTT(const QMatrix& r, std::size_t N);

struct OpenMonodromy {
  PolyMatrix M;  // legs [aux, 1..N]
  UniPoly scalar{1};
  HatVariant variant = HatVariant::reflection;
  std::size_t sites = 0;
  int top = 0;  // M = l^top sum_k M^(k) / l^k
};
/// T K_0 That for a c-number K on the auxiliary leg.
OpenMonodromy build_open(const QMatrix& r, const PolyMatrix& K, std::size_t N, HatVariant v);
/// Coefficients M^(k), k = 0..top.
std::vector<QMatrix> open_coeffs(const OpenMonodromy& T);

struct TransferExpansion {
  PolyMatrix t;                 // tr_0 T(l), legs [1..N]
  std::vector<QMatrix> coeffs;  // t^(k) = coefficient of l^(top - k)
  int top = 0;
};
/// t(l) = tr_0(K_hat_0 T_0(l)) with K_hat = I.
TransferExpansion build_transfer(const OpenMonodromy& T);
CheckResult check_reconstruction(const TransferExpansion& e);

/// [t(l1), t(l2)] = 0 as a bivariate identity, and [t^(k), t^(l)] = 0 for all pairs.
CheckResult check_commutativity(const TransferExpansion& e);

/// Quadratic relation for the open monodromy, through the coefficient relations, and
/// (when small enough) bivariately.
CheckResult check_open_quadratic(const QMatrix& r, const OpenMonodromy& T, bool bivariate);

struct HamiltonianReport {
  CheckResult literal;    // t^(2N) = 2 sum r_{n n+1} + bhat_1 + 2 tr_0(r_N0)
  CheckResult corrected;  // t^(2N) = n (2 sum r_{n n+1} + bhat_1) + 2 I
  QMatrix residual;       // t^(2N) minus the literal right-hand side
};
HamiltonianReport hamiltonian_check(const TransferExpansion& e, const QMatrix& r, const QMatrix& bhat,
                                    std::size_t N);

/// A_{n,n+1} = r on quantum legs n, n+1 (1-based n), and bhat on leg 1, as matrices on N legs.
QMatrix r_on(const QMatrix& r, std::size_t n, std::size_t N);

struct SpanReport {
  CheckResult result;
  std::vector<int> cap_used;  // per k >= 1: smallest cap that succeeded, -1 if none
  std::size_t words = 0;      // distinct products enumerated at the final cap
  std::size_t rank = 0;
};
/// t^(k), k >= 1, in the Q-span of products of {r_{n n+1}, bhat_1} of length <= cap;
/// cap escalates from 2N+2 to 2N+4 before reporting a failure.
SpanReport hecke_expressibility(const TransferExpansion& e, const QMatrix& r, const QMatrix& bhat,
                                std::size_t N, std::optional<int> cap = std::nullopt);

/// The lemma words: T^(0) = r_{N-1 N} ... r_12, T^(1) = sum with one factor omitted
/// (decreasing order); the hatted words use increasing order.
QMatrix lemma_word(const QMatrix& r, std::size_t N, int i, bool hat);
CheckResult check_lemma1_relations(const QMatrix& r, std::size_t N);

struct CotwReport {
  CheckResult literal;    // T^(1) = 2c sum_n r_{n n+1} ... r_{N0} ... r_{n n+1}
  CheckResult corrected;  // the same plus the identity
  QMatrix residual;       // T^(1) minus the literal sum
};
/// b = I, K = l c + 1, reflection variant.
CotwReport compute_T1_two_ways(const QMatrix& r, std::size_t N, const Rational& c);

struct SubalgebraReport {
  std::vector<Outcome> items;
  std::optional<Rational> gl_factor;  // extracted structure-constant factor
};
/// Commutators of T^(0), T^(1) with the Hecke generators, the reflection-algebra relations,
/// Lyubashenko relations, trace commutation, and the b = I corollaries.
SubalgebraReport boundary_subalgebra_checks(const SetSolution& s, const BoundaryB& B, const Rational& c,
                                            std::size_t N);

/// [X_ab, X_cd] = alpha (d_bc X_ad - d_ad X_cb); returns alpha if one factor fits all.
std::optional<Rational> extract_gl_factor(const std::vector<QMatrix>& X, std::size_t n, CheckResult& res);

struct SymmetryConfig {
  std::vector<std::string> checks;  // empty: all
  std::optional<Rational> xi;       // diagonal-A parameter; default searched over {-1, 2}
};
std::vector<std::string> symmetry_check_names();
/// Each requested lemma: hypotheses first (not-applicable when they fail), then the
/// commutator with t(l) as a polynomial identity.
std::vector<Outcome> symmetry_suite(const SetSolution& s, const QMatrix& b, const Rational& c, std::size_t N,
                                    const SymmetryConfig& cfg = {});

/// Operators on N legs used by the symmetry suite.
QMatrix orbit_operator(const std::vector<std::vector<int>>& orbits, const std::vector<int>& p,
                       const std::vector<int>& q, std::size_t n, std::size_t N);

}  // namespace ybx
