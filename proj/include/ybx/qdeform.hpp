#pragma once

#include <string>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// g = sum_{x != y} (e_xy (x) e_yx - q^{-sgn(x-y)} e_xx (x) e_yy) + q, with q = s^2.
LMatrix build_g(std::size_t n);

/// (g - q)(g + q^-1) = 0 and the braid relation on three legs.
CheckResult check_hecke_q(const LMatrix& g);

struct SgnReport {
  CheckResult statement;   // sgn(x-y) = sgn(tau(x)-tau(y)) = sgn(sigma(x)-sigma(y)), x != y
  CheckResult proof_form;  // sgn(tau(x)-y) = sgn(sigma(x)-y), all x, y
};
/// Both readings of the order condition; sigma o tau = id is required.
SgnReport validate_sgn_condition(const Map& sigma, const Map& tau);

/// (V (x) V) g = g (V (x) V)
CheckResult check_symq(const LMatrix& g, const QMatrix& V);

/// (V (x) I) g (V^-1 (x) I), for any invertible V.
LMatrix conjugate_g(const LMatrix& g, const QMatrix& V);
/// The explicit expansion of G in terms of sigma (form 2) or tau (form 1).
LMatrix special_G(std::size_t n, const Map& sigma, int form);

/// G for an admissible V = sum e_{x,tau(x)}; throws ValidationError naming the failed
/// condition (sgn condition or commutation) with a witness.
LMatrix build_G(const LMatrix& g, const QMatrix& V);

/// Permutations V of {0..n-1} with (V (x) V) g = g (V (x) V).
std::vector<Map> admissible_permutations(std::size_t n);

struct NamedOp {
  std::string name;
  LMatrix op;
};

enum class UqVariant { standard, first, second };

/// Coproducts of e_{j,j+1}, e_{j+1,j} and q^{e_jj} in the fundamental representation on
/// N sites. Variants relabel site p by sigma^{N-p} (first) or tau^{p-1} (second).
std::vector<NamedOp> uq_coproducts(std::size_t n, std::size_t N, UqVariant v, const Map& sigma);
/// Two-site family for one index j (0-based): e-type, f-type, and q^{e_jj}.
std::vector<NamedOp> uq_fundamental_coproducts(std::size_t n, std::size_t j, UqVariant v,
                                               const Map& sigma);

/// [braid, D(Y)] = 0 for every member.
CheckResult check_uq_symmetry(const LMatrix& braid, const std::vector<NamedOp>& family);
/// Variant coproducts equal F_i^(N) D^(N) F_i^(N)^-1.
CheckResult check_uq_conjugation(std::size_t n, std::size_t N, int variant, const Map& sigma);
/// q-Serre relations and [e_i, f_j] = d_ij [h_i]_q for the two-site standard coproducts.
CheckResult check_serre_two_site(std::size_t n);

}  // namespace ybx
