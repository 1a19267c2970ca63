#pragma once

#include <utility>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

using Cell = std::pair<int, int>;

struct CellPairing {
  std::vector<Cell> fixed;                    // r(x,y) = (x,y), lexicographic
  std::vector<std::pair<Cell, Cell>> cycles;  // (representative, partner), representative smaller
};

CellPairing cell_pairing(const SetSolution& s);

struct Twist {
  QMatrix F;
  CellPairing pairing;
};

/// F with r = F P F^-1, from the canonical eigenvector pairing (weights 1/2, no square roots).
Twist build_twist(const SetSolution& s);
/// r = F P F^-1 and P r = F^op F^-1 with F^op = P F P.
CheckResult verify_twist(const QMatrix& F, const QMatrix& r);

/// V = sum_x e_{x,tau(x)}; requires Lyubashenko type.
QMatrix lyubashenko_V(const SetSolution& s);
/// r = (V (x) I) P (V^-1 (x) I) and P r = V^-1 (x) V.
CheckResult check_lyubashenko(const SetSolution& s);

enum class CoproductVariant { standard, first, second, general };

/// N-site coproduct of e_{x,y}: standard, the Lyubashenko variants, or (N = 2) F-conjugation.
QMatrix twisted_coproduct(const SetSolution& s, int x, int y, CoproductVariant v, std::size_t N);
/// All n^2 generators, index x*n + y.
std::vector<QMatrix> coproduct_family(const SetSolution& s, CoproductVariant v, std::size_t N);
/// Standard N-site coproduct sum_n I..e..I, n x n units.
QMatrix standard_coproduct(std::size_t n, int x, int y, std::size_t N);

/// [r, D(e_xy)] = 0 for every generator, and the gl_n relations within the family.
CheckResult check_gl_symmetry(const QMatrix& r, const std::vector<QMatrix>& family);
/// [D(e_xy), D(e_zw)] = d_yz D(e_xw) - d_xw D(e_zy)
CheckResult check_gl_relations(const std::vector<QMatrix>& family, std::size_t n);

/// F_1 = V^{N-1} (x) ... (x) V (x) I,  F_2 = I (x) V^-1 (x) ... (x) V^{-(N-1)}.
QMatrix f_n_builder(const QMatrix& V, std::size_t N, int variant);
/// F_i D^(N) F_i^-1 reproduces twisted_coproduct variant i for all generators.
CheckResult check_f_n(const SetSolution& s, std::size_t N, int variant);

/// (D_i (x) id) D_i vs (id (x) D_i) D_i on three sites, for the Lyubashenko variants.
/// Passed means co-associative; reported as a measurement only.
CheckResult coassociativity_probe(const SetSolution& s, int variant);

}  // namespace ybx
