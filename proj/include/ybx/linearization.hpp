#pragma once

#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// r = sum e_{x,sigma_x(y)} (x) e_{y,tau_y(x)} on two legs.
QMatrix linearize(const SetSolution& s);

struct Baxterized {
  PolyMatrix check_R;  // l r + I
  PolyMatrix R;        // P (l r + I)
};
Baxterized baxterize(const QMatrix& r);

/// R_21 = P R P
template <class T>
Matrix<T> flip_legs(const Matrix<T>& a) {
  const std::size_t n = a.legs().at(0);
  Matrix<T> p = lift<T>(swap_matrix(n));
  return p * a * p;
}

CheckResult check_ybe_spectral(const PolyMatrix& check_R);
CheckResult check_unitarity(const PolyMatrix& R);
CheckResult check_crossing(const PolyMatrix& R, int n);
CheckResult check_hecke_a(const QMatrix& r);
CheckResult trace_identity(const QMatrix& r);

/// Permutation-like matrices P and r must share eigenvalue multiplicities
/// (n^2+n)/2 for +1 and (n^2-n)/2 for -1.
CheckResult check_eigen_multiplicities(const QMatrix& r);

}  // namespace ybx
