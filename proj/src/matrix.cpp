#include "ybx/matrix.hpp"

namespace ybx {

QMatrix coeff_matrix(const PolyMatrix& p, int k) {
  return map_entries<Rational>(p, [k](const UniPoly& x) { return x.coeff(k); });
}

int degree(const PolyMatrix& p) {
  int d = -1;
  for (const auto& x : p.entries()) d = std::max(d, x.degree());
  return d;
}

PolyMatrix from_coeffs(const std::vector<QMatrix>& c) {
  if (c.empty()) throw std::invalid_argument("from_coeffs: empty coefficient list");
  PolyMatrix r(c[0].legs());
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j)
        if (!is_zero(c[k](i, j))) r(i, j) += UniPoly::monomial(c[k](i, j), static_cast<int>(k));
  return r;
}

PolyMatrix substitute(const PolyMatrix& p, const Rational& a, const Rational& b) {
  return map_entries<UniPoly>(p, [&](const UniPoly& x) { return x.compose_affine(a, b); });
}

BiMatrix substitute2(const PolyMatrix& p, const Rational& a, const Rational& b, const Rational& c) {
  return map_entries<BiPoly>(p, [&](const UniPoly& x) { return BiPoly::from_affine(x, a, b, c); });
}

QMatrix evaluate(const PolyMatrix& p, const Rational& v) {
  return map_entries<Rational>(p, [&](const UniPoly& x) { return x.eval(v); });
}

QMatrix at_s_one(const LMatrix& m) {
  return map_entries<Rational>(m, [](const LaurentS& x) { return x.eval(1); });
}

std::string entry_string(const Rational& x) { return to_string(x); }
std::string entry_string(const UniPoly& x) { return x.str(); }
std::string entry_string(const BiPoly& x) { return x.str(); }
std::string entry_string(const LaurentS& x) { return x.str(); }

}  // namespace ybx
