#include "ybx/qdeform.hpp"

#include <algorithm>

#include "ybx/linalg.hpp"
#include "ybx/twist.hpp"

namespace ybx {

namespace {

int sgn_int(int v) { return (v > 0) - (v < 0); }

LaurentS q() { return LaurentS::q_pow(1); }

LMatrix lunit(std::size_t n, std::size_t r, std::size_t c) { return unit<LaurentS>(n, r, c); }

// diag with s^{+-1} at a and s^{-+1} at b: q^{+-(e_aa - e_bb)/2}
LMatrix half_H(std::size_t n, std::size_t a, std::size_t b, int sign) {
  LMatrix m = LMatrix::identity({n});
  m(a, a) = LaurentS::s_pow(sign);
  m(b, b) = LaurentS::s_pow(-sign);
  return m;
}

LMatrix q_e(std::size_t n, std::size_t j) {
  LMatrix m = LMatrix::identity({n});
  m(j, j) = q();
  return m;
}

std::size_t at(const Map& m, std::size_t i) { return static_cast<std::size_t>(m[i]); }

}  // namespace

LMatrix build_g(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_g: n >= 2 required");
  LMatrix g = LMatrix::identity({n, n}) * q();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      g(x * n + y, y * n + x) += LaurentS(1);
      int sg = sgn_int(static_cast<int>(x) - static_cast<int>(y));
      g(x * n + y, x * n + y) -= LaurentS::q_pow(-sg);
    }
  return g;
}

CheckResult check_hecke_q(const LMatrix& g) {
  CheckResult res("A-type Hecke relations over Q[s, 1/s]");
  LMatrix I = LMatrix::identity(g.legs());
  LMatrix a = g - I * q(), b = g + I * LaurentS::q_pow(-1);
  expect_zero(res, a * b, "(g - q)(g + 1/q):");
  const std::size_t n = g.legs().at(0);
  LMatrix g12 = embed_pair(g, 0, 1, 3), g23 = embed_pair(g, 1, 2, 3);
  (void)n;
  expect_equal(res, g12 * g23 * g12, g23 * g12 * g23, "braid:");
  return res;
}

SgnReport validate_sgn_condition(const Map& sigma, const Map& tau) {
  if (sigma.size() != tau.size() || !is_bijective_map(sigma) || !is_bijective_map(tau))
    throw std::invalid_argument("validate_sgn_condition: sigma, tau must be bijections of one set");
  if (compose(sigma, tau) != identity_map(static_cast<int>(sigma.size())))
    throw std::invalid_argument("validate_sgn_condition: sigma o tau must be the identity");
  SgnReport rep{CheckResult("sgn condition (statement)"), CheckResult("sgn condition (proof form)")};
  const int n = static_cast<int>(sigma.size());
  for (int x = 0; x < n && rep.statement.passed; ++x)
    for (int y = 0; y < n && rep.statement.passed; ++y) {
      if (x == y) continue;
      int a = sgn_int(x - y), b = sgn_int(tau[x] - tau[y]), c = sgn_int(sigma[x] - sigma[y]);
      if (a != b || a != c)
        rep.statement.fail(cat("(x,y) = (", x, ",", y, "): sgn ", a, ", ", b, ", ", c));
    }
  for (int x = 0; x < n && rep.proof_form.passed; ++x)
    for (int y = 0; y < n && rep.proof_form.passed; ++y)
      if (sgn_int(tau[x] - y) != sgn_int(sigma[x] - y))
        rep.proof_form.fail(cat("(x,y) = (", x, ",", y, "): sgn(tau(x)-y) = ", sgn_int(tau[x] - y),
                                ", sgn(sigma(x)-y) = ", sgn_int(sigma[x] - y)));
  return rep;
}

CheckResult check_symq(const LMatrix& g, const QMatrix& V) {
  CheckResult res("(V x V) g = g (V x V)");
  LMatrix VV = lift<LaurentS>(kron(V, V));
  expect_equal(res, VV * g, g * VV);
  return res;
}

LMatrix conjugate_g(const LMatrix& g, const QMatrix& V) {
  const std::size_t n = V.dim();
  QMatrix I = QMatrix::identity({n});
  return lift<LaurentS>(kron(V, I)) * g * lift<LaurentS>(kron(invert(V), I));
}

LMatrix special_G(std::size_t n, const Map& sigma, int form) {
  Map tau = inverse_map(sigma);
  LMatrix G = LMatrix::identity({n, n}) * q();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      LaurentS c = -LaurentS::q_pow(-sgn_int(static_cast<int>(x) - static_cast<int>(y)));
      if (form == 1) {
        G = G + kron(lunit(n, x, y), lunit(n, at(tau, y), at(tau, x))) +
            kron(lunit(n, x, x), lunit(n, at(tau, y), at(tau, y))) * c;
      } else {
        G = G + kron(lunit(n, at(sigma, x), at(sigma, y)), lunit(n, y, x)) +
            kron(lunit(n, at(sigma, x), at(sigma, x)), lunit(n, y, y)) * c;
      }
    }
  return G;
}

LMatrix build_G(const LMatrix& g, const QMatrix& V) {
  const std::size_t n = V.dim();
  Map tau(n, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!is_zero(V(x, y))) {
        if (V(x, y) != 1 || tau[x] != -1) throw std::invalid_argument("build_G: V must be a permutation matrix");
        tau[x] = static_cast<int>(y);
      }
  if (!is_bijective_map(tau)) throw std::invalid_argument("build_G: V must be a permutation matrix");
  Map sigma = inverse_map(tau);
  SgnReport sr = validate_sgn_condition(sigma, tau);
  if (!sr.statement) throw ValidationError("sgn condition", sr.statement.witnesses.front());
  CheckResult c = check_symq(g, V);
  if (!c) throw ValidationError("(V x V) g = g (V x V)", c.witnesses.front());
  LMatrix G = conjugate_g(g, V);
  QMatrix I = QMatrix::identity({n});
  LMatrix G2 = lift<LaurentS>(kron(I, invert(V))) * g * lift<LaurentS>(kron(I, V));
  if (!(G == G2) || !(G == special_G(n, sigma, 2)) || !(G == special_G(n, sigma, 1)))
    throw InternalInconsistency("build_G: the forms of G disagree for an admissible V");
  return G;
}

std::vector<Map> admissible_permutations(std::size_t n) {
  LMatrix g = build_g(n);
  std::vector<Map> out;
  Map p = identity_map(static_cast<int>(n));
  do {
    QMatrix V({n});
    for (std::size_t x = 0; x < n; ++x) V(x, at(p, x)) = 1;
    if (check_symq(g, V)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// sum over positions m: (x)_{p<m} q^{-H_{m_p(j)}/2} (x) xi_{m_m} (x) (x)_{p>m} q^{H_{m_p(j)}/2}
LMatrix chevalley(std::size_t n, std::size_t j, bool raise, const std::vector<Map>& rel) {
  const std::size_t N = rel.size();
  LMatrix total(uniform_legs(n, N));
  for (std::size_t m = 0; m < N; ++m) {
    std::vector<LMatrix> fs;
    for (std::size_t p = 0; p < N; ++p) {
      std::size_t a = at(rel[p], j), b = at(rel[p], j + 1);
      if (p < m) fs.push_back(half_H(n, a, b, -1));
      else if (p > m) fs.push_back(half_H(n, a, b, +1));
      else fs.push_back(raise ? lunit(n, a, b) : lunit(n, b, a));
    }
    total += kron_all(fs);
  }
  return total;
}

LMatrix cartan(std::size_t n, std::size_t j, const std::vector<Map>& rel) {
  std::vector<LMatrix> fs;
  for (const auto& m : rel) fs.push_back(q_e(n, at(m, j)));
  return kron_all(fs);
}

std::vector<Map> relabels(std::size_t n, std::size_t N, UqVariant v, const Map& sigma) {
  std::vector<Map> rel;
  for (std::size_t p = 0; p < N; ++p) {
    switch (v) {
      case UqVariant::standard: rel.push_back(identity_map(static_cast<int>(n))); break;
      case UqVariant::first: rel.push_back(map_power(sigma, static_cast<int>(N - 1 - p))); break;
      case UqVariant::second: rel.push_back(map_power(inverse_map(sigma), static_cast<int>(p))); break;
    }
  }
  return rel;
}

}  // namespace

std::vector<NamedOp> uq_fundamental_coproducts(std::size_t n, std::size_t j, UqVariant v,
                                               const Map& sigma) {
  if (j >= n) throw std::out_of_range("uq_fundamental_coproducts: index j out of range");
  if (sigma.size() != n) throw std::invalid_argument("uq_fundamental_coproducts: sigma size");
  auto rel = relabels(n, 2, v, sigma);
  std::vector<NamedOp> out;
  if (j + 1 < n) {
    out.push_back({cat("D(e_", j, ",", j + 1, ")"), chevalley(n, j, true, rel)});
    out.push_back({cat("D(e_", j + 1, ",", j, ")"), chevalley(n, j, false, rel)});
  }
  out.push_back({cat("D(q^e_", j, ",", j, ")"), cartan(n, j, rel)});
  return out;
}

std::vector<NamedOp> uq_coproducts(std::size_t n, std::size_t N, UqVariant v, const Map& sigma) {
  if (sigma.size() != n) throw std::invalid_argument("uq_coproducts: sigma size");
  auto rel = relabels(n, N, v, sigma);
  std::vector<NamedOp> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j + 1 < n) {
      out.push_back({cat("D(e_", j, ",", j + 1, ")"), chevalley(n, j, true, rel)});
      out.push_back({cat("D(e_", j + 1, ",", j, ")"), chevalley(n, j, false, rel)});
    }
    out.push_back({cat("D(q^e_", j, ",", j, ")"), cartan(n, j, rel)});
  }
  return out;
}

CheckResult check_uq_symmetry(const LMatrix& braid, const std::vector<NamedOp>& family) {
  CheckResult res("U_q(gl_n) symmetry");
  for (const auto& [name, op] : family) expect_zero(res, commutator(braid, op), "[g, " + name + "]");
  return res;
}

CheckResult check_uq_conjugation(std::size_t n, std::size_t N, int variant, const Map& sigma) {
  CheckResult res(cat("variant ", variant, " coproducts as F_", variant, "^(", N, ") conjugation"));
  SetSolution s = lyubashenko_solution(sigma);
  QMatrix F = f_n_builder(lyubashenko_V(s), N, variant);
  LMatrix Fl = lift<LaurentS>(F), Fi = lift<LaurentS>(invert(F));
  auto std_fam = uq_coproducts(n, N, UqVariant::standard, sigma);
  auto var_fam = uq_coproducts(n, N, variant == 1 ? UqVariant::first : UqVariant::second, sigma);
  for (std::size_t i = 0; i < std_fam.size(); ++i)
    expect_equal(res, Fl * std_fam[i].op * Fi, var_fam[i].op, var_fam[i].name);
  return res;
}

CheckResult check_serre_two_site(std::size_t n) {
  CheckResult res("q-Serre and [e_i, f_j] relations (two-site coproducts)");
  Map id = identity_map(static_cast<int>(n));
  auto rel = relabels(n, 2, UqVariant::standard, id);
  std::vector<LMatrix> e, f;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e.push_back(chevalley(n, i, true, rel));
    f.push_back(chevalley(n, i, false, rel));
  }
  LaurentS q2 = LaurentS::q_pow(1) + LaurentS::q_pow(-1);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (const auto* chi : {&e, &f}) {
        const LMatrix& a = (*chi)[i];
        const LMatrix& b = (*chi)[j];
        if (i == j) continue;
        std::size_t gap = i > j ? i - j : j - i;
        if (gap == 1)
          expect_zero(res, a * a * b - a * b * a * q2 + b * a * a, cat("Serre (i,j) = (", i, ",", j, ")"));
        else
          expect_zero(res, commutator(a, b), cat("commuting (i,j) = (", i, ",", j, ")"));
      }
      // [e_i, f_j] = d_ij [h_i]_q with h_i = (e_ii - e_i+1,i+1) (x) 1 + 1 (x) (e_ii - e_i+1,i+1)
      LMatrix rhs(uniform_legs(n, 2));
      if (i == j) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            auto h = [&](std::size_t x) { return (x == i ? 1 : 0) - (x == i + 1 ? 1 : 0); };
            int k = h(a) + h(b);
            LaurentS qk;  // [k]_q = sum_{t=0}^{|k|-1} q^{|k|-1-2t}, odd in k
            for (int t = 0; t < std::abs(k); ++t) qk += LaurentS::q_pow(std::abs(k) - 1 - 2 * t, k > 0 ? 1 : -1);
            rhs(a * n + b, a * n + b) = qk;
          }
      }
      expect_equal(res, commutator(e[i], f[j]), rhs, cat("[e_", i, ", f_", j, "]"));
    }
  return res;
}

}  // namespace ybx
