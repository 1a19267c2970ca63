#include "ybx/twist.hpp"

#include <algorithm>

#include "ybx/linalg.hpp"
#include "ybx/linearization.hpp"

namespace ybx {

namespace {

std::size_t cell_index(const Cell& c, int n) {
  return static_cast<std::size_t>(c.first) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(c.second);
}

QMatrix power(const QMatrix& a, int k) {
  QMatrix base = k >= 0 ? a : invert(a);
  QMatrix r = QMatrix::identity(a.legs());
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

QMatrix sited(std::size_t n, std::size_t N, std::size_t pos, const QMatrix& op) {
  std::vector<QMatrix> fs(N, QMatrix::identity({n}));
  fs[pos] = op;
  return kron_all(fs);
}

}  // namespace

CellPairing cell_pairing(const SetSolution& s) {
  CellPairing p;
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      Cell c{x, y};
      Cell img = s.apply(x, y);
      if (img == c) p.fixed.push_back(c);
      else if (c < img) p.cycles.emplace_back(c, img);
    }
  return p;
}

Twist build_twist(const SetSolution& s) {
  const int n = s.n;
  CellPairing pr = cell_pairing(s);
  if (static_cast<int>(pr.fixed.size()) != n ||
      static_cast<int>(pr.cycles.size()) != n * (n - 1) / 2)
    throw InternalInconsistency(cat("cell pairing: ", pr.fixed.size(), " fixed cells, ", pr.cycles.size(),
                                    " cycles for n = ", n));
  const auto nn = static_cast<std::size_t>(n);
  QMatrix F({nn, nn});
  auto outer = [&](const std::vector<std::pair<std::size_t, Rational>>& u,
                   const std::vector<std::pair<std::size_t, Rational>>& v, const Rational& w) {
    for (const auto& [i, a] : u)
      for (const auto& [j, b] : v) F(i, j) += w * a * b;
  };
  // fixed cells of r pair with diagonal cells of P
  for (int i = 0; i < n; ++i)
    outer({{cell_index(pr.fixed[static_cast<std::size_t>(i)], n), 1}}, {{cell_index({i, i}, n), 1}}, 1);
  // 2-cycles of r pair with the (x,y),(y,x) blocks of P, x < y
  std::size_t j = 0;
  const Rational half(1, 2);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y, ++j) {
      std::size_t u = cell_index(pr.cycles[j].first, n), v = cell_index(pr.cycles[j].second, n);
      std::size_t p = cell_index({x, y}, n), q = cell_index({y, x}, n);
      outer({{u, 1}, {v, 1}}, {{p, 1}, {q, 1}}, half);
      outer({{u, 1}, {v, -1}}, {{p, 1}, {q, -1}}, half);
    }
  Twist t{F, pr};
  CheckResult ok = verify_twist(F, linearize(s));
  if (!ok) throw InternalInconsistency("build_twist: " + ok.witnesses.front());
  return t;
}

CheckResult verify_twist(const QMatrix& F, const QMatrix& r) {
  CheckResult res("Drinfeld twist");
  const std::size_t n = r.legs().at(0);
  QMatrix P = swap_matrix(n);
  QMatrix Finv;
  try {
    Finv = invert(F);
  } catch (const SingularMatrix&) {
    res.fail("F is singular");
    return res;
  }
  expect_equal(res, F * P * Finv, r, "r = F P F^-1:");
  expect_equal(res, (P * F * P) * Finv, P * r, "P r = F^op F^-1:");
  return res;
}

QMatrix lyubashenko_V(const SetSolution& s) {
  Map tau = lyubashenko_tau(s);
  const auto n = static_cast<std::size_t>(s.n);
  QMatrix V({n});
  for (std::size_t x = 0; x < n; ++x) V(x, static_cast<std::size_t>(tau[x])) = 1;
  return V;
}

CheckResult check_lyubashenko(const SetSolution& s) {
  CheckResult res("Lyubashenko form");
  QMatrix V = lyubashenko_V(s), Vi = invert(V);
  const auto n = static_cast<std::size_t>(s.n);
  QMatrix I = QMatrix::identity({n});
  QMatrix r = linearize(s);
  expect_equal(res, kron(V, I) * swap_matrix(n) * kron(Vi, I), r, "r = (V x I) P (V^-1 x I):");
  expect_equal(res, swap_matrix(n) * r, kron(Vi, V), "P r = V^-1 x V:");
  return res;
}

QMatrix standard_coproduct(std::size_t n, int x, int y, std::size_t N) {
  QMatrix e = unit(n, static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  QMatrix d(uniform_legs(n, N));
  for (std::size_t p = 0; p < N; ++p) d += sited(n, N, p, e);
  return d;
}

QMatrix twisted_coproduct(const SetSolution& s, int x, int y, CoproductVariant v, std::size_t N) {
  const auto n = static_cast<std::size_t>(s.n);
  if (x < 0 || y < 0 || x >= s.n || y >= s.n) throw std::out_of_range("twisted_coproduct: generator index");
  if (N < 1) throw std::invalid_argument("twisted_coproduct: N >= 1 required");
  switch (v) {
    case CoproductVariant::standard:
      return standard_coproduct(n, x, y, N);
    case CoproductVariant::first:
    case CoproductVariant::second: {
      Map sig = lyubashenko_sigma(s), tau = lyubashenko_tau(s);
      QMatrix d(uniform_legs(n, N));
      for (std::size_t p = 0; p < N; ++p) {
        // site p (0-based) gets sigma^{N-1-p} or tau^{p}
        Map m = v == CoproductVariant::first ? map_power(sig, static_cast<int>(N - 1 - p))
                                             : map_power(tau, static_cast<int>(p));
        d += sited(n, N, p, unit(n, static_cast<std::size_t>(m[x]), static_cast<std::size_t>(m[y])));
      }
      return d;
    }
    case CoproductVariant::general: {
      if (N != 2) throw std::invalid_argument("general twisted coproduct is defined for two sites only");
      QMatrix F = build_twist(s).F;
      return F * standard_coproduct(n, x, y, 2) * invert(F);
    }
  }
  throw std::invalid_argument("unknown coproduct variant");
}

std::vector<QMatrix> coproduct_family(const SetSolution& s, CoproductVariant v, std::size_t N) {
  std::vector<QMatrix> out;
  if (v == CoproductVariant::general) {
    if (N != 2) throw std::invalid_argument("general twisted coproduct is defined for two sites only");
    QMatrix F = build_twist(s).F, Fi = invert(F);
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y)
        out.push_back(F * standard_coproduct(static_cast<std::size_t>(s.n), x, y, 2) * Fi);
    return out;
  }
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) out.push_back(twisted_coproduct(s, x, y, v, N));
  return out;
}

CheckResult check_gl_relations(const std::vector<QMatrix>& fam, std::size_t n) {
  CheckResult res("gl_n relations");
  if (fam.size() != n * n) throw std::invalid_argument("check_gl_relations: family must have n^2 members");
  auto D = [&](std::size_t a, std::size_t b) -> const QMatrix& { return fam[a * n + b]; };
  for (std::size_t x = 0; x < n && res.passed; ++x)
    for (std::size_t y = 0; y < n && res.passed; ++y)
      for (std::size_t z = 0; z < n && res.passed; ++z)
        for (std::size_t w = 0; w < n && res.passed; ++w) {
          QMatrix rhs(D(x, y).legs());
          if (y == z) rhs += D(x, w);
          if (x == w) rhs -= D(z, y);
          expect_equal(res, commutator(D(x, y), D(z, w)), rhs, cat("(x,y,z,w) = (", x, ",", y, ",", z, ",", w, ")"));
        }
  return res;
}

CheckResult check_gl_symmetry(const QMatrix& r, const std::vector<QMatrix>& fam) {
  CheckResult res("gl_n symmetry of r");
  const std::size_t n = r.legs().at(0);
  if (fam.size() != n * n) throw std::invalid_argument("check_gl_symmetry: family must cover all n^2 generators");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) expect_zero(res, commutator(r, fam[x * n + y]), cat("[r, D(e_", x, ",", y, ")]"));
  res.absorb(check_gl_relations(fam, n));
  return res;
}

QMatrix f_n_builder(const QMatrix& V, std::size_t N, int variant) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("f_n_builder: variant must be 1 or 2");
  std::vector<QMatrix> fs;
  for (std::size_t p = 0; p < N; ++p)
    fs.push_back(variant == 1 ? power(V, static_cast<int>(N - 1 - p)) : power(V, -static_cast<int>(p)));
  return kron_all(fs);
}

CheckResult check_f_n(const SetSolution& s, std::size_t N, int variant) {
  CheckResult res(cat("F_", variant, "^(", N, ") conjugation"));
  QMatrix F = f_n_builder(lyubashenko_V(s), N, variant), Fi = invert(F);
  auto v = variant == 1 ? CoproductVariant::first : CoproductVariant::second;
  const auto n = static_cast<std::size_t>(s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      expect_equal(res, F * standard_coproduct(n, x, y, N) * Fi, twisted_coproduct(s, x, y, v, N),
                   cat("e_", x, ",", y));
  return res;
}

CheckResult coassociativity_probe(const SetSolution& s, int variant) {
  CheckResult res(cat("co-associativity of Delta_", variant));
  Map m = variant == 1 ? lyubashenko_sigma(s) : lyubashenko_tau(s);
  const auto n = static_cast<std::size_t>(s.n);
  QMatrix I = QMatrix::identity({n});
  auto e = [&](const Map& f, int x, int y) {
    return unit(n, static_cast<std::size_t>(f[x]), static_cast<std::size_t>(f[y]));
  };
  Map id = identity_map(s.n), m2 = compose(m, m);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      QMatrix lhs(uniform_legs(n, 3)), rhs(uniform_legs(n, 3));
      if (variant == 1) {
        // D(e) = e_m (x) 1 + 1 (x) e
        lhs = kron_all<Rational>({e(m2, x, y), I, I}) + kron_all<Rational>({I, e(m, x, y), I}) +
              kron_all<Rational>({I, I, e(id, x, y)});
        rhs = kron_all<Rational>({e(m, x, y), I, I}) + kron_all<Rational>({I, e(m, x, y), I}) +
              kron_all<Rational>({I, I, e(id, x, y)});
      } else {
        // D(e) = e (x) 1 + 1 (x) e_m
        lhs = kron_all<Rational>({e(id, x, y), I, I}) + kron_all<Rational>({I, e(m, x, y), I}) +
              kron_all<Rational>({I, I, e(m, x, y)});
        rhs = kron_all<Rational>({e(id, x, y), I, I}) + kron_all<Rational>({I, e(m, x, y), I}) +
              kron_all<Rational>({I, I, e(m2, x, y)});
      }
      expect_equal(res, lhs, rhs, cat("e_", x, ",", y));
      if (!res.passed) return res;
    }
  return res;
}

}  // namespace ybx
