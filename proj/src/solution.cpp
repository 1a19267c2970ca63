#include "ybx/solution.hpp"

#include <algorithm>
#include <numeric>

namespace ybx {

namespace {

std::string xy(int x, int y) { return cat("(x,y) = (", x, ",", y, ")"); }

bool is_perm(const std::vector<int>& row, int n) {
  std::vector<bool> seen(n, false);
  for (int v : row) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return static_cast<int>(row.size()) == n;
}

using Pair = std::pair<int, int>;

}  // namespace

void validate_solution(const SetSolution& s) {
  const int n = s.n;
  if (n < 1) throw ValidationError("cardinality", cat("n = ", n));
  if (static_cast<int>(s.sigma.size()) != n || static_cast<int>(s.tau.size()) != n)
    throw ValidationError("table shape", cat("expected ", n, " rows"));
  for (int x = 0; x < n; ++x) {
    if (!is_perm(s.sigma[x], n)) throw ValidationError("non-degeneracy (sigma_x bijective)", cat("x = ", x));
    if (!is_perm(s.tau[x], n)) throw ValidationError("non-degeneracy (tau_y bijective)", cat("y = ", x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = s.apply(x, y);
      if (s.apply(a, b) != Pair{x, y}) throw ValidationError("involutivity", xy(x, y));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id), rightmost first
        auto [a1, b1] = s.apply(x, y);
        auto [b2, c2] = s.apply(b1, z);
        auto [a3, b3] = s.apply(a1, b2);
        // (id x r)(r x id)(id x r)
        auto [q1, r1] = s.apply(y, z);
        auto [p2, q2] = s.apply(x, q1);
        auto [q3, r3] = s.apply(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3)
          throw ValidationError("braid relation", cat("(x,y,z) = (", x, ",", y, ",", z, ")"));
      }
}

SetSolution swap_solution(const SetSolution& s) { return SetSolution{s.n, s.tau, s.sigma}; }

SetSolution restrict_solution(const SetSolution& s, const std::vector<int>& subset) {
  std::vector<int> sub = subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  std::vector<int> pos(s.n, -1);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i] < 0 || sub[i] >= s.n) throw std::out_of_range("restrict_solution: element out of range");
    pos[sub[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(sub.size());
  SetSolution r{m, Table(m, std::vector<int>(m)), Table(m, std::vector<int>(m))};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [a, b] = s.apply(sub[i], sub[j]);
      if (pos[a] < 0 || pos[b] < 0) throw ValidationError("r-closure of subset", xy(sub[i], sub[j]));
      r.sigma[i][j] = pos[a];
      r.tau[j][i] = pos[b];
    }
  return r;
}

bool is_involutive_map(const Map& k) {
  for (std::size_t x = 0; x < k.size(); ++x)
    if (k[k[x]] != static_cast<int>(x)) return false;
  return true;
}

bool is_bijective_map(const Map& k) { return is_perm(k, static_cast<int>(k.size())); }

namespace {

void check_map(const SetSolution& s, const Map& k) {
  if (static_cast<int>(k.size()) != s.n) throw std::invalid_argument("map size does not match solution");
  for (int v : k)
    if (v < 0 || v >= s.n) throw std::out_of_range("map value out of range");
}

template <class Kx>
CheckResult reflection_equation(const SetSolution& s, Kx kk, const char* name) {
  CheckResult res(name);
  auto r = [&](Pair p) { return s.apply(p.first, p.second); };
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      Pair p{x, y};
      Pair lhs = r(kk(r(kk(p))));
      Pair rhs = kk(r(kk(r(p))));
      if (lhs != rhs) {
        res.fail(cat(xy(x, y), ": lhs (", lhs.first, ",", lhs.second, ") rhs (", rhs.first, ",",
                     rhs.second, ")"));
        return res;
      }
    }
  return res;
}

}  // namespace

CheckResult reflection_criterion(const SetSolution& s, const Map& k) {
  check_map(s, k);
  CheckResult res("reflection criterion");
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int lhs = s.tau[s.tau[y][x]][k[s.sigma[x][y]]];
      int rhs = s.tau[s.tau[y][k[x]]][k[s.sigma[k[x]][y]]];
      if (lhs != rhs) {
        res.fail(cat(xy(x, y), ": ", lhs, " != ", rhs));
        return res;
      }
    }
  return res;
}

CheckResult check_set_reflection(const SetSolution& s, const Map& k) {
  check_map(s, k);
  CheckResult res = reflection_equation(
      s, [&](Pair p) { return Pair{k[p.first], p.second}; }, "set reflection equation");
  if (is_involutive_map(k)) {
    CheckResult crit = reflection_criterion(s, k);
    if (crit.passed != res.passed)
      throw InternalInconsistency("closed-form reflection criterion disagrees with brute force");
  }
  return res;
}

CheckResult check_set_reflection_second_slot(const SetSolution& s, const Map& k) {
  check_map(s, k);
  return reflection_equation(
      s, [&](Pair p) { return Pair{p.first, k[p.second]}; }, "set reflection equation (second slot)");
}

CheckResult is_tau_equivariant(const SetSolution& s, const Map& k) {
  check_map(s, k);
  CheckResult res("tau-equivariance");
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (s.tau[x][k[y]] != k[s.tau[x][y]]) {
        res.fail(cat(xy(x, y), ": tau_x(k(y)) = ", s.tau[x][k[y]], ", k(tau_x(y)) = ", k[s.tau[x][y]]));
        return res;
      }
  return res;
}

std::vector<std::vector<int>> orbits(const SetSolution& s) {
  std::vector<int> parent(s.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      unite(y, s.sigma[x][y]);
      unite(y, s.tau[x][y]);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(s.n, -1);
  for (int z = 0; z < s.n; ++z) {
    int root = find(z);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(z);
  }
  return out;
}

CheckResult is_sigma_equivariant_set(const SetSolution& s, const std::vector<int>& subset) {
  CheckResult res("sigma-equivariant set");
  std::vector<bool> in(s.n, false);
  for (int v : subset) {
    if (v < 0 || v >= s.n) throw std::out_of_range("subset element out of range");
    in[v] = true;
  }
  for (int x : subset)
    for (int y : subset) {
      auto [a, b] = s.apply(x, y);
      if (!in[a] || !in[b]) {
        res.fail(cat(xy(x, y), " maps to (", a, ",", b, ")"));
        return res;
      }
    }
  return res;
}

SpecialElements special_elements(const SetSolution& s) {
  SpecialElements out;
  for (int x = 0; x < s.n; ++x) {
    bool flip = true;
    for (int y = 0; y < s.n && flip; ++y) flip = s.sigma[x][y] == y && s.tau[y][x] == x;
    if (flip) out.flip_like.push_back(x);
    if (s.sigma[x][x] == x && s.tau[x][x] == x) out.diagonal_fixed.push_back(x);
  }
  return out;
}

CheckResult check_morphism(const SetSolution& s, const Map& f) {
  check_map(s, f);
  CheckResult res("solution automorphism");
  if (!is_bijective_map(f)) {
    res.fail("map is not bijective");
    return res;
  }
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      if (f[s.sigma[x][y]] != s.sigma[f[x]][f[y]]) {
        res.fail(cat(xy(x, y), ": f(sigma_x(y)) != sigma_f(x)(f(y))"));
        return res;
      }
      if (f[s.tau[x][y]] != s.tau[f[x]][f[y]]) {
        res.fail(cat(xy(x, y), ": f(tau_x(y)) != tau_f(x)(f(y))"));
        return res;
      }
    }
  return res;
}

std::vector<Map> automorphisms(const SetSolution& s) {
  if (s.n > 6) throw std::invalid_argument("automorphisms: exhaustive search limited to n <= 6");
  std::vector<Map> out;
  Map f = identity_map(s.n);
  do {
    if (check_morphism(s, f)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

std::vector<Map> find_reflections(const SetSolution& s) {
  if (s.n > 4) throw std::invalid_argument("find_reflections: exhaustive search limited to n <= 4");
  std::vector<Map> out;
  Map k(s.n, 0);
  while (true) {
    if (check_set_reflection(s, k)) out.push_back(k);
    int i = s.n - 1;
    while (i >= 0 && k[i] == s.n - 1) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

Map tau_map(const SetSolution& s, int c) { return s.tau.at(c); }

std::vector<int> tau_central_elements(const SetSolution& s) {
  std::vector<int> out;
  for (int c = 0; c < s.n; ++c) {
    bool central = true;
    for (int x = 0; x < s.n && central; ++x)
      for (int y = 0; y < s.n && central; ++y) central = s.tau[c][s.tau[x][y]] == s.tau[x][s.tau[c][y]];
    if (central) out.push_back(c);
  }
  return out;
}

bool is_lyubashenko(const SetSolution& s) {
  for (int x = 1; x < s.n; ++x)
    if (s.sigma[x] != s.sigma[0] || s.tau[x] != s.tau[0]) return false;
  for (int x = 0; x < s.n; ++x)
    if (s.sigma[0][s.tau[0][x]] != x) return false;
  return true;
}

Map lyubashenko_sigma(const SetSolution& s) {
  if (!is_lyubashenko(s)) throw ValidationError("Lyubashenko type", "sigma_x or tau_y depends on subscript");
  return s.sigma[0];
}

Map lyubashenko_tau(const SetSolution& s) {
  if (!is_lyubashenko(s)) throw ValidationError("Lyubashenko type", "sigma_x or tau_y depends on subscript");
  return s.tau[0];
}

SetSolution lyubashenko_solution(const Map& sigma) {
  if (!is_bijective_map(sigma)) throw std::invalid_argument("lyubashenko_solution: sigma not bijective");
  const int n = static_cast<int>(sigma.size());
  Map tau = inverse_map(sigma);
  return SetSolution{n, Table(n, sigma), Table(n, tau)};
}

Map identity_map(int n) {
  Map m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

Map compose(const Map& f, const Map& g) {
  Map r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

Map inverse_map(const Map& f) {
  Map r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

Map map_power(const Map& f, int k) {
  Map r = identity_map(static_cast<int>(f.size()));
  Map base = k >= 0 ? f : inverse_map(f);
  for (int i = 0; i < std::abs(k); ++i) r = compose(base, r);
  return r;
}

}  // namespace ybx
