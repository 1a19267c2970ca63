#include "ybx/brace.hpp"

#include <set>

#include "ybx/solution.hpp"

namespace ybx {

namespace {

std::string triple(int a, int b, int c) { return cat("(a,b,c) = (", a, ",", b, ",", c, ")"); }
std::string pair(int a, int b) { return cat("(a,b) = (", a, ",", b, ")"); }

void check_table(const Table& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw ValidationError(cat(name, " table shape"), cat("rows = ", t.size(), ", order = ", n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n)
      throw ValidationError(cat(name, " table shape"), cat("row ", i, " has ", t[i].size(), " entries"));
    for (int j = 0; j < n; ++j)
      if (t[i][j] < 0 || t[i][j] >= n)
        throw ValidationError(cat(name, " closure"), cat(pair(i, j), " -> ", t[i][j]));
  }
}

// (A, op) is a group with identity 0; abelian when requested.
void check_group(const Table& op, int n, const std::string& name, bool abelian) {
  for (int a = 0; a < n; ++a)
    if (op[0][a] != a || op[a][0] != a) throw ValidationError(name + " identity 0", cat("a = ", a));
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = op[a][b] == 0 && op[b][a] == 0;
    if (!found) throw ValidationError(name + " inverse", cat("a = ", a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (abelian && op[a][b] != op[b][a]) throw ValidationError(name + " commutativity", pair(a, b));
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]])
          throw ValidationError(name + " associativity", triple(a, b, c));
    }
}

}  // namespace

int validate_nilpotent_ring(const NilpotentRingSpec& spec) {
  const int n = spec.order;
  if (n < 1) throw ValidationError("order", cat("n = ", n));
  check_table(spec.add, n, "addition");
  check_table(spec.mul, n, "multiplication");
  check_group(spec.add, n, "addition", true);
  const Table& add = spec.add;
  const Table& mul = spec.mul;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw ValidationError("multiplication associativity", triple(a, b, c));
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          throw ValidationError("left distributivity", triple(a, b, c));
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
          throw ValidationError("right distributivity", triple(a, b, c));
      }
  // products of m factors: S_1 = A, S_{m+1} = S_m . A
  std::set<int> prods;
  for (int a = 0; a < n; ++a) prods.insert(a);
  for (int m = 1; m <= n + 1; ++m) {
    if (prods == std::set<int>{0}) return m;
    std::set<int> next;
    for (int p : prods)
      for (int a = 0; a < n; ++a) next.insert(mul[p][a]);
    prods = std::move(next);
  }
  throw ValidationError("nilpotency", cat("nonzero products of ", n + 1, " factors exist"));
}

FiniteBrace brace_from_ring(const NilpotentRingSpec& spec) {
  validate_nilpotent_ring(spec);
  const int n = spec.order;
  FiniteBrace b{n, spec.add, Table(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) b.circle[x][y] = spec.add[spec.add[spec.mul[x][y]][x]][y];
  validate_brace(b);
  return b;
}

void validate_brace(const FiniteBrace& b) {
  const int n = b.order;
  if (n < 1) throw ValidationError("order", cat("n = ", n));
  check_table(b.add, n, "addition");
  check_table(b.circle, n, "circle");
  check_group(b.add, n, "addition", true);
  check_group(b.circle, n, "circle", false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (b.add[b.circle[x][b.add[y][z]]][x] != b.add[b.circle[x][y]][b.circle[x][z]])
          throw ValidationError("brace compatibility a o (b + c) + a = a o b + a o c",
                                triple(x, y, z));
}

int circle_inverse(const FiniteBrace& b, int a) {
  for (int x = 0; x < b.order; ++x)
    if (b.circle[a][x] == 0 && b.circle[x][a] == 0) return x;
  throw ValidationError("circle inverse", cat("a = ", a));
}

int additive_inverse(const FiniteBrace& b, int a) {
  for (int x = 0; x < b.order; ++x)
    if (b.add[a][x] == 0) return x;
  throw ValidationError("additive inverse", cat("a = ", a));
}

SetSolution solution_from_brace(const FiniteBrace& b) {
  const int n = b.order;
  SetSolution s{n, Table(n, std::vector<int>(n)), Table(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int sig = b.add[b.circle[x][y]][additive_inverse(b, x)];
      int t = circle_inverse(b, sig);
      s.sigma[x][y] = sig;
      s.tau[y][x] = b.add[b.circle[t][x]][additive_inverse(b, t)];
    }
  validate_solution(s);
  return s;
}

NilpotentRingSpec zpk_ring(int p, int k) {
  if (p < 2 || k < 1) throw std::invalid_argument("zpk_ring: need p >= 2, k >= 1");
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  if (n > 64) throw std::invalid_argument("zpk_ring: order above 64");
  NilpotentRingSpec r{n, Table(n, std::vector<int>(n)), Table(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (p * a * b) % n;
    }
  return r;
}

NilpotentRingSpec zero_ring(int n) {
  if (n < 1) throw std::invalid_argument("zero_ring: need n >= 1");
  NilpotentRingSpec r{n, Table(n, std::vector<int>(n)), Table(n, std::vector<int>(n, 0))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.add[a][b] = (a + b) % n;
  return r;
}

Table ring_product_from_brace(const FiniteBrace& b) {
  Table m(b.order, std::vector<int>(b.order));
  for (int x = 0; x < b.order; ++x)
    for (int y = 0; y < b.order; ++y)
      m[x][y] = b.add[b.add[b.circle[x][y]][additive_inverse(b, x)]][additive_inverse(b, y)];
  return m;
}

}  // namespace ybx
