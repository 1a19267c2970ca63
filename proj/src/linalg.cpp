#include "ybx/linalg.hpp"

#include <algorithm>

namespace ybx {

QMatrix invert(const QMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) throw SingularMatrix("invert: matrix is singular");
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& x : m[col])
      if (!is_zero(x)) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j < 2 * n; ++j)
        if (!is_zero(m[col][j])) m[r][j] -= f * m[col][j];
    }
  }
  QMatrix r(a.legs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m[i][n + j];
  return r;
}

namespace {

// Forward elimination; returns rank, accumulates the determinant sign/product.
std::size_t eliminate(std::vector<std::vector<Rational>>& m, Rational* det) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> rows_of(const QMatrix& a) {
  std::vector<std::vector<Rational>> m(a.dim(), std::vector<Rational>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m[i][j] = a(i, j);
  return m;
}

}  // namespace

std::size_t rank(const QMatrix& a) {
  auto m = rows_of(a);
  return eliminate(m, nullptr);
}

Rational determinant(const QMatrix& a) {
  auto m = rows_of(a);
  Rational d;
  std::size_t r = eliminate(m, &d);
  return r == a.dim() ? d : Rational(0);
}

std::vector<Rational> flatten(const QMatrix& a) { return a.entries(); }

void SpanBasis::reduce(std::vector<Rational>& v, std::map<std::size_t, Rational>& combo) const {
  for (const auto& row : rows_) {
    if (is_zero(v[row.pivot])) continue;
    Rational f = v[row.pivot];  // rows are normalized to pivot 1
    for (std::size_t j = row.pivot; j < dim_; ++j)
      if (!is_zero(row.v[j])) v[j] -= f * row.v[j];
    for (const auto& [k, c] : row.combo) {
      Rational& t = combo[k];
      t -= f * c;
      if (is_zero(t)) combo.erase(k);
    }
  }
}

bool SpanBasis::insert(const std::vector<Rational>& v0) {
  if (v0.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  std::vector<Rational> v = v0;
  std::map<std::size_t, Rational> combo{{count_, Rational(1)}};
  ++count_;
  reduce(v, combo);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  Rational inv = 1 / v[piv];
  for (auto& x : v)
    if (!is_zero(x)) x *= inv;
  for (auto& kv : combo) kv.second *= inv;
  // keep rows fully reduced so that reduce() can run in one pass in insertion order
  for (auto& row : rows_) {
    if (is_zero(row.v[piv])) continue;
    Rational f = row.v[piv];
    for (std::size_t j = piv; j < dim_; ++j)
      if (!is_zero(v[j])) row.v[j] -= f * v[j];
    for (const auto& [k, c] : combo) {
      Rational& t = row.combo[k];
      t -= f * c;
      if (is_zero(t)) row.combo.erase(k);
    }
  }
  rows_.push_back(Row{piv, std::move(v), std::move(combo)});
  return true;
}

std::optional<std::map<std::size_t, Rational>> SpanBasis::express(
    const std::vector<Rational>& v0) const {
  if (v0.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  std::vector<Rational> v = v0;
  std::map<std::size_t, Rational> combo;
  reduce(v, combo);
  for (const auto& x : v)
    if (!is_zero(x)) return std::nullopt;
  // combo holds -(coefficients); flip sign
  for (auto& kv : combo) kv.second = -kv.second;
  return combo;
}

}  // namespace ybx
