#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ybx/rings.hpp"

namespace ybx {

using Legs = std::vector<std::size_t>;

inline std::size_t leg_product(const Legs& legs) {
  std::size_t d = 1;
  for (auto l : legs) d *= l;
  return d;
}

// acc += a * b, avoiding temporaries for the rational case.
template <class T>
inline void mul_add(T& acc, const T& a, const T& b) {
  acc += a * b;
}
inline void mul_add(Rational& acc, const Rational& a, const Rational& b) {
  thread_local Rational t;
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  acc += t;
}

/// Square matrix over a ring, with tensor-leg shape.
/// Basis is row-major over leg indices, leg 0 most significant.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(Legs legs) : legs_(std::move(legs)) {
    if (legs_.empty()) throw std::invalid_argument("Matrix: legs must be nonempty");
    dim_ = leg_product(legs_);
    e_.assign(dim_ * dim_, T{});
  }

  static Matrix identity(Legs legs) {
    Matrix m(std::move(legs));
    for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  const Legs& legs() const { return legs_; }
  std::size_t leg_count() const { return legs_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!ybx::is_zero(x)) return false;
    return true;
  }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& x : e_) n += ybx::is_zero(x) ? 0 : 1;
    return n;
  }

  // Same entries, new leg decomposition of the same total dimension.
  Matrix reshaped(Legs legs) const {
    if (leg_product(legs) != dim_) throw std::invalid_argument("reshape: dimension mismatch");
    Matrix r = *this;
    r.legs_ = std::move(legs);
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o, "+");
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!ybx::is_zero(o.e_[i])) e_[i] += o.e_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o, "-");
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!ybx::is_zero(o.e_[i])) e_[i] -= o.e_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : e_)
      if (!ybx::is_zero(x)) x = x * s;
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_)
      if (!ybx::is_zero(x)) x = -x;
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_shape(b, "*");
    const std::size_t n = a.dim_;
    // column lists of nonzeros per row of b
    std::vector<std::vector<std::size_t>> bcols(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!ybx::is_zero(b(k, j))) bcols[k].push_back(j);
    Matrix r(a.legs_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& x = a(i, k);
        if (ybx::is_zero(x)) continue;
        for (std::size_t j : bcols[k]) mul_add(r(i, j), x, b(k, j));
      }
    return r;
  }

  const std::vector<T>& entries() const { return e_; }

 private:
  void check_shape(const Matrix& o, const char* op) const {
    if (o.dim_ != dim_)
      throw std::invalid_argument(std::string("Matrix ") + op + ": shape mismatch");
  }
  Legs legs_;
  std::size_t dim_ = 0;
  std::vector<T> e_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<UniPoly>;
using BiMatrix = Matrix<BiPoly>;
using LMatrix = Matrix<LaurentS>;

// Elementary matrix e_{r,c} on a single leg of dimension n.
template <class T = Rational>
Matrix<T> unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix<T> m({n});
  m(r, c) = T(1);
  return m;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Legs legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  Matrix<T> r(legs);
  const std::size_t nb = b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const T& x = a(i, j);
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const T& y = b(k, l);
          if (!is_zero(y)) r(i * nb + k, j * nb + l) = x * y;
        }
    }
  return r;
}

template <class T>
Matrix<T> kron_all(const std::vector<Matrix<T>>& fs) {
  if (fs.empty()) throw std::invalid_argument("kron_all: empty factor list");
  Matrix<T> r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = kron(r, fs[i]);
  return r;
}

template <class T>
Matrix<T> kron_power(const Matrix<T>& a, std::size_t n) {
  return kron_all(std::vector<Matrix<T>>(n, a));
}

/// Place a (with k legs) on legs targets[0..k-1] of a space with leg dimensions total,
/// identity elsewhere. The i-th leg of a goes to targets[i].
template <class T>
Matrix<T> embed(const Matrix<T>& a, const std::vector<std::size_t>& targets, const Legs& total) {
  const std::size_t n = total.size();
  if (targets.size() != a.leg_count())
    throw std::invalid_argument("embed: target count does not match legs of operand");
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::size_t t = targets[i];
    if (t >= n) throw std::out_of_range("embed: leg index out of range");
    if (used[t]) throw std::invalid_argument("embed: repeated target leg");
    if (total[t] != a.legs()[i]) throw std::invalid_argument("embed: leg dimension mismatch");
    used[t] = true;
  }
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * total[k];

  // offset contributed by each local index of a
  const std::size_t da = a.dim();
  std::vector<std::size_t> off(da, 0);
  for (std::size_t idx = 0; idx < da; ++idx) {
    std::size_t rem = idx, o = 0;
    for (std::size_t i = targets.size(); i-- > 0;) {
      std::size_t d = a.legs()[i];
      o += (rem % d) * stride[targets[i]];
      rem /= d;
    }
    off[idx] = o;
  }
  // base offsets over the untouched legs
  std::vector<std::size_t> base{0};
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k]) continue;
    std::vector<std::size_t> next;
    next.reserve(base.size() * total[k]);
    for (auto b : base)
      for (std::size_t v = 0; v < total[k]; ++v) next.push_back(b + v * stride[k]);
    base = std::move(next);
  }
  Matrix<T> r(total);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const T& x = a(i, j);
      if (is_zero(x)) continue;
      for (auto b : base) r(b + off[i], b + off[j]) = x;
    }
  return r;
}

inline Legs uniform_legs(std::size_t n, std::size_t count) { return Legs(count, n); }

/// Two-leg operator a acting with its first factor on leg i and second on leg j.
template <class T>
Matrix<T> embed_pair(const Matrix<T>& a, std::size_t i, std::size_t j, std::size_t total) {
  if (a.leg_count() != 2) throw std::invalid_argument("embed_pair: operand must have two legs");
  if (a.legs()[0] != a.legs()[1]) throw std::invalid_argument("embed_pair: unequal leg dims");
  if (i == j) throw std::invalid_argument("embed_pair: i == j");
  if (i >= total || j >= total) throw std::out_of_range("embed_pair: leg index out of range");
  return embed(a, {i, j}, uniform_legs(a.legs()[0], total));
}

template <class T>
Matrix<T> embed_one(const Matrix<T>& a, std::size_t i, std::size_t total) {
  if (a.leg_count() != 1) throw std::invalid_argument("embed_one: operand must have one leg");
  if (i >= total) throw std::out_of_range("embed_one: leg index out of range");
  return embed(a, {i}, uniform_legs(a.legs()[0], total));
}

template <class T>
Matrix<T> partial_trace(const Matrix<T>& a, std::size_t leg) {
  if (leg >= a.leg_count()) throw std::out_of_range("partial_trace: leg index out of range");
  if (a.leg_count() == 1) throw std::invalid_argument("partial_trace: cannot trace the only leg");
  Legs rest = a.legs();
  const std::size_t d = rest[leg];
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(leg));
  std::size_t lo = 1;
  for (std::size_t k = leg + 1; k < a.leg_count(); ++k) lo *= a.legs()[k];
  Matrix<T> r(rest);
  auto full = [&](std::size_t idx, std::size_t v) { return (idx / lo) * d * lo + v * lo + idx % lo; };
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      T acc{};
      for (std::size_t v = 0; v < d; ++v) {
        const T& x = a(full(i, v), full(j, v));
        if (!is_zero(x)) acc += x;
      }
      r(i, j) = acc;
    }
  return r;
}

template <class T>
Matrix<T> partial_transpose(const Matrix<T>& a, std::size_t leg) {
  if (leg >= a.leg_count()) throw std::out_of_range("partial_transpose: leg index out of range");
  std::size_t lo = 1;
  for (std::size_t k = leg + 1; k < a.leg_count(); ++k) lo *= a.legs()[k];
  const std::size_t d = a.legs()[leg];
  Matrix<T> r(a.legs());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const T& x = a(i, j);
      if (is_zero(x)) continue;
      std::size_t vi = (i / lo) % d, vj = (j / lo) % d;
      std::size_t ni = i + (vj - vi) * lo, nj = j + (vi - vj) * lo;  // unsigned wrap cancels
      r(ni, nj) = x;
    }
  return r;
}

/// Block (x, y) of leg 0: the operator on the remaining legs.
template <class T>
Matrix<T> aux_block(const Matrix<T>& a, std::size_t x, std::size_t y) {
  if (a.leg_count() < 2) throw std::invalid_argument("aux_block: need at least two legs");
  Legs rest(a.legs().begin() + 1, a.legs().end());
  Matrix<T> r(rest);
  const std::size_t d = r.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r(i, j) = a(x * d + i, y * d + j);
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.legs());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(a(i, j))) r(j, i) = a(i, j);
  return r;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: shape mismatch");
  return a * b - b * a;
}

template <class T>
T trace(const Matrix<T>& a) {
  T acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a(i, i);
  return acc;
}

/// Permutation operator on two legs of dimension n.
template <class T = Rational>
Matrix<T> swap_matrix(std::size_t n) {
  Matrix<T> p({n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) p(x * n + y, y * n + x) = T(1);
  return p;
}

template <class U, class T, class F>
Matrix<U> map_entries(const Matrix<T>& a, F f) {
  Matrix<U> r(a.legs());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(a(i, j))) r(i, j) = f(a(i, j));
  return r;
}

template <class U, class T>
Matrix<U> lift(const Matrix<T>& a) {
  return map_entries<U>(a, [](const T& x) { return U(x); });
}

struct Entry {
  std::size_t row = 0, col = 0;
};

template <class T>
std::optional<Entry> first_difference(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) return Entry{};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a(i, j) == b(i, j))) return Entry{i, j};
  return std::nullopt;
}

template <class T>
std::optional<Entry> first_nonzero(const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(a(i, j))) return Entry{i, j};
  return std::nullopt;
}

// ------------------------------------------------------------ polynomial matrices

/// Coefficient of x^k in every entry.
QMatrix coeff_matrix(const PolyMatrix& p, int k);
int degree(const PolyMatrix& p);
/// sum_k c[k] x^k
PolyMatrix from_coeffs(const std::vector<QMatrix>& c);
/// entries p(a*x + b)
PolyMatrix substitute(const PolyMatrix& p, const Rational& a, const Rational& b);
/// entries p(a*x1 + b*x2 + c)
BiMatrix substitute2(const PolyMatrix& p, const Rational& a, const Rational& b, const Rational& c);
QMatrix evaluate(const PolyMatrix& p, const Rational& v);
/// entries at s = 1
QMatrix at_s_one(const LMatrix& m);

std::string entry_string(const Rational& x);
std::string entry_string(const UniPoly& x);
std::string entry_string(const BiPoly& x);
std::string entry_string(const LaurentS& x);

}  // namespace ybx
