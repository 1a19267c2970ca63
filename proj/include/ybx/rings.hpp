#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ybx {

using Rational = mpq_class;

// Canonical "p/q" text, q omitted when 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// a / b in lowest terms.
inline Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Polynomial in one variable, coefficients lowest degree first.
/// The zero polynomial has no stored coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT: implicit by design
  UniPoly(const Rational& c);               // NOLINT
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(const Rational& c, int power);
  static UniPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval(const Rational& v) const;
  // p(a*x + b)
  UniPoly compose_affine(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  UniPoly operator-() const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "l") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Polynomial in two variables, dense over the minimal bounding box.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT
  BiPoly(const Rational& c);              // NOLINT

  static BiPoly monomial(const Rational& c, int p1, int p2);
  // p(a*x1 + b*x2 + c)
  static BiPoly from_affine(const UniPoly& p, const Rational& a, const Rational& b,
                            const Rational& c);

  bool is_zero() const { return c_.empty(); }
  int deg1() const { return static_cast<int>(n1_) - 1; }
  int deg2() const { return static_cast<int>(n2_) - 1; }
  Rational coeff(int i, int j) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  std::string str() const;

 private:
  Rational& at(std::size_t i, std::size_t j) { return c_[i * n2_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return c_[i * n2_ + j]; }
  void resize(std::size_t n1, std::size_t n2);
  void normalize();
  std::size_t n1_ = 0, n2_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

/// Laurent polynomial in s, with s^2 = q.
class LaurentS {
 public:
  LaurentS() = default;
  LaurentS(int c) : LaurentS(Rational(c)) {}  // NOLINT
  LaurentS(const Rational& c);                // NOLINT

  static LaurentS s_pow(int k, const Rational& c = 1);
  static LaurentS q_pow(int k, const Rational& c = 1) { return s_pow(2 * k, c); }

  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::map<int, Rational>& terms() const { return c_; }
  // value at s = v (v nonzero)
  Rational eval(const Rational& v) const;

  LaurentS& operator+=(const LaurentS& o);
  LaurentS& operator-=(const LaurentS& o);
  LaurentS operator-() const;

  friend LaurentS operator+(LaurentS a, const LaurentS& b) { return a += b; }
  friend LaurentS operator-(LaurentS a, const LaurentS& b) { return a -= b; }
  friend LaurentS operator*(const LaurentS& a, const LaurentS& b);
  friend bool operator==(const LaurentS& a, const LaurentS& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void add_term(int k, const Rational& v);
  std::map<int, Rational> c_;
};

inline bool is_zero(const LaurentS& p) { return p.is_zero(); }

}  // namespace ybx
