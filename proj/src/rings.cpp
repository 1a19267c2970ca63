#include "ybx/rings.hpp"

#include <sstream>
#include <stdexcept>

namespace ybx {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

namespace {

void append_term(std::ostringstream& os, const Rational& c, const std::string& mono) {
  bool first = os.tellp() == 0;
  Rational a = abs(c);
  if (!first) os << (sgn(c) < 0 ? " - " : " + ");
  else if (sgn(c) < 0) os << "-";
  if (mono.empty()) os << a.get_str();
  else if (a != 1) os << a.get_str() << "*" << mono;
  else os << mono;
}

std::string power_name(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(const Rational& c) {
  if (!ybx::is_zero(c)) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::monomial(const Rational& c, int power) {
  UniPoly p;
  if (ybx::is_zero(c)) return p;
  p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void UniPoly::normalize() {
  while (!c_.empty() && ybx::is_zero(c_.back())) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::eval(const Rational& v) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  UniPoly lin(std::vector<Rational>{b, a});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (ybx::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (ybx::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r.c_[i + j] += t;
    }
  }
  r.normalize();
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!ybx::is_zero(c_[k])) append_term(os, c_[k], power_name(var, static_cast<int>(k)));
  return os.str();
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Rational& c) {
  if (!ybx::is_zero(c)) {
    n1_ = n2_ = 1;
    c_.push_back(c);
  }
}

BiPoly BiPoly::monomial(const Rational& c, int p1, int p2) {
  BiPoly r;
  if (ybx::is_zero(c)) return r;
  r.resize(static_cast<std::size_t>(p1) + 1, static_cast<std::size_t>(p2) + 1);
  r.at(static_cast<std::size_t>(p1), static_cast<std::size_t>(p2)) = c;
  return r;
}

BiPoly BiPoly::from_affine(const UniPoly& p, const Rational& a, const Rational& b,
                           const Rational& c) {
  BiPoly lin = monomial(a, 1, 0) + monomial(b, 0, 1) + BiPoly(c);
  BiPoly acc;
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * lin + BiPoly(*it);
  return acc;
}

void BiPoly::resize(std::size_t n1, std::size_t n2) {
  if (n1 == n1_ && n2 == n2_) return;
  std::vector<Rational> next(n1 * n2, Rational(0));
  for (std::size_t i = 0; i < std::min(n1, n1_); ++i)
    for (std::size_t j = 0; j < std::min(n2, n2_); ++j) next[i * n2 + j] = at(i, j);
  c_ = std::move(next);
  n1_ = n1;
  n2_ = n2;
}

void BiPoly::normalize() {
  std::size_t m1 = 0, m2 = 0;
  for (std::size_t i = 0; i < n1_; ++i)
    for (std::size_t j = 0; j < n2_; ++j)
      if (!ybx::is_zero(at(i, j))) {
        m1 = std::max(m1, i + 1);
        m2 = std::max(m2, j + 1);
      }
  if (m1 == 0) {
    c_.clear();
    n1_ = n2_ = 0;
    return;
  }
  resize(m1, m2);
}

Rational BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(n1_) || j >= static_cast<int>(n2_)) return 0;
  return at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.is_zero()) return *this;
  resize(std::max(n1_, o.n1_), std::max(n2_, o.n2_));
  for (std::size_t i = 0; i < o.n1_; ++i)
    for (std::size_t j = 0; j < o.n2_; ++j) at(i, j) += o.at(i, j);
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.is_zero()) return *this;
  resize(std::max(n1_, o.n1_), std::max(n2_, o.n2_));
  for (std::size_t i = 0; i < o.n1_; ++i)
    for (std::size_t j = 0; j < o.n2_; ++j) at(i, j) -= o.at(i, j);
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (ybx::is_zero(s)) {
    *this = BiPoly();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.resize(a.n1_ + b.n1_ - 1, a.n2_ + b.n2_ - 1);
  Rational t;
  for (std::size_t i = 0; i < a.n1_; ++i)
    for (std::size_t j = 0; j < a.n2_; ++j) {
      const Rational& x = a.at(i, j);
      if (ybx::is_zero(x)) continue;
      for (std::size_t k = 0; k < b.n1_; ++k)
        for (std::size_t l = 0; l < b.n2_; ++l) {
          const Rational& y = b.at(k, l);
          if (ybx::is_zero(y)) continue;
          mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
          r.at(i + k, j + l) += t;
        }
    }
  r.normalize();
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.c_ == b.c_;
}

std::string BiPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < n1_; ++i)
    for (std::size_t j = 0; j < n2_; ++j) {
      if (ybx::is_zero(at(i, j))) continue;
      std::string m = power_name("l1", static_cast<int>(i));
      std::string m2 = power_name("l2", static_cast<int>(j));
      if (!m.empty() && !m2.empty()) m += "*";
      append_term(os, at(i, j), m + m2);
    }
  return os.str();
}

// ---------------------------------------------------------------- LaurentS

LaurentS::LaurentS(const Rational& c) {
  if (!ybx::is_zero(c)) c_.emplace(0, c);
}

LaurentS LaurentS::s_pow(int k, const Rational& c) {
  LaurentS r;
  r.add_term(k, c);
  return r;
}

void LaurentS::add_term(int k, const Rational& v) {
  if (ybx::is_zero(v)) return;
  auto [it, inserted] = c_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (ybx::is_zero(it->second)) c_.erase(it);
  }
}

Rational LaurentS::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational LaurentS::eval(const Rational& v) const {
  if (ybx::is_zero(v)) throw std::domain_error("LaurentS::eval at s = 0");
  Rational acc = 0;
  for (const auto& [k, c] : c_) {
    Rational p = 1;
    Rational base = k >= 0 ? v : Rational(1 / v);
    for (int i = 0; i < std::abs(k); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

LaurentS& LaurentS::operator+=(const LaurentS& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

LaurentS& LaurentS::operator-=(const LaurentS& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

LaurentS LaurentS::operator-() const {
  LaurentS r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

LaurentS operator*(const LaurentS& a, const LaurentS& b) {
  LaurentS r;
  for (const auto& [i, x] : a.c_)
    for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
  return r;
}

std::string LaurentS::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (const auto& [k, c] : c_) append_term(os, c, power_name("s", k));
  return os.str();
}

}  // namespace ybx
