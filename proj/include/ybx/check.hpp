#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybx/matrix.hpp"

namespace ybx {

/// Outcome of an identity check. Failures carry witnesses.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void fail(std::string witness) {
    passed = false;
    witnesses.push_back(std::move(witness));
  }
  // Merge a sub-check; its witnesses are prefixed with its name.
  void absorb(const CheckResult& sub) {
    if (sub.passed) return;
    passed = false;
    for (const auto& w : sub.witnesses) witnesses.push_back(sub.name + ": " + w);
  }
  explicit operator bool() const { return passed; }
};

/// Report status. "finding" marks an empirically resolved ambiguity, never a bug.
enum class Status { pass, fail, not_applicable, finding };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    case Status::finding: return "finding";
  }
  return "?";
}

struct Outcome {
  std::string name;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  std::string note;
};

inline Outcome outcome(const CheckResult& r, Status on_fail = Status::fail, std::string note = "") {
  return {r.name, r.passed ? Status::pass : on_fail, r.witnesses, std::move(note)};
}

/// A violated precondition or axiom, with the property name and a witness.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string property, std::string witness)
      : std::runtime_error(property + " violated at " + witness),
        property_(std::move(property)),
        witness_(std::move(witness)) {}
  const std::string& property() const { return property_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string property_;
  std::string witness_;
};

/// Two independent computations that must agree did not.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

// Multi-index of a basis position (element indices 0..n-1).
inline std::string multi_index(std::size_t idx, const Legs& legs) {
  std::vector<std::size_t> d(legs.size());
  for (std::size_t k = legs.size(); k-- > 0;) {
    d[k] = idx % legs[k];
    idx /= legs[k];
  }
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

/// Check a == b; on failure record the first differing entry.
template <class T>
void expect_equal(CheckResult& res, const Matrix<T>& a, const Matrix<T>& b,
                  const std::string& what = "") {
  auto d = first_difference(a, b);
  if (!d) return;
  if (a.dim() != b.dim()) {
    res.fail(what + " shape mismatch");
    return;
  }
  res.fail(cat(what, what.empty() ? "" : " ", "entry row ", multi_index(d->row, a.legs()),
               " col ", multi_index(d->col, a.legs()), ": lhs ", entry_string(a(d->row, d->col)),
               " vs rhs ", entry_string(b(d->row, d->col))));
}

template <class T>
void expect_zero(CheckResult& res, const Matrix<T>& a, const std::string& what = "") {
  auto d = first_nonzero(a);
  if (!d) return;
  res.fail(cat(what, what.empty() ? "" : " ", "nonzero at row ", multi_index(d->row, a.legs()),
               " col ", multi_index(d->col, a.legs()), ": ", entry_string(a(d->row, d->col))));
}

}  // namespace ybx
