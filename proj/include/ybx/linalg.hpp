#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ybx/matrix.hpp"

namespace ybx {

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact inverse; throws SingularMatrix.
QMatrix invert(const QMatrix& a);
std::size_t rank(const QMatrix& a);
Rational determinant(const QMatrix& a);

/// Incremental row-echelon basis of a subspace of Q^dim. Each stored row remembers
/// which combination of inserted vectors produced it, so membership comes with
/// coefficients.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  // Returns true when v was independent of the current span.
  bool insert(const std::vector<Rational>& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }
  // Coefficients over inserted vectors (by insertion index) expressing v, or nullopt.
  std::optional<std::map<std::size_t, Rational>> express(const std::vector<Rational>& v) const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> v;
    std::map<std::size_t, Rational> combo;
  };
  void reduce(std::vector<Rational>& v, std::map<std::size_t, Rational>& combo) const;
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

std::vector<Rational> flatten(const QMatrix& a);

}  // namespace ybx
