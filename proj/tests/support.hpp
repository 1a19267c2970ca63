#pragma once

#include <random>
#include <string>
#include <vector>

#include "ybx/fixtures.hpp"
#include "ybx/matrix.hpp"

namespace ybx::testing {

inline std::vector<fixtures::Named> all_fixtures() { return fixtures::standard(4); }

// Deterministic pseudo-random sparse rational matrix.
inline QMatrix random_matrix(const Legs& legs, unsigned seed, int density = 3) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> pick(0, density), num(-5, 5), den(1, 4);
  QMatrix m(legs);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (pick(gen) == 0) m(i, j) = ratio(num(gen), den(gen));
  return m;
}

inline PolyMatrix random_poly_matrix(const Legs& legs, unsigned seed, int max_degree = 3) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> deg(0, max_degree), num(-3, 3), den(1, 3), pick(0, 2);
  PolyMatrix m(legs);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (pick(gen) != 0) continue;
      std::vector<Rational> c;
      for (int k = 0, d = deg(gen); k <= d; ++k) c.push_back(ratio(num(gen), den(gen)));
      m(i, j) = UniPoly(std::move(c));
    }
  return m;
}

}  // namespace ybx::testing
