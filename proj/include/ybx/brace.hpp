#pragma once

#include <vector>

#include "ybx/check.hpp"

namespace ybx {

using Table = std::vector<std::vector<int>>;

struct NilpotentRingSpec {
  int order = 0;
  Table add;
  Table mul;
};

struct FiniteBrace {
  int order = 0;
  Table add;
  Table circle;
};

struct SetSolution;

/// Verifies the ring axioms by exhaustion and returns the least m such that every
/// product of m factors vanishes. Throws ValidationError.
int validate_nilpotent_ring(const NilpotentRingSpec& spec);

/// a o b = a.b + a + b
FiniteBrace brace_from_ring(const NilpotentRingSpec& spec);

/// Throws ValidationError naming the axiom and a witness.
void validate_brace(const FiniteBrace& b);

int circle_inverse(const FiniteBrace& b, int a);
int additive_inverse(const FiniteBrace& b, int a);

/// sigma_x(y) = x o y - x, tau_y(x) = t o x - t with t the circle inverse of sigma_x(y).
SetSolution solution_from_brace(const FiniteBrace& b);

/// Z/p^k with a.b = p*a*b.
NilpotentRingSpec zpk_ring(int p, int k);
/// Z/n with a.b = 0.
NilpotentRingSpec zero_ring(int n);

/// Recover a.b = a o b - a - b.
Table ring_product_from_brace(const FiniteBrace& b);

}  // namespace ybx
