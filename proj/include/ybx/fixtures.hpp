#pragma once

#include <string>
#include <vector>

#include "ybx/solution.hpp"

namespace ybx::fixtures {

/// Flip solution from the zero ring on Z/n.
SetSolution trivial(int n);
/// sigma(y) = y + 1, tau(x) = x - 1 (mod n).
SetSolution shift(int n);
/// sigma(y) = tau(y) = n - 1 - y.
SetSolution reversal(int n);
/// Brace of Z/p^2 with a.b = p a b.
SetSolution zp2(int p);
/// Z/4 with a.b = 2ab.
SetSolution z4_nilpotent();

struct Named {
  std::string name;
  SetSolution s;
};
/// Every fixture with n <= max_n, in a fixed order.
std::vector<Named> standard(int max_n = 4);

}  // namespace ybx::fixtures
