#include "ybx/fixtures.hpp"

namespace ybx::fixtures {

SetSolution trivial(int n) { return solution_from_brace(brace_from_ring(zero_ring(n))); }

SetSolution shift(int n) {
  Map sigma(n);
  for (int y = 0; y < n; ++y) sigma[y] = (y + 1) % n;
  return lyubashenko_solution(sigma);
}

SetSolution reversal(int n) {
  Map sigma(n);
  for (int y = 0; y < n; ++y) sigma[y] = n - 1 - y;
  return lyubashenko_solution(sigma);
}

SetSolution zp2(int p) { return solution_from_brace(brace_from_ring(zpk_ring(p, 2))); }

SetSolution z4_nilpotent() { return zp2(2); }

std::vector<Named> standard(int max_n) {
  std::vector<Named> out;
  for (int n = 2; n <= max_n; ++n) out.push_back({"trivial-" + std::to_string(n), trivial(n)});
  for (int n = 2; n <= max_n; ++n) out.push_back({"shift-" + std::to_string(n), shift(n)});
  for (int n = 2; n <= max_n; ++n) out.push_back({"reversal-" + std::to_string(n), reversal(n)});
  if (max_n >= 4) out.push_back({"z4-nilpotent", z4_nilpotent()});
  return out;
}

}  // namespace ybx::fixtures
