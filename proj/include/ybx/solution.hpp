#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybx/brace.hpp"

namespace ybx {

/// r(x,y) = (sigma_x(y), tau_y(x)); sigma[x][y] = sigma_x(y), tau[y][x] = tau_y(x).
struct SetSolution {
  int n = 0;
  Table sigma;
  Table tau;

  std::pair<int, int> apply(int x, int y) const { return {sigma[x][y], tau[y][x]}; }
  friend bool operator==(const SetSolution&, const SetSolution&) = default;
};

using Map = std::vector<int>;

/// Non-degeneracy, involutivity and the braid relation by exhaustion.
/// Throws ValidationError.
void validate_solution(const SetSolution& s);

/// r'(x,y) = (tau_x(y), sigma_y(x))
SetSolution swap_solution(const SetSolution& s);

/// Restriction to a subset closed under r. Throws ValidationError if not closed.
/// The result is relabelled 0..|subset|-1 in ascending order.
SetSolution restrict_solution(const SetSolution& s, const std::vector<int>& subset);

bool is_involutive_map(const Map& k);
bool is_bijective_map(const Map& k);

/// r (k x id) r (k x id) = (k x id) r (k x id) r over all pairs. For involutive k the
/// closed-form criterion is evaluated too and must agree (InternalInconsistency otherwise).
CheckResult check_set_reflection(const SetSolution& s, const Map& k);
/// Same equation with k acting on the second slot: r (id x k) r (id x k) = (id x k) r (id x k) r.
CheckResult check_set_reflection_second_slot(const SetSolution& s, const Map& k);
/// tau_{tau_y(x)}(k(sigma_x(y))) = tau_{tau_y(k(x))}(k(sigma_{k(x)}(y))) for all x, y.
CheckResult reflection_criterion(const SetSolution& s, const Map& k);

CheckResult is_tau_equivariant(const SetSolution& s, const Map& k);

std::vector<std::vector<int>> orbits(const SetSolution& s);
CheckResult is_sigma_equivariant_set(const SetSolution& s, const std::vector<int>& subset);

struct SpecialElements {
  std::vector<int> flip_like;
  std::vector<int> diagonal_fixed;
};
SpecialElements special_elements(const SetSolution& s);

CheckResult check_morphism(const SetSolution& s, const Map& f);
/// All automorphisms of s (exhaustive over permutations; n <= 6).
std::vector<Map> automorphisms(const SetSolution& s);

/// All maps k : X -> X passing the set reflection equation (n <= 4).
std::vector<Map> find_reflections(const SetSolution& s);

/// Elements c with tau_c commuting with every tau_x; the maps k = tau_c.
std::vector<int> tau_central_elements(const SetSolution& s);
Map tau_map(const SetSolution& s, int c);

/// Lyubashenko type: sigma_x, tau_y independent of the subscript with sigma o tau = id.
bool is_lyubashenko(const SetSolution& s);
/// The single maps sigma(y), tau(x) of a Lyubashenko solution.
Map lyubashenko_sigma(const SetSolution& s);
Map lyubashenko_tau(const SetSolution& s);
SetSolution lyubashenko_solution(const Map& sigma);

Map identity_map(int n);
Map compose(const Map& f, const Map& g);  // f o g
Map inverse_map(const Map& f);
Map map_power(const Map& f, int k);

}  // namespace ybx
