#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ybx/brace.hpp"
#include "ybx/solution.hpp"
#include "ybx/twist.hpp"

namespace ybx::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ybx/1";

/// Malformed or mis-versioned input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json rational_to_json(const Rational& r);  // "p/q", or "p" when q = 1
Rational rational_from_json(const json& j);  // string or integer

json ring_to_json(const NilpotentRingSpec& r);
json brace_to_json(const FiniteBrace& b);
/// Accepts {order, add, mul} (ring, validated and converted) or {order, add, circle}.
FiniteBrace brace_from_json(const json& j);

json solution_to_json(const SetSolution& s);
/// Validated on load.
SetSolution solution_from_json(const json& j);

json reflection_to_json(const Map& k);
Map reflection_from_json(const json& j);

/// Boundary file: {b: [[...]], Q, c} or {k: [...], c}.
struct BoundarySpec {
  QMatrix b;
  Rational Q{1};
  Rational c{1};
  std::optional<Map> k;
};
json boundary_to_json(const BoundarySpec& b);
/// A k-form boundary is turned into b through the set reflection check against s.
BoundarySpec boundary_from_json(const json& j, const SetSolution& s);

/// {legs, entries: [[row, col, value], ...]}, zero entries omitted.
json matrix_to_coo(const QMatrix& m);
QMatrix matrix_from_coo(const json& j);
json matrix_to_coo(const PolyMatrix& m);  // values are coefficient arrays
PolyMatrix poly_matrix_from_coo(const json& j);

/// First line "ybx/1,rational|poly,<legs...>", then one line per row.
/// Polynomial cells are space-separated coefficients, lowest degree first.
std::string matrix_to_csv(const QMatrix& m);
std::string matrix_to_csv(const PolyMatrix& m);
QMatrix matrix_from_csv(const std::string& text);
PolyMatrix poly_matrix_from_csv(const std::string& text);

json twist_to_json(const Twist& t);
Twist twist_from_json(const json& j);

json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace ybx::io
