#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct RunConfig {
  std::vector<std::string> fixtures;  // fixture names; empty: all standard fixtures with n <= max_n
  std::vector<std::string> checks;    // registry names; empty: nothing runs
  int max_n = 4;
  std::size_t sites = 2;
  std::size_t max_dim = 256;  // cap on n^(sites+1) for chain checks
  int jobs = 1;               // accepted for interface stability; checks run in order
};

/// One executed check on one fixture.
struct Record {
  std::string check;
  std::string fixture;
  std::string name;
  std::string anchor;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  std::string note;
  double seconds = 0;
};

struct Report {
  std::vector<Record> records;
  bool any_fail() const;
  int exit_code() const { return any_fail() ? 1 : 0; }
};

/// Registered check names, in execution order.
std::vector<std::string> check_registry();
/// Short description of what a registered check verifies.
std::string check_anchor(const std::string& check);

/// Named fixture: trivial-<n>, shift-<n>, reversal-<n>, zp2-<p>, z4-nilpotent.
SetSolution fixture_by_name(const std::string& name);
std::vector<std::string> default_fixtures(int max_n);

/// Throws std::invalid_argument for unknown checks or fixtures and out-of-range caps.
void validate_config(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// Deterministic: fixtures in the given order, checks in registry order.
Report run_suite(const RunConfig& cfg);

/// With timing = false the output is byte-identical across runs.
nlohmann::json report_to_json(const Report& r, bool timing = true);

/// Writes solution.json (and brace.json for ring-based fixtures) into dir; returns the paths.
/// Names: trivial, lyubashenko-shift, lyubashenko-reversal (param n), zp2 (param p), z4-nilpotent.
std::vector<std::string> generate_fixture(const std::string& name, int param, const std::string& dir);

enum class ExportFormat { coo_json, dense_csv };
ExportFormat parse_export_format(const std::string& s);
/// Objects: "P" (swap on n), "r" and "F" (of s), "transfer" (t(l) of s with K = I on N sites).
void export_matrix(const std::string& object, const std::optional<SetSolution>& s, std::size_t n,
                   std::size_t sites, const std::string& path, ExportFormat fmt);

}  // namespace ybx
