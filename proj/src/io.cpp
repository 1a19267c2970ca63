#include "ybx/io.hpp"

#include <fstream>
#include <sstream>

#include "ybx/boundary.hpp"

namespace ybx::io {

namespace {

void check_schema(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema)
    throw FormatError("unsupported schema " + j.at("schema").dump());
}

template <class F>
auto field(const json& j, const char* key, F&& get) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return get(j.at(key));
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

Table table_from(const json& j, int order, const char* key) {
  Table t = field(j, key, [](const json& v) { return v.get<Table>(); });
  if (static_cast<int>(t.size()) != order) throw FormatError(cat("table '", key, "' has ", t.size(), " rows"));
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != order) throw FormatError(cat("table '", key, "' is not square"));
    for (int v : row)
      if (v < 0 || v >= order) throw FormatError(cat("table '", key, "' entry ", v, " out of range"));
  }
  return t;
}

Legs legs_from(const json& j) {
  Legs legs = field(j, "legs", [](const json& v) { return v.get<Legs>(); });
  if (legs.empty()) throw FormatError("legs must be nonempty");
  for (auto l : legs)
    if (l == 0) throw FormatError("leg dimension 0");
  return legs;
}

std::size_t index_from(const json& v, std::size_t dim) {
  auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= dim) throw FormatError(cat("index ", i, " out of range"));
  return static_cast<std::size_t>(i);
}

json poly_to_json(const UniPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_json(c));
  return a;
}

UniPoly poly_from_json(const json& j) {
  if (!j.is_array()) return UniPoly(rational_from_json(j));
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return UniPoly(std::move(c));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

struct CsvBody {
  std::string kind;
  Legs legs;
  std::vector<std::vector<std::string>> cells;
};

CsvBody parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty CSV");
  auto head = split(line, ',');
  if (head.size() < 3 || head[0] != kSchema) throw FormatError("CSV header must start with ybx/1,<kind>,<legs>");
  CsvBody b;
  b.kind = head[1];
  for (std::size_t i = 2; i < head.size(); ++i) b.legs.push_back(std::stoul(head[i]));
  const std::size_t d = leg_product(b.legs);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto row = split(line, ',');
    if (row.size() != d) throw FormatError(cat("CSV row with ", row.size(), " cells, expected ", d));
    b.cells.push_back(std::move(row));
  }
  if (b.cells.size() != d) throw FormatError(cat("CSV has ", b.cells.size(), " rows, expected ", d));
  return b;
}

template <class T, class F>
std::string to_csv(const Matrix<T>& m, const char* kind, F cell) {
  std::ostringstream os;
  os << kSchema << ',' << kind;
  for (auto l : m.legs()) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? "," : "") << cell(m(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string or an integer, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json ring_to_json(const NilpotentRingSpec& r) {
  return {{"schema", kSchema}, {"order", r.order}, {"add", r.add}, {"mul", r.mul}};
}

json brace_to_json(const FiniteBrace& b) {
  return {{"schema", kSchema}, {"order", b.order}, {"add", b.add}, {"circle", b.circle}};
}

FiniteBrace brace_from_json(const json& j) {
  check_schema(j);
  int order = field(j, "order", [](const json& v) { return v.get<int>(); });
  if (order < 1) throw FormatError("order must be positive");
  Table add = table_from(j, order, "add");
  if (j.contains("mul")) {
    NilpotentRingSpec r{order, add, table_from(j, order, "mul")};
    validate_nilpotent_ring(r);
    return brace_from_ring(r);
  }
  FiniteBrace b{order, add, table_from(j, order, "circle")};
  validate_brace(b);
  return b;
}

json solution_to_json(const SetSolution& s) {
  return {{"schema", kSchema}, {"n", s.n}, {"sigma", s.sigma}, {"tau", s.tau}};
}

SetSolution solution_from_json(const json& j) {
  check_schema(j);
  SetSolution s;
  s.n = field(j, "n", [](const json& v) { return v.get<int>(); });
  if (s.n < 1) throw FormatError("n must be positive");
  s.sigma = table_from(j, s.n, "sigma");
  s.tau = table_from(j, s.n, "tau");
  validate_solution(s);
  return s;
}

json reflection_to_json(const Map& k) { return {{"schema", kSchema}, {"k", k}}; }

Map reflection_from_json(const json& j) {
  check_schema(j);
  return field(j, "k", [](const json& v) { return v.get<Map>(); });
}

json boundary_to_json(const BoundarySpec& b) {
  json j{{"schema", kSchema}, {"c", rational_to_json(b.c)}};
  if (b.k) {
    j["k"] = *b.k;
    return j;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < b.b.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < b.b.dim(); ++k) row.push_back(rational_to_json(b.b(i, k)));
    rows.push_back(row);
  }
  j["b"] = rows;
  j["Q"] = rational_to_json(b.Q);
  return j;
}

BoundarySpec boundary_from_json(const json& j, const SetSolution& s) {
  check_schema(j);
  BoundarySpec out;
  if (j.contains("c")) out.c = rational_from_json(j.at("c"));
  if (j.contains("k")) {
    out.k = reflection_from_json(j);
    if (static_cast<int>(out.k->size()) != s.n) throw FormatError("k has the wrong length");
    out.b = b_from_reflection(s, *out.k).b;
    return out;
  }
  const auto n = static_cast<std::size_t>(s.n);
  const json& rows = field(j, "b", [](const json& v) -> const json& { return v; });
  if (!rows.is_array() || rows.size() != n) throw FormatError(cat("b must have ", n, " rows"));
  out.b = QMatrix({n});
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw FormatError(cat("b row ", i, " must have ", n, " entries"));
    for (std::size_t k = 0; k < n; ++k) out.b(i, k) = rational_from_json(rows[i][k]);
  }
  if (j.contains("Q")) out.Q = rational_from_json(j.at("Q"));
  return out;
}

json matrix_to_coo(const QMatrix& m) {
  json e = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.dim(); ++k)
      if (!is_zero(m(i, k))) e.push_back({i, k, rational_to_json(m(i, k))});
  return {{"schema", kSchema}, {"legs", m.legs()}, {"entries", e}};
}

json matrix_to_coo(const PolyMatrix& m) {
  json e = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.dim(); ++k)
      if (!is_zero(m(i, k))) e.push_back({i, k, poly_to_json(m(i, k))});
  return {{"schema", kSchema}, {"legs", m.legs()}, {"entries", e}};
}

QMatrix matrix_from_coo(const json& j) {
  check_schema(j);
  QMatrix m(legs_from(j));
  for (const auto& e : field(j, "entries", [](const json& v) -> const json& { return v; })) {
    if (!e.is_array() || e.size() != 3) throw FormatError("COO entry must be [row, col, value]");
    m(index_from(e[0], m.dim()), index_from(e[1], m.dim())) = rational_from_json(e[2]);
  }
  return m;
}

PolyMatrix poly_matrix_from_coo(const json& j) {
  check_schema(j);
  PolyMatrix m(legs_from(j));
  for (const auto& e : field(j, "entries", [](const json& v) -> const json& { return v; })) {
    if (!e.is_array() || e.size() != 3) throw FormatError("COO entry must be [row, col, value]");
    m(index_from(e[0], m.dim()), index_from(e[1], m.dim())) = poly_from_json(e[2]);
  }
  return m;
}

std::string matrix_to_csv(const QMatrix& m) {
  return to_csv(m, "rational", [](const Rational& v) { return to_string(v); });
}

std::string matrix_to_csv(const PolyMatrix& m) {
  return to_csv(m, "poly", [](const UniPoly& p) {
    std::string s;
    for (const auto& c : p.coeffs()) s += (s.empty() ? "" : " ") + to_string(c);
    return s;
  });
}

QMatrix matrix_from_csv(const std::string& text) {
  CsvBody b = parse_csv(text);
  if (b.kind != "rational") throw FormatError("expected a rational CSV, got " + b.kind);
  QMatrix m(b.legs);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.dim(); ++k) m(i, k) = rational_from_json(b.cells[i][k]);
  return m;
}

PolyMatrix poly_matrix_from_csv(const std::string& text) {
  CsvBody b = parse_csv(text);
  if (b.kind != "poly") throw FormatError("expected a polynomial CSV, got " + b.kind);
  PolyMatrix m(b.legs);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.dim(); ++k) {
      std::vector<Rational> c;
      std::istringstream is(b.cells[i][k]);
      std::string tok;
      while (is >> tok) c.push_back(rational_from_json(tok));
      m(i, k) = UniPoly(std::move(c));
    }
  return m;
}

json twist_to_json(const Twist& t) {
  json fixed = json::array(), cycles = json::array();
  for (const auto& [x, y] : t.pairing.fixed) fixed.push_back({x, y});
  for (const auto& [a, b] : t.pairing.cycles) cycles.push_back({{a.first, a.second}, {b.first, b.second}});
  return {{"schema", kSchema}, {"F", matrix_to_coo(t.F)}, {"pairing", {{"fixed", fixed}, {"cycles", cycles}}}};
}

Twist twist_from_json(const json& j) {
  check_schema(j);
  Twist t;
  t.F = matrix_from_coo(field(j, "F", [](const json& v) -> const json& { return v; }));
  const json& p = field(j, "pairing", [](const json& v) -> const json& { return v; });
  try {
    for (const auto& c : p.at("fixed")) t.pairing.fixed.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    for (const auto& c : p.at("cycles"))
      t.pairing.cycles.emplace_back(Cell{c.at(0).at(0).get<int>(), c.at(0).at(1).get<int>()},
                                    Cell{c.at(1).at(0).get<int>(), c.at(1).at(1).get<int>()});
  } catch (const json::exception& e) {
    throw FormatError(std::string("pairing: ") + e.what());
  }
  return t;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ybx::io
