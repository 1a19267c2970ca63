#include "ybx/suite.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>

#include "ybx/boundary.hpp"
#include "ybx/chain.hpp"
#include "ybx/fixtures.hpp"
#include "ybx/io.hpp"
#include "ybx/linearization.hpp"
#include "ybx/qdeform.hpp"
#include "ybx/twist.hpp"

namespace ybx {

namespace {

struct Ctx {
  std::string name;
  SetSolution s;
  std::optional<NilpotentRingSpec> ring;
  const RunConfig& cfg;
};

using CheckFn = std::function<std::vector<Outcome>(const Ctx&)>;

struct Entry {
  std::string name;
  std::string anchor;
  bool per_fixture;
  CheckFn run;
};

Outcome na(std::string name, std::string why) { return {std::move(name), Status::not_applicable, {}, std::move(why)}; }

// Runs f, turning a thrown ValidationError into a failed outcome with its witness.
Outcome guarded(const std::string& name, const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    return {name, Status::fail, {e.what()}, ""};
  }
}

std::optional<NilpotentRingSpec> ring_of(const std::string& name) {
  if (name.rfind("trivial-", 0) == 0) return zero_ring(std::stoi(name.substr(8)));
  if (name.rfind("zp2-", 0) == 0) return zpk_ring(std::stoi(name.substr(4)), 2);
  if (name == "z4-nilpotent") return zpk_ring(2, 2);
  return std::nullopt;
}

bool matrix_sized(const Ctx& c) { return c.s.n <= std::min(c.cfg.max_n, 4); }

bool chain_sized(const Ctx& c, std::size_t N) {
  std::size_t d = 1;
  for (std::size_t i = 0; i <= N; ++i) d *= static_cast<std::size_t>(c.s.n);
  return matrix_sized(c) && d <= c.cfg.max_dim;
}

// Non-identity involutive reflections of s, lexicographic.
std::vector<Map> nontrivial_reflections(const SetSolution& s) {
  std::vector<Map> out;
  for (const auto& k : find_reflections(s))
    if (is_involutive_map(k) && k != identity_map(s.n)) out.push_back(k);
  return out;
}

std::string map_string(const Map& k) {
  std::string s = "k = (";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

std::vector<Outcome> run_brace(const Ctx& c) {
  std::vector<Outcome> out;
  if (c.ring) {
    out.push_back(guarded("brace axioms", [&] {
      FiniteBrace b = brace_from_ring(*c.ring);
      validate_brace(b);
      CheckResult res("brace axioms");
      if (!(solution_from_brace(b) == c.s)) res.fail("solution from the brace differs from the fixture");
      return outcome(res);
    }));
  } else {
    out.push_back(na("brace axioms", "fixture is not built from a ring"));
  }
  out.push_back(guarded("set solution axioms", [&] {
    validate_solution(c.s);
    return Outcome{"set solution axioms", Status::pass, {}, ""};
  }));
  return out;
}

std::vector<Outcome> run_matrix(const Ctx& c) {
  if (!matrix_sized(c)) return {na("matrix identities", "n above the matrix cap")};
  QMatrix r = linearize(c.s);
  Baxterized B = baxterize(r);
  return {outcome(check_ybe_spectral(B.check_R)), outcome(check_unitarity(B.R)),
          outcome(check_crossing(B.R, c.s.n)),    outcome(check_hecke_a(r)),
          outcome(trace_identity(r)),             outcome(check_eigen_multiplicities(r))};
}

std::vector<Outcome> run_twist(const Ctx& c) {
  if (!matrix_sized(c)) return {na("Drinfeld twist", "n above the matrix cap")};
  QMatrix r = linearize(c.s);
  Twist t = build_twist(c.s);
  return {outcome(verify_twist(t.F, r)),
          outcome(check_gl_symmetry(r, coproduct_family(c.s, CoproductVariant::general, 2)))};
}

std::vector<Outcome> run_lyubashenko(const Ctx& c) {
  if (!is_lyubashenko(c.s)) return {na("Lyubashenko structure", "solution is not of Lyubashenko type")};
  if (!matrix_sized(c)) return {na("Lyubashenko structure", "n above the matrix cap")};
  QMatrix r = linearize(c.s);
  std::vector<Outcome> out{outcome(check_lyubashenko(c.s))};
  for (auto v : {CoproductVariant::first, CoproductVariant::second}) {
    CheckResult res(cat("twisted coproduct symmetry, variant ", v == CoproductVariant::first ? 1 : 2));
    for (std::size_t N : {2, 3}) {
      auto fam = coproduct_family(c.s, v, N);
      if (N == 2) res.absorb(check_gl_symmetry(r, fam));
      res.absorb(check_gl_relations(fam, static_cast<std::size_t>(c.s.n)));
    }
    out.push_back(outcome(res));
  }
  for (int v : {1, 2})
    for (std::size_t N : {2, 3}) out.push_back(outcome(check_f_n(c.s, N, v)));
  for (int v : {1, 2}) {
    Outcome o = outcome(coassociativity_probe(c.s, v), Status::finding);
    o.note = o.status == Status::pass ? "co-associative" : "not co-associative";
    if (o.status == Status::pass) o.status = Status::finding;
    out.push_back(o);
  }
  return out;
}

std::vector<Outcome> run_boundary(const Ctx& c) {
  if (!matrix_sized(c)) return {na("boundary elements", "n above the matrix cap")};
  QMatrix r = linearize(c.s);
  const auto n = static_cast<std::size_t>(c.s.n);
  std::vector<Outcome> out;
  for (auto v : {HatVariant::reflection, HatVariant::twisted}) out.push_back(outcome(check_rstar_consistency(r, v)));
  std::vector<Map> ks{identity_map(c.s.n)};
  for (auto& k : nontrivial_reflections(c.s)) ks.push_back(k);
  for (const auto& k : ks) {
    std::string label = map_string(k);
    out.push_back(guarded("boundary " + label, [&] {
      BoundaryB B = b_from_reflection(c.s, k);
      CheckResult res("boundary " + label);
      res.absorb(check_btype(r, B));
      res.absorb(check_baxterization(r, B, 1));
      return outcome(res);
    }));
  }
  // the closed-form criterion against brute force, every map
  if (n <= 3) {
    CheckResult res("reflection criterion agrees with brute force");
    Map k(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        bool brute = check_set_reflection(c.s, k).passed;
        bool crit = reflection_criterion(c.s, k).passed;
        if (brute != crit) res.fail(map_string(k));
        return;
      }
      for (int v = 0; v < c.s.n; ++v) {
        k[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    out.push_back(outcome(res));
  }
  return out;
}

// K = I plus the first nontrivial found boundary with c = 1
std::vector<std::pair<std::string, QMatrix>> chain_boundaries(const Ctx& c) {
  const auto n = static_cast<std::size_t>(c.s.n);
  std::vector<std::pair<std::string, QMatrix>> out{{"b = I", QMatrix::identity({n})}};
  auto ks = nontrivial_reflections(c.s);
  if (!ks.empty()) out.emplace_back("b from " + map_string(ks.front()), b_from_reflection(c.s, ks.front()).b);
  return out;
}

std::vector<Outcome> run_commute(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("open chain commutativity", "chain above the size cap")};
  QMatrix r = linearize(c.s);
  std::vector<Outcome> out;
  out.push_back(outcome(check_RTT(r, std::min<std::size_t>(N, 2))));
  out.push_back(outcome(check_That_inverse(r, N)));
  for (const auto& [label, b] : chain_boundaries(c)) {
    OpenMonodromy T = build_open(r, c_form_K(b, 1), N, HatVariant::reflection);
    TransferExpansion e = build_transfer(T);
    CheckResult res("transfer commutativity, " + label);
    res.absorb(check_reconstruction(e));
    res.absorb(check_commutativity(e));
    out.push_back(outcome(res));
    CheckResult q = check_open_quadratic(r, T, N == 1);
    q.name += ", " + label;
    out.push_back(outcome(q));
  }
  return out;
}

std::vector<Outcome> run_hamiltonian(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("local Hamiltonian", "chain above the size cap")};
  QMatrix r = linearize(c.s);
  std::vector<Outcome> out;
  for (const auto& [label, b] : chain_boundaries(c)) {
    TransferExpansion e = build_transfer(build_open(r, c_form_K(b, 1), N, HatVariant::reflection));
    HamiltonianReport h = hamiltonian_check(e, r, b, N);
    Outcome lit = outcome(h.literal, Status::fail, label);
    Outcome cor = outcome(h.corrected, Status::fail, label);
    out.push_back(lit);
    out.push_back(cor);
  }
  return out;
}

std::vector<Outcome> run_hecke_span(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("Hecke word span", "chain above the size cap")};
  QMatrix r = linearize(c.s);
  std::vector<Outcome> out;
  for (const auto& [label, b] : chain_boundaries(c)) {
    TransferExpansion e = build_transfer(build_open(r, c_form_K(b, 1), N, HatVariant::reflection));
    SpanReport sp = hecke_expressibility(e, r, b, N);
    out.push_back(outcome(sp.result, Status::fail, cat(label, "; ", sp.words, " words, rank ", sp.rank)));
  }
  return out;
}

std::vector<Outcome> run_subalgebra(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("boundary subalgebra", "chain above the size cap")};
  std::vector<Outcome> out;
  for (const auto& [label, b] : chain_boundaries(c)) {
    SubalgebraReport rep = boundary_subalgebra_checks(c.s, make_boundary(b, 1), ratio(1, 2), N);
    for (auto& o : rep.items) {
      o.name += ", " + label;
      out.push_back(o);
    }
  }
  return out;
}

std::vector<Outcome> run_symmetries(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("symmetries", "chain above the size cap")};
  const auto n = static_cast<std::size_t>(c.s.n);
  return symmetry_suite(c.s, QMatrix::identity({n}), 1, N);
}

std::vector<Outcome> run_cotw(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("T^(1) closed form", "chain above the size cap")};
  CotwReport rep = compute_T1_two_ways(linearize(c.s), N, 1);
  return {outcome(rep.literal, Status::fail, "residual is the identity when the corrected form holds"),
          outcome(rep.corrected)};
}

std::vector<Outcome> run_lemma_words(const Ctx& c) {
  std::size_t d = 1;
  for (int i = 0; i < 3; ++i) d *= static_cast<std::size_t>(c.s.n);
  if (!matrix_sized(c) || d > c.cfg.max_dim) return {na("lemma words", "chain above the size cap")};
  return {outcome(check_lemma1_relations(linearize(c.s), 3))};
}

std::vector<Outcome> run_twisted(const Ctx& c) {
  const std::size_t N = c.cfg.sites;
  if (!chain_sized(c, N)) return {na("twisted variant", "chain above the size cap")};
  QMatrix r = linearize(c.s);
  const auto n = static_cast<std::size_t>(c.s.n);
  OpenMonodromy T = build_open(r, PolyMatrix::identity({n}), N, HatVariant::twisted);
  TransferExpansion e = build_transfer(T);
  Outcome a = outcome(check_commutativity(e), Status::finding);
  Outcome q = outcome(check_exchange_relations(r, HatVariant::twisted, {QMatrix::identity({n})}), Status::finding);
  a.name = "twisted transfer commutativity, K = I";
  q.name = "twisted quadratic relation for K = I";
  return {a, q};
}

std::vector<Outcome> run_q_hecke(const Ctx&) {
  std::vector<Outcome> out;
  for (std::size_t n : {2, 3}) {
    LMatrix g = build_g(n);
    out.push_back(outcome(check_hecke_q(g)));
    CheckResult sym(cat("U_q(gl_", n, ") symmetry"));
    sym.absorb(check_uq_symmetry(g, uq_coproducts(n, 2, UqVariant::standard, identity_map(static_cast<int>(n)))));
    out.push_back(outcome(sym));
    out.push_back(outcome(check_serre_two_site(n)));
  }
  return out;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"brace", "brace axioms and the set braid relation", true, run_brace},
      {"matrix", "spectral Yang-Baxter, unitarity, crossing, Hecke and trace identities", true, run_matrix},
      {"twist", "Drinfeld twist and gl_n symmetry of the twisted coproducts", true, run_twist},
      {"lyubashenko", "Lyubashenko factorization, twisted coproducts and their N-site twists", true,
       run_lyubashenko},
      {"q-hecke", "q-deformed braid matrix: Hecke relation, braid relation, U_q(gl_n) symmetry", false,
       run_q_hecke},
      {"boundary", "B-type boundary elements and the spectral reflection equation", true, run_boundary},
      {"commute", "open transfer matrix commutativity and the quadratic algebra", true, run_commute},
      {"hamiltonian", "local Hamiltonian from the transfer matrix expansion", true, run_hamiltonian},
      {"hecke-span", "transfer coefficients in the span of Hecke words", true, run_hecke_span},
      {"subalgebra", "boundary subalgebra commutators and gl_n closure", true, run_subalgebra},
      {"symmetries", "symmetries of the open transfer matrix", true, run_symmetries},
      {"cotw", "closed form of the first open monodromy coefficient", true, run_cotw},
      {"lemma-words", "word relations with the A-type Hecke generators", true, run_lemma_words},
      {"twisted", "twisted quadratic algebra with K = I (measured)", true, run_twisted},
  };
  return r;
}

}  // namespace

bool Report::any_fail() const {
  return std::any_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::fail; });
}

std::vector<std::string> check_registry() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.name);
  return out;
}

std::string check_anchor(const std::string& check) {
  for (const auto& e : registry())
    if (e.name == check) return e.anchor;
  throw std::invalid_argument("unknown check '" + check + "'");
}

SetSolution fixture_by_name(const std::string& name) {
  auto param = [&](std::size_t prefix) {
    int v = std::stoi(name.substr(prefix));
    if (v < 1 || v > 16) throw std::invalid_argument("fixture parameter out of range: " + name);
    return v;
  };
  try {
    if (name == "z4-nilpotent") return fixtures::z4_nilpotent();
    if (name.rfind("trivial-", 0) == 0) return fixtures::trivial(param(8));
    if (name.rfind("shift-", 0) == 0) return fixtures::shift(param(6));
    if (name.rfind("reversal-", 0) == 0) return fixtures::reversal(param(9));
    if (name.rfind("zp2-", 0) == 0) return fixtures::zp2(param(4));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed fixture name '" + name + "'");
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> default_fixtures(int max_n) {
  std::vector<std::string> out;
  for (const auto& f : fixtures::standard(max_n)) out.push_back(f.name);
  return out;
}

void validate_config(const RunConfig& cfg) {
  auto names = check_registry();
  for (const auto& c : cfg.checks)
    if (std::find(names.begin(), names.end(), c) == names.end())
      throw std::invalid_argument("unknown check '" + c + "'");
  for (const auto& f : cfg.fixtures) fixture_by_name(f);
  if (cfg.max_n < 1 || cfg.max_n > 6) throw std::invalid_argument("max_n must lie in [1, 6]");
  if (cfg.sites < 1 || cfg.sites > 4) throw std::invalid_argument("sites must lie in [1, 4]");
  if (cfg.max_dim < 1 || cfg.max_dim > 1024) throw std::invalid_argument("max_dim must lie in [1, 1024]");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be positive");
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    if (j.contains("fixtures")) c.fixtures = j.at("fixtures").get<std::vector<std::string>>();
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("max_n")) c.max_n = j.at("max_n").get<int>();
    if (j.contains("sites")) c.sites = j.at("sites").get<std::size_t>();
    if (j.contains("max_dim")) c.max_dim = j.at("max_dim").get<std::size_t>();
    if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw io::FormatError(std::string("config: ") + e.what());
  }
  validate_config(c);
  return c;
}

Report run_suite(const RunConfig& cfg) {
  validate_config(cfg);
  Report rep;
  if (cfg.checks.empty()) return rep;
  std::vector<std::string> fx = cfg.fixtures.empty() ? default_fixtures(cfg.max_n) : cfg.fixtures;
  for (const auto& e : registry()) {
    if (std::find(cfg.checks.begin(), cfg.checks.end(), e.name) == cfg.checks.end()) continue;
    std::vector<std::string> targets = e.per_fixture ? fx : std::vector<std::string>{"-"};
    for (const auto& f : targets) {
      Ctx ctx{f, f == "-" ? SetSolution{} : fixture_by_name(f), f == "-" ? std::nullopt : ring_of(f), cfg};
      auto t0 = std::chrono::steady_clock::now();
      std::vector<Outcome> outs;
      try {
        outs = e.run(ctx);
      } catch (const std::exception& ex) {
        outs = {{e.name, Status::fail, {std::string("error: ") + ex.what()}, ""}};
      }
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (auto& o : outs) {
        if (o.status == Status::fail && o.witnesses.empty()) o.witnesses.push_back("no witness recorded");
        rep.records.push_back({e.name, f, o.name, e.anchor, o.status, o.witnesses, o.note, dt / outs.size()});
      }
    }
  }
  return rep;
}

nlohmann::json report_to_json(const Report& r, bool timing) {
  nlohmann::json checks = nlohmann::json::array();
  std::map<std::string, int> counts;
  for (const auto& rec : r.records) {
    nlohmann::json j{{"check", rec.check},   {"fixture", rec.fixture},        {"name", rec.name},
                     {"anchor", rec.anchor}, {"status", to_string(rec.status)}, {"witnesses", rec.witnesses}};
    if (!rec.note.empty()) j["note"] = rec.note;
    if (timing) j["runtime"] = rec.seconds;
    checks.push_back(j);
    ++counts[to_string(rec.status)];
  }
  return {{"schema", io::kSchema}, {"checks", checks}, {"summary", counts}, {"exit", r.exit_code()}};
}

std::vector<std::string> generate_fixture(const std::string& name, int param, const std::string& dir) {
  SetSolution s;
  std::optional<NilpotentRingSpec> ring;
  auto need = [&](int lo, int hi) {
    if (param < lo || param > hi) throw std::invalid_argument(cat(name, ": parameter must lie in [", lo, ", ", hi, "]"));
  };
  if (name == "trivial") {
    need(1, 16);
    ring = zero_ring(param);
    s = fixtures::trivial(param);
  } else if (name == "lyubashenko-shift") {
    need(1, 16);
    s = fixtures::shift(param);
  } else if (name == "lyubashenko-reversal") {
    need(1, 16);
    s = fixtures::reversal(param);
  } else if (name == "zp2") {
    if (param != 2 && param != 3 && param != 5 && param != 7) throw std::invalid_argument("zp2: p must be a prime <= 7");
    ring = zpk_ring(param, 2);
    s = fixtures::zp2(param);
  } else if (name == "z4-nilpotent") {
    ring = zpk_ring(2, 2);
    s = fixtures::z4_nilpotent();
  } else {
    throw std::invalid_argument("unknown fixture generator '" + name + "'");
  }
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  std::string sp = (std::filesystem::path(dir) / "solution.json").string();
  io::write_text(sp, io::solution_to_json(s).dump(2) + "\n");
  paths.push_back(sp);
  if (ring) {
    std::string bp = (std::filesystem::path(dir) / "brace.json").string();
    io::write_text(bp, io::ring_to_json(*ring).dump(2) + "\n");
    paths.push_back(bp);
  }
  // re-validate what was written
  if (!(io::solution_from_json(io::read_json(sp)) == s)) throw InternalInconsistency("fixture did not round-trip");
  return paths;
}

ExportFormat parse_export_format(const std::string& s) {
  if (s == "coo-json") return ExportFormat::coo_json;
  if (s == "dense-csv") return ExportFormat::dense_csv;
  throw std::invalid_argument("unknown export format '" + s + "'");
}

void export_matrix(const std::string& object, const std::optional<SetSolution>& s, std::size_t n,
                   std::size_t sites, const std::string& path, ExportFormat fmt) {
  auto write_q = [&](const QMatrix& m) {
    io::write_text(path, fmt == ExportFormat::coo_json ? io::matrix_to_coo(m).dump(2) + "\n" : io::matrix_to_csv(m));
  };
  auto need_s = [&]() -> const SetSolution& {
    if (!s) throw std::invalid_argument("export " + object + ": a solution is required");
    return *s;
  };
  if (object == "P") {
    write_q(swap_matrix(s ? static_cast<std::size_t>(s->n) : n));
  } else if (object == "r") {
    write_q(linearize(need_s()));
  } else if (object == "F") {
    write_q(build_twist(need_s()).F);
  } else if (object == "transfer") {
    const SetSolution& sol = need_s();
    QMatrix r = linearize(sol);
    PolyMatrix t =
        build_transfer(build_open(r, PolyMatrix::identity({static_cast<std::size_t>(sol.n)}), sites,
                                  HatVariant::reflection))
            .t;
    io::write_text(path, fmt == ExportFormat::coo_json ? io::matrix_to_coo(t).dump(2) + "\n" : io::matrix_to_csv(t));
  } else {
    throw std::invalid_argument("unknown export object '" + object + "'");
  }
}

}  // namespace ybx
