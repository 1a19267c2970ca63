// ybx: command-line front end for the Yang-Baxter toolkit.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "ybx/boundary.hpp"
#include "ybx/chain.hpp"
#include "ybx/io.hpp"
#include "ybx/linearization.hpp"
#include "ybx/qdeform.hpp"
#include "ybx/suite.hpp"
#include "ybx/twist.hpp"

using namespace ybx;
using io::json;

namespace {

struct Timed {
  Outcome o;
  double seconds;
};

Timed timed(const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = f();
  return {o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

json outcome_json(const Outcome& o, std::optional<double> seconds = std::nullopt) {
  json j{{"name", o.name}, {"status", to_string(o.status)}, {"witnesses", o.witnesses}};
  if (!o.note.empty()) j["note"] = o.note;
  if (seconds) j["runtime"] = *seconds;
  return j;
}

int emit(const std::vector<Timed>& items, const std::string& out) {
  json checks = json::array();
  bool fail = false;
  for (const auto& t : items) {
    checks.push_back(outcome_json(t.o, t.seconds));
    fail = fail || t.o.status == Status::fail;
  }
  json rep{{"schema", io::kSchema}, {"checks", checks}};
  if (out.empty()) std::cout << rep.dump(2) << "\n";
  else io::write_text(out, rep.dump(2) + "\n");
  return fail ? 1 : 0;
}

void write_or_print(const json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(2) << "\n";
  else io::write_text(out, j.dump(2) + "\n");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

HatVariant parse_variant(const std::string& v) {
  if (v == "reflection") return HatVariant::reflection;
  if (v == "twisted") return HatVariant::twisted;
  throw std::invalid_argument("unknown variant '" + v + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for set-theoretic Yang-Baxter solutions and open spin chains"};
  app.require_subcommand(1);
  std::string out;

  // brace
  auto* brace = app.add_subcommand("brace", "Build and validate braces");
  brace->require_subcommand(1);
  std::string ring_path;
  auto* from_ring = brace->add_subcommand("from-ring", "Brace from a nilpotent ring table");
  from_ring->add_option("ring", ring_path, "ring JSON {order, add, mul}")->required();
  from_ring->add_option("--out", out, "output path");
  int p = 2;
  auto* zp2 = brace->add_subcommand("zp2", "Brace of Z/p^2 with a.b = p a b");
  zp2->add_option("--p", p, "prime")->required()->check(CLI::Range(2, 7));
  zp2->add_option("--out", out, "output path");

  // solution
  auto* solution = app.add_subcommand("solution", "Set solution of a brace");
  std::string brace_path;
  bool list_reflections = false;
  solution->add_option("brace", brace_path, "brace or ring JSON")->required();
  solution->add_flag("--reflections", list_reflections, "also list all set reflections");
  solution->add_option("--out", out, "output path");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify identities and write a JSON report");
  verify->require_subcommand(1);
  std::string sol_path, bnd_path, variant = "reflection";
  auto* ybe = verify->add_subcommand("yang-baxter", "Matrix identities of the linearized solution");
  ybe->add_option("solution", sol_path, "solution JSON")->required();
  ybe->add_option("--report", out, "report path");
  std::size_t qn = 2;
  auto* qh = verify->add_subcommand("q-hecke", "q-deformed braid matrix checks");
  qh->add_option("--n", qn, "dimension")->required()->check(CLI::Range(2, 4));
  qh->add_option("--report", out, "report path");
  auto* refl = verify->add_subcommand("reflection", "Boundary element and reflection equation");
  refl->add_option("solution", sol_path, "solution JSON")->required();
  refl->add_option("boundary", bnd_path, "boundary JSON")->required();
  refl->add_option("--variant", variant, "reflection|twisted");
  refl->add_option("--report", out, "report path");
  RunConfig cfg;
  std::string cfg_path, fixtures_list, checks_list;
  bool no_timing = false;
  auto* suite = verify->add_subcommand("suite", "Run registered checks over fixtures");
  suite->add_option("--config", cfg_path, "JSON config file");
  suite->add_option("--fixtures", fixtures_list, "comma-separated fixture names");
  suite->add_option("--checks", checks_list, "comma-separated check names, or 'all'");
  suite->add_option("--sites", cfg.sites, "chain length");
  suite->add_option("--max-n", cfg.max_n, "largest fixture size");
  suite->add_flag("--no-timing", no_timing, "omit runtimes (byte-stable output)");
  suite->add_option("--report", out, "report path");

  // twist
  auto* twist = app.add_subcommand("twist", "Drinfeld twist");
  twist->require_subcommand(1);
  auto* tcompute = twist->add_subcommand("compute", "F with r = F P F^-1");
  tcompute->add_option("solution", sol_path, "solution JSON")->required();
  tcompute->add_option("--out", out, "output path");

  // chain
  auto* chain = app.add_subcommand("chain", "Open spin chain");
  chain->require_subcommand(1);
  std::size_t sites = 2;
  std::string chain_checks = "commute,hamiltonian,hecke-span,subalgebra,symmetries";
  auto* transfer = chain->add_subcommand("transfer", "Double-row transfer matrix checks");
  transfer->add_option("--solution", sol_path, "solution JSON")->required();
  transfer->add_option("--boundary", bnd_path, "boundary JSON (default b = I, c = 1)");
  transfer->add_option("--sites", sites, "N")->check(CLI::Range(1, 4));
  transfer->add_option("--variant", variant, "reflection|twisted");
  transfer->add_option("--checks", chain_checks,
                       "commute,hamiltonian,hecke-span,subalgebra,symmetries,cotw,lemma-words");
  transfer->add_option("--report", out, "report path");

  // fixture
  auto* fixture = app.add_subcommand("fixture", "Write fixture files");
  std::string fx_name, dir = ".";
  int param = 2;
  fixture->add_option("name", fx_name, "trivial|lyubashenko-shift|lyubashenko-reversal|zp2|z4-nilpotent")
      ->required();
  fixture->add_option("--n,--p", param, "size or prime");
  fixture->add_option("--dir", dir, "output directory");

  // export
  auto* exp = app.add_subcommand("export", "Export a matrix");
  std::string object, format = "coo-json";
  std::size_t en = 2;
  exp->add_option("object", object, "P|r|F|transfer")->required();
  exp->add_option("--solution", sol_path, "solution JSON");
  exp->add_option("--n", en, "dimension for P");
  exp->add_option("--sites", sites, "N for transfer");
  exp->add_option("--format", format, "coo-json|dense-csv");
  exp->add_option("--out", out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*from_ring) {
      write_or_print(io::brace_to_json(io::brace_from_json(io::read_json(ring_path))), out);
    } else if (*zp2) {
      auto r = zpk_ring(p, 2);
      validate_nilpotent_ring(r);
      write_or_print(io::brace_to_json(brace_from_ring(r)), out);
    } else if (*solution) {
      SetSolution s = solution_from_brace(io::brace_from_json(io::read_json(brace_path)));
      validate_solution(s);
      json j = io::solution_to_json(s);
      if (list_reflections) j["reflections"] = find_reflections(s);
      write_or_print(j, out);
    } else if (*ybe) {
      SetSolution s = io::solution_from_json(io::read_json(sol_path));
      QMatrix r = linearize(s);
      Baxterized B = baxterize(r);
      std::vector<Timed> items;
      items.push_back(timed([&] { return outcome(check_ybe_spectral(B.check_R)); }));
      items.push_back(timed([&] { return outcome(check_unitarity(B.R)); }));
      items.push_back(timed([&] { return outcome(check_crossing(B.R, s.n)); }));
      items.push_back(timed([&] { return outcome(check_hecke_a(r)); }));
      items.push_back(timed([&] { return outcome(trace_identity(r)); }));
      items.push_back(timed([&] { return outcome(check_eigen_multiplicities(r)); }));
      return emit(items, out);
    } else if (*qh) {
      LMatrix g = build_g(qn);
      std::vector<Timed> items;
      items.push_back(timed([&] { return outcome(check_hecke_q(g)); }));
      items.push_back(timed([&] {
        return outcome(check_uq_symmetry(g, uq_coproducts(qn, 2, UqVariant::standard,
                                                          identity_map(static_cast<int>(qn)))));
      }));
      items.push_back(timed([&] { return outcome(check_serre_two_site(qn)); }));
      return emit(items, out);
    } else if (*refl) {
      SetSolution s = io::solution_from_json(io::read_json(sol_path));
      io::BoundarySpec bs = io::boundary_from_json(io::read_json(bnd_path), s);
      HatVariant v = parse_variant(variant);
      QMatrix r = linearize(s);
      BoundaryB B = make_boundary(bs.b, bs.Q);
      std::vector<Timed> items;
      items.push_back(timed([&] { return outcome(check_btype(r, B)); }));
      items.push_back(timed([&] { return outcome(check_rstar_consistency(r, v)); }));
      if (v == HatVariant::reflection) {
        items.push_back(timed([&] { return outcome(check_baxterization(r, B, 1)); }));
        if (B.Q == 1)
          items.push_back(timed([&] {
            return outcome(check_exchange_relations(r, v, descending_coeffs(c_form_K(B.b, bs.c))));
          }));
      } else {
        items.push_back(timed([&] {
          Outcome o = outcome(check_exchange_relations(r, v, descending_coeffs(c_form_K(B.b, bs.c))),
                              Status::finding);
          o.name = "twisted quadratic relation for K = l c b + I";
          return o;
        }));
      }
      return emit(items, out);
    } else if (*suite) {
      if (!cfg_path.empty()) cfg = config_from_json(io::read_json(cfg_path));
      if (!fixtures_list.empty()) cfg.fixtures = split_list(fixtures_list);
      if (!checks_list.empty()) cfg.checks = checks_list == "all" ? check_registry() : split_list(checks_list);
      if (const char* jobs = std::getenv("YBX_JOBS")) cfg.jobs = std::max(1, std::atoi(jobs));
      Report rep = run_suite(cfg);
      write_or_print(report_to_json(rep, !no_timing), out);
      return rep.exit_code();
    } else if (*tcompute) {
      SetSolution s = io::solution_from_json(io::read_json(sol_path));
      Twist t = build_twist(s);
      CheckResult ok = verify_twist(t.F, linearize(s));
      if (!ok) throw InternalInconsistency("twist does not verify: " + ok.witnesses.front());
      write_or_print(io::twist_to_json(t), out);
    } else if (*transfer) {
      SetSolution s = io::solution_from_json(io::read_json(sol_path));
      const auto n = static_cast<std::size_t>(s.n);
      io::BoundarySpec bs{QMatrix::identity({n}), 1, 1, std::nullopt};
      if (!bnd_path.empty()) bs = io::boundary_from_json(io::read_json(bnd_path), s);
      HatVariant v = parse_variant(variant);
      QMatrix r = linearize(s);
      OpenMonodromy T = build_open(r, c_form_K(bs.b, bs.c), sites, v);
      TransferExpansion e = build_transfer(T);
      QMatrix bhat = bs.b * bs.c;
      std::vector<Timed> items;
      for (const auto& c : split_list(chain_checks)) {
        if (c == "commute") {
          items.push_back(timed([&] {
            return outcome(check_commutativity(e), v == HatVariant::twisted ? Status::finding : Status::fail);
          }));
          items.push_back(timed([&] {
            return outcome(check_open_quadratic(r, T, sites == 1),
                           v == HatVariant::twisted ? Status::finding : Status::fail);
          }));
        } else if (v == HatVariant::twisted) {
          items.push_back({{c, Status::not_applicable, {}, "defined for the reflection variant"}, 0});
        } else if (c == "hamiltonian") {
          auto t0 = std::chrono::steady_clock::now();
          HamiltonianReport h = hamiltonian_check(e, r, bhat, sites);
          double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          items.push_back({outcome(h.literal), dt});
          items.push_back({outcome(h.corrected), dt});
        } else if (c == "hecke-span") {
          items.push_back(timed([&] {
            SpanReport sp = hecke_expressibility(e, r, bhat, sites);
            return outcome(sp.result, Status::fail, cat(sp.words, " words, rank ", sp.rank));
          }));
        } else if (c == "subalgebra") {
          auto t0 = std::chrono::steady_clock::now();
          SubalgebraReport rep = boundary_subalgebra_checks(s, make_boundary(bs.b, bs.Q), bs.c, sites);
          double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          for (const auto& o : rep.items) items.push_back({o, dt / rep.items.size()});
        } else if (c == "symmetries") {
          auto t0 = std::chrono::steady_clock::now();
          auto outs = symmetry_suite(s, bs.b, bs.c, sites);
          double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          for (const auto& o : outs) items.push_back({o, dt / outs.size()});
        } else if (c == "cotw") {
          auto t0 = std::chrono::steady_clock::now();
          CotwReport rep = compute_T1_two_ways(r, sites, bs.c);
          double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          items.push_back({outcome(rep.literal), dt});
          items.push_back({outcome(rep.corrected), dt});
        } else if (c == "lemma-words") {
          items.push_back(timed([&] { return outcome(check_lemma1_relations(r, sites)); }));
        } else {
          throw std::invalid_argument("unknown chain check '" + c + "'");
        }
      }
      return emit(items, out);
    } else if (*fixture) {
      for (const auto& path : generate_fixture(fx_name, param, dir)) std::cout << path << "\n";
    } else if (*exp) {
      std::optional<SetSolution> s;
      if (!sol_path.empty()) s = io::solution_from_json(io::read_json(sol_path));
      export_matrix(object, s, en, sites, out, parse_export_format(format));
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
