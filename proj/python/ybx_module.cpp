// Python bindings. Structured data crosses the boundary as ybx/1 JSON text;
// the ybx package wraps these entry points with json.loads/json.dumps.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybx/boundary.hpp"
#include "ybx/chain.hpp"
#include "ybx/io.hpp"
#include "ybx/linearization.hpp"
#include "ybx/qdeform.hpp"
#include "ybx/suite.hpp"

namespace py = pybind11;
using namespace ybx;
using io::json;

namespace {

json outcome_json(const Outcome& o) {
  return {{"name", o.name}, {"status", to_string(o.status)}, {"witnesses", o.witnesses}, {"note", o.note}};
}

std::string outcomes(const std::vector<Outcome>& os) {
  json out = json::array();
  for (const auto& o : os) out.push_back(outcome_json(o));
  return out.dump();
}

SetSolution load_solution(const std::string& text) { return io::solution_from_json(json::parse(text)); }

HatVariant parse_variant(const std::string& v) {
  if (v == "reflection") return HatVariant::reflection;
  if (v == "twisted") return HatVariant::twisted;
  throw std::invalid_argument("unknown variant '" + v + "'");
}

io::BoundarySpec load_boundary(const std::optional<std::string>& text, const SetSolution& s) {
  if (!text) return {QMatrix::identity({static_cast<std::size_t>(s.n)}), 1, 1, std::nullopt};
  return io::boundary_from_json(json::parse(*text), s);
}

TransferExpansion transfer_of(const SetSolution& s, const io::BoundarySpec& b, std::size_t sites, HatVariant v) {
  return build_transfer(build_open(linearize(s), c_form_K(b.b, b.c), sites, v));
}

}  // namespace

PYBIND11_MODULE(_ybx, m) {
  m.doc() = "Exact Yang-Baxter, reflection and open-chain computations";

  py::register_exception<io::FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("fixture", [](const std::string& name) { return io::solution_to_json(fixture_by_name(name)).dump(); });
  m.def("fixture_names", [](int max_n) { return default_fixtures(max_n); }, py::arg("max_n") = 4);

  m.def("brace_from_ring", [](const std::string& ring) {
    return io::brace_to_json(io::brace_from_json(json::parse(ring))).dump();
  });
  m.def("solution_from_brace", [](const std::string& brace) {
    return io::solution_to_json(solution_from_brace(io::brace_from_json(json::parse(brace)))).dump();
  });
  m.def("validate_solution", [](const std::string& sol) { load_solution(sol); });
  m.def("find_reflections", [](const std::string& sol) { return find_reflections(load_solution(sol)); });

  m.def("linearize", [](const std::string& sol) { return io::matrix_to_coo(linearize(load_solution(sol))).dump(); });
  m.def("twist", [](const std::string& sol) { return io::twist_to_json(build_twist(load_solution(sol))).dump(); });

  m.def("verify_yang_baxter", [](const std::string& sol) {
    SetSolution s = load_solution(sol);
    QMatrix r = linearize(s);
    Baxterized B = baxterize(r);
    return outcomes({outcome(check_ybe_spectral(B.check_R)), outcome(check_unitarity(B.R)),
                     outcome(check_crossing(B.R, s.n)), outcome(check_hecke_a(r)), outcome(trace_identity(r)),
                     outcome(check_eigen_multiplicities(r))});
  });

  m.def("verify_q_hecke", [](std::size_t n) { return outcomes({outcome(check_hecke_q(build_g(n)))}); });

  m.def(
      "verify_reflection",
      [](const std::string& sol, const std::string& boundary) {
        SetSolution s = load_solution(sol);
        io::BoundarySpec b = load_boundary(boundary, s);
        QMatrix r = linearize(s);
        BoundaryB B = make_boundary(b.b, b.Q);
        return outcomes({outcome(check_btype(r, B)),
                         outcome(check_spectral_reflection(baxterize(r).check_R, c_form_K(b.b, b.c)))});
      },
      py::arg("solution"), py::arg("boundary"));

  m.def(
      "transfer",
      [](const std::string& sol, std::size_t sites, std::optional<std::string> boundary, const std::string& variant) {
        SetSolution s = load_solution(sol);
        TransferExpansion e = transfer_of(s, load_boundary(boundary, s), sites, parse_variant(variant));
        json coeffs = json::array();
        for (const auto& c : e.coeffs) coeffs.push_back(io::matrix_to_coo(c));
        return json{{"schema", io::kSchema}, {"top", e.top}, {"transfer", io::matrix_to_coo(e.t)},
                    {"coefficients", coeffs}}
            .dump();
      },
      py::arg("solution"), py::arg("sites"), py::arg("boundary") = std::nullopt, py::arg("variant") = "reflection");

  m.def(
      "check_commutativity",
      [](const std::string& sol, std::size_t sites, std::optional<std::string> boundary, const std::string& variant) {
        SetSolution s = load_solution(sol);
        return outcomes({outcome(
            check_commutativity(transfer_of(s, load_boundary(boundary, s), sites, parse_variant(variant))))});
      },
      py::arg("solution"), py::arg("sites"), py::arg("boundary") = std::nullopt, py::arg("variant") = "reflection");

  m.def(
      "run_suite",
      [](const std::string& config, bool timing) {
        RunConfig c = config_from_json(json::parse(config));
        py::gil_scoped_release release;
        return report_to_json(run_suite(c), timing).dump();
      },
      py::arg("config"), py::arg("timing") = false);
}
