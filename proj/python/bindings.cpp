#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bethe/api.hpp"
#include "bethe/correspondence.hpp"

namespace py = pybind11;
using namespace bethe;

namespace {

// Module functions exchange JSON text; the Python package parses it.
std::vector<Rational> to_points(int n, const std::vector<std::string>& pts, std::uint64_t seed) {
  std::vector<Rational> out;
  for (const auto& p : pts) {
    auto one = parse_points(p);
    if (one.size() != 1) throw ConfigError("bad point '" + p + "'");
    out.push_back(one[0]);
  }
  return resolve_points(n, out, seed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bethe algebra of the gl_2 Gaudin model";
  m.attr("__version__") = kToolVersion;

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const RepeatedPointError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidWeightError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const TheoremViolation& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def(
      "seeded_points",
      [](int n, std::uint64_t seed) {
        std::vector<std::string> out;
        for (const auto& p : seeded_points(n, seed)) out.push_back(to_string(p));
        return out;
      },
      py::arg("n"), py::arg("seed") = 1);

  m.def(
      "operator_json",
      [](int n, const std::vector<std::string>& pts, const std::string& K, std::uint64_t seed) {
        return operator_json(n, to_points(n, pts, seed), K).dump();
      },
      py::arg("n"), py::arg("points") = std::vector<std::string>{}, py::arg("K") = "nilpotent", py::arg("seed") = 1);

  m.def(
      "decompose_json",
      [](int n, const std::vector<std::string>& pts, std::uint64_t seed) {
        return decompose_json(n, to_points(n, pts, seed)).dump();
      },
      py::arg("n"), py::arg("points") = std::vector<std::string>{}, py::arg("seed") = 1);

  m.def(
      "leaves_json",
      [](int n, const std::vector<std::string>& pts, unsigned precision, std::uint64_t seed) {
        if (precision < 64) throw ConfigError("precision must be at least 64 bits");
        py::gil_scoped_release release;
        return leaves_json(n, to_points(n, pts, seed), precision, seed).dump();
      },
      py::arg("n"), py::arg("points") = std::vector<std::string>{}, py::arg("precision") = 128, py::arg("seed") = 1);

  m.def(
      "eliminate_json", [](int k, int d) { return eliminate_json(k, d).dump(); }, py::arg("k"), py::arg("d"));

  m.def(
      "character_json", [](int k, int d, int order) { return character_json(k, d, order).dump(); }, py::arg("k"),
      py::arg("d"), py::arg("order") = 10);

  m.def(
      "verify_json",
      [](const std::string& config) {
        RunConfig cfg;
        Json j;
        try {
          j = Json::parse(config);
        } catch (const Json::exception& e) {
          throw ConfigError(std::string("config is not JSON: ") + e.what());
        }
        cfg.merge_json(j);
        cfg.validate();
        py::gil_scoped_release release;
        return run_suite(cfg).dump();
      },
      py::arg("config"));
}
