#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mapcount/cli.hpp"
#include "mapcount/exactnum.hpp"
#include "mapcount/oracle.hpp"
#include "mapcount/profiles.hpp"
#include "mapcount/recurrences.hpp"
#include "mapcount/series.hpp"

namespace py = pybind11;
using namespace mapcount;

namespace {

py::object to_py(const ExactInt& v) {
  auto s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const ExactRational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.numerator()), to_py(v.denominator()));
}

DegreeProfile as_profile(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_profile(obj.cast<std::string>());
  if (py::isinstance<DegreeProfile>(obj)) return obj.cast<DegreeProfile>();
  // Mapping {half_degree: multiplicity}.
  std::vector<DegreeProfile::Entry> entries;
  for (auto item : obj.cast<py::dict>()) entries.push_back({item.first.cast<std::int64_t>(), item.second.cast<std::int64_t>()});
  return DegreeProfile(std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of bipartite maps, constellations and monotone Hurwitz numbers";

  py::register_exception<ExactnessViolation>(m, "ExactnessViolation", PyExc_ArithmeticError);
  py::register_exception<oracle::WorkCapExceeded>(m, "WorkCapExceeded", PyExc_RuntimeError);

  py::class_<DegreeProfile>(m, "DegreeProfile")
      .def(py::init([](const py::object& o) { return as_profile(o); }))
      .def_property_readonly("edges", &DegreeProfile::edges)
      .def_property_readonly("faces", &DegreeProfile::faces)
      .def("multiplicity", &DegreeProfile::multiplicity)
      .def("__str__", &DegreeProfile::str)
      .def("__repr__", [](const DegreeProfile& p) { return "DegreeProfile('" + p.str() + "')"; })
      .def("__eq__", [](const DegreeProfile& a, const DegreeProfile& b) { return a == b; });

  m.def("parse_profile", [](const std::string& s) { return parse_profile(s); });
  m.def("subprofiles", [](const py::object& f) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [s, t] : subprofiles(as_profile(f))) out.emplace_back(s.str(), t.str());
    return out;
  });

  m.def("binomial", [](std::int64_t a, std::int64_t b) { return to_py(binomial(a, b)); });
  m.def("catalan", [](std::int64_t n) { return to_py(catalan(n)); });

  m.def("count_bipartite", [](std::int64_t g, const py::object& f) { return to_py(count_bipartite(g, as_profile(f))); },
        py::arg("g"), py::arg("profile"));
  m.def("count_angulation", [](std::int64_t k, std::int64_t g, std::int64_t n) { return to_py(count_angulation(k, g, n)); },
        py::arg("k"), py::arg("g"), py::arg("n"));
  m.def("count_constellation", [](std::int64_t mm, std::int64_t g, std::int64_t n) { return to_py(count_constellation(mm, g, n)); },
        py::arg("m"), py::arg("g"), py::arg("n"));
  m.def(
      "count_constellation_by_faces",
      [](std::int64_t mm, std::int64_t g, std::int64_t n, std::int64_t f, const std::string& variant) {
        return to_py(count_constellation_by_faces(mm, g, n, f, parse_variant(variant)));
      },
      py::arg("m"), py::arg("g"), py::arg("n"), py::arg("f"), py::arg("variant") = "corrected");
  m.def(
      "count_one_faced",
      [](std::int64_t mm, std::int64_t g, std::int64_t n, bool experimental) {
        return to_py(count_one_faced(mm, g, n, experimental));
      },
      py::arg("m"), py::arg("g"), py::arg("n"), py::arg("allow_experimental") = false);
  m.def("count_monotone", [](std::int64_t g, std::int64_t n) { return to_py(count_monotone(g, n)); }, py::arg("g"), py::arg("n"));

  m.def(
      "oracle_constellations",
      [](int mm, int n, bool one_faced, unsigned threads) {
        oracle::OracleQuery q;
        q.model = one_faced ? oracle::Model::one_faced : oracle::Model::constellation;
        q.m = mm;
        q.n = n;
        q.threads = threads;
        const auto result = oracle::enumerate_constellations(q);
        py::dict out;
        for (const auto& [key, t] : result.table)
          out[py::make_tuple(key.first, key.second)] = to_py(t.rooted.numerator());
        return out;
      },
      "Rooted counts keyed by (genus, face cycle type).", py::arg("m"), py::arg("n"), py::arg("one_faced") = false,
      py::arg("threads") = 1);
  m.def(
      "oracle_monotone", [](int n, std::int64_t g) { return to_py(oracle::enumerate_monotone(n, g).rooted(g)); }, py::arg("n"),
      py::arg("g"));

  m.def(
      "planar_angulation_series",
      [](std::int64_t k, std::int64_t order) {
        const auto series = planar_angulation_series(k, order);
        py::list out;
        for (const auto& c : series.coefficients()) out.append(to_py(c));
        return out;
      },
      py::arg("k"), py::arg("order"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
