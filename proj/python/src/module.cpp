#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "transcert/commands.hpp"
#include "transcert/errors.hpp"
#include "transcert/mult_relations.hpp"
#include "transcert/rational.hpp"

namespace py = pybind11;
using namespace transcert;

namespace {

std::pair<int, std::string> run(const std::string& command, const std::string& input, std::uint64_t seed,
                                 std::int64_t prec, std::uint32_t height, std::uint64_t max_points,
                                 const std::string& strategy) {
  Params params{seed, prec, height, max_points, strategy};
  io::Json parsed;
  try {
    parsed = io::Json::parse(input);
  } catch (const io::Json::parse_error& e) {
    throw py::value_error(std::string("input is not JSON: ") + e.what());
  }
  Outcome out;
  {
    py::gil_scoped_release release;
    out = run_command(command, parsed, params);
  }
  return {out.exit_code, dump_canonical(out.output)};
}

std::pair<int, std::string> verify(const std::string& certificate) {
  io::Json parsed;
  try {
    parsed = io::Json::parse(certificate);
  } catch (const io::Json::parse_error& e) {
    throw py::value_error(std::string("certificate is not JSON: ") + e.what());
  }
  Outcome out;
  {
    py::gil_scoped_release release;
    out = verify_certificate(parsed);
  }
  return {out.exit_code, dump_canonical(out.output)};
}

std::vector<std::vector<std::string>> lattice_basis(const std::vector<std::string>& tuple) {
  RatVector values;
  for (const auto& s : tuple) values.push_back(parse_rational(s));
  const RelationLattice lat = relation_lattice(RationalTuple(std::move(values)));
  std::vector<std::vector<std::string>> cols;
  for (std::size_t j = 0; j < lat.basis.cols(); ++j) {
    std::vector<std::string> col;
    for (std::size_t i = 0; i < lat.basis.rows(); ++i) col.push_back(lat.basis(i, j).get_str());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

PYBIND11_MODULE(_transcert, m) {
  py::register_exception<Error>(m, "TranscertError", PyExc_ValueError);
  m.attr("tool_version") = kToolVersion;
  m.attr("schema_version") = kSchemaVersion;
  m.def("command_names", &command_names);
  m.def("run_command", &run, py::arg("command"), py::arg("input"), py::arg("seed") = 0, py::arg("prec") = 20,
        py::arg("height") = 2, py::arg("max_points") = 1'000'000, py::arg("strategy") = "exhaustive");
  m.def("verify", &verify, py::arg("certificate"));
  m.def("theta", [](std::uint64_t r, std::uint64_t d) { return theta(r, d).get_str(); }, py::arg("r"), py::arg("d"));
  m.def("relation_lattice", &lattice_basis, py::arg("tuple"));
}
