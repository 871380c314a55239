// Python bindings: the analysis commands exchange JSON documents as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jkres/commands.hpp"
#include "jkres/errors.hpp"

namespace py = pybind11;

namespace {

jkres::CommandResult run(const std::string& command, const std::string& problem, const std::string& options) {
  const jkres::Problem p = jkres::parse_problem_text(problem);
  jkres::Json extra;
  try {
    extra = jkres::Json::parse(options);
  } catch (const jkres::Json::parse_error& e) {
    throw jkres::ParseError(std::string("invalid JSON in options: ") + e.what());
  }
  if (!extra.is_object()) throw jkres::ParseError("options must be a JSON object");
  jkres::Json merged = p.options;
  for (const auto& [k, v] : extra.items()) merged[k] = v;
  return jkres::run_command(command, p, jkres::options_from_json(merged));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Jeffrey-Kirwan residues over hyperplane arrangements";

  py::register_exception<jkres::Error>(m, "JkresError", PyExc_RuntimeError);
  py::register_exception<jkres::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("commands", &jkres::command_names, "Names of the analysis commands.");
  m.def(
      "run_json",
      [](const std::string& command, const std::string& problem, const std::string& options) {
        return run(command, problem, options).json.dump();
      },
      py::arg("command"), py::arg("problem"), py::arg("options") = "{}",
      "Run a command on a problem document and return the JSON result as a string.");
  m.def(
      "run_text",
      [](const std::string& command, const std::string& problem, const std::string& options) {
        return run(command, problem, options).text;
      },
      py::arg("command"), py::arg("problem"), py::arg("options") = "{}",
      "Run a command and return its text rendering.");
}
