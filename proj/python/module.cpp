#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibcat/cli.hpp"
#include "fibcat/error.hpp"

namespace py = pybind11;

namespace {

// Structured report as JSON text; the Python side decodes it.
std::string run(const std::string& command, const std::vector<std::string>& inputs, bool span,
                bool interchange, const std::string& output, const std::string& morphism) {
  fibcat::cli::CheckRequest req;
  req.command = command;
  req.inputs = inputs;
  req.options.span = span;
  req.options.interchange = interchange;
  req.options.output = output;
  req.options.morphism = morphism;
  return fibcat::cli::run(req).to_json().dump(2);
}

}  // namespace

PYBIND11_MODULE(_fibcat, m) {
  m.doc() = "Bindings for the fibcat checks";

  py::register_exception<fibcat::Error>(m, "Error");
  py::register_exception<fibcat::cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("commands", &fibcat::cli::commands);
  m.def("run", &run, py::arg("command"), py::arg("inputs"), py::arg("span") = false,
        py::arg("interchange") = false, py::arg("output") = "", py::arg("morphism") = "");
  m.def("check_all", [](const std::string& dir) { return fibcat::cli::check_all(dir).to_json().dump(2); },
        py::arg("fixtures"));
}
