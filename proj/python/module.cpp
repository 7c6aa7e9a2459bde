// pybind11 front end: jobs come in as the same key = value text the CLI
// reads, results go back as the CLI's JSON report string.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idealcore/errors.hpp"
#include "jobspec.hpp"
#include "runner.hpp"

namespace py = pybind11;
using namespace idealcore;

namespace {

py::dict run_text(const std::string& text, const std::string& command,
                  const std::string& method) {
  JobSpec spec = parse_job(text);
  if (!command.empty()) spec.command = command;
  if (!method.empty()) spec.method = method;
  if (spec.command.empty()) spec.command = "analyze";
  RunOutcome out = run_job(spec);
  py::dict d;
  d["exit_code"] = out.exit_code;
  d["text"] = out.text;
  d["json"] = out.js.dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic core-of-ideals engine";

  py::register_exception<ParseError>(m, "JobParseError", PyExc_ValueError);
  py::register_exception<NotImplementedClass>(m, "UnsupportedInputClass",
                                              PyExc_NotImplementedError);
  py::register_exception<InconclusiveStabilization>(m, "InconclusiveWindow",
                                                    PyExc_RuntimeError);
  py::register_exception<ContextError>(m, "EngineError", PyExc_ValueError);

  m.def("run_job", &run_text, py::arg("text"), py::arg("command") = "",
        py::arg("method") = "",
        "Run one job given as key = value text; returns exit_code, the\n"
        "human report and the JSON report string.");

  m.def("print_job", [](const std::string& text) {
    return print_job(parse_job(text));
  }, py::arg("text"), "Canonical form of a job text (parse then print).");
}
