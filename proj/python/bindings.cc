#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "fairflow/io.h"
#include "fairflow/oracle.h"

namespace py = pybind11;
namespace io = fairflow::io;

namespace {

py::tuple Pack(const io::CmdResult& r) {
  return py::make_tuple(r.exit_code, r.out.dump(), r.diagnostics);
}

}  // namespace

PYBIND11_MODULE(_fairflow, m) {
  m.doc() = "Decreasingly minimal integral flows and orientations.";

  m.def(
      "check", [](const std::string& text) { return Pack(io::CmdCheck(text)); },
      py::arg("text"));
  m.def(
      "solve",
      [](const std::string& text, bool min_cost, bool trace) {
        return Pack(io::CmdSolve(text, min_cost, trace));
      },
      py::arg("text"), py::arg("min_cost") = false, py::arg("trace") = false);
  m.def(
      "orient",
      [](const std::string& text, std::optional<int> k) { return Pack(io::CmdOrient(text, k)); },
      py::arg("text"), py::arg("k") = py::none());
  m.def(
      "verify",
      [](const std::string& text, std::uint64_t budget) {
        return Pack(io::CmdVerify(text, budget));
      },
      py::arg("text"), py::arg("budget") = fairflow::oracle::kDefaultBudget);

  m.attr("EXIT_OK") = io::kExitOk;
  m.attr("EXIT_INPUT") = io::kExitInput;
  m.attr("EXIT_INFEASIBLE") = io::kExitInfeasible;
  m.attr("EXIT_NO_DECMIN") = io::kExitNoDecmin;
  m.attr("EXIT_MISMATCH") = io::kExitMismatch;
}
