#pragma once

#include <stdexcept>
#include <string>

namespace idealcore {

// Input text could not be parsed; line/col are 1-based.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

// The input falls outside the restricted classes an operation supports.
// `trace` records which class checks were attempted.
struct NotImplementedClass : std::runtime_error {
  std::string trace;
  explicit NotImplementedClass(const std::string& msg, std::string trace_ = "")
      : std::runtime_error(msg), trace(std::move(trace_)) {}
};

// A descending chain did not certifiably stabilize inside the window.
struct InconclusiveStabilization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAReduction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCohenMacaulay : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent ring contexts or invalid construction data.
struct ContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace idealcore
