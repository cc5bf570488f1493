#pragma once

#include <stdexcept>
#include <string>

namespace lpv {

/// Raised by all text parsers (programs, specs, level files, queries).
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

/// A universe, base, or instance stream grew past the configured cap.
struct ResourceExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A definite-program operation was applied to a program with negation.
struct NotDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A check that presupposes S_compl subseteq S_corr saw the inclusion fail.
struct PairInconsistentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lpv
