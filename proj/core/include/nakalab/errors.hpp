#pragma once

#include <stdexcept>
#include <string>

namespace nakalab {

// Input could not be parsed or validated (CLI exit code 1).
struct ParseError : std::runtime_error {
  int line = 0, col = 0;
  ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(msg), line(line_), col(col_) {}
};

// Algebra admits infinitely many indecomposables (CLI exit code 2).
// `certificate` names the obstruction (a band, or a non-Dynkin shape).
struct RepresentationInfiniteError : std::runtime_error {
  std::string certificate;
  RepresentationInfiniteError(const std::string& msg, std::string cert)
      : std::runtime_error(msg), certificate(std::move(cert)) {}
};

// Algebra outside the supported classes (CLI exit code 3).
struct UnsupportedClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation precondition does not hold (CLI exit code 3).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive search exceeded its configured budget (CLI exit code 4).
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nakalab
