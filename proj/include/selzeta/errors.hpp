#pragma once

#include <stdexcept>
#include <string>

namespace selzeta {

// Base for all mathematical domain failures. The CLI maps these to exit 3.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Argument sits on a pole of the requested function.
struct PoleError : MathError {
  int order;  // pole order when known, 0 otherwise
  explicit PoleError(const std::string& what, int ord = 0)
      : MathError(what), order(ord) {}
};

// s = 1 pole of zeta / L(s, principal chi).
struct PoleAtOne : MathError {
  PoleAtOne() : MathError("pole at s = 1") {}
};

struct DomainError : MathError {
  explicit DomainError(const std::string& what) : MathError(what) {}
};

struct NotPrimitiveError : MathError {
  explicit NotPrimitiveError(const std::string& what = "character is not primitive")
      : MathError(what) {}
};

struct MissingKappa0 : MathError {
  explicit MissingKappa0(const std::string& what =
                             "kappa0 unknown for this group; pass an explicit override")
      : MathError(what) {}
};

struct UnsupportedError : MathError {
  explicit UnsupportedError(const std::string& what) : MathError(what) {}
};

// Data-file problems carry the 1-based line number.
struct ParseError : MathError {
  int line;
  ParseError(const std::string& what, int line_no)
      : MathError(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

struct MonotonicityError : MathError {
  int line;
  MonotonicityError(const std::string& what, int line_no)
      : MathError(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

}  // namespace selzeta
