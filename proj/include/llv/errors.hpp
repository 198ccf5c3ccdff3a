#pragma once

#include <stdexcept>
#include <string>

namespace llv {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural precondition (symmetry, nondegeneracy, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis needed by an algebraic construction fails (e.g. not an HL class).
class MathError : public Error {
 public:
  using Error::Error;
};

/// Ring-description file could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& field, int line, const std::string& what)
      : Error(format(field, line, what)), field_(field), line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& field, int line, const std::string& what) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " in field '" + field + "'";
    return out + ": " + what;
  }

  std::string field_;
  int line_ = 0;
};

}  // namespace llv
