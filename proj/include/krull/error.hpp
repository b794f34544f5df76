#pragma once

// Error hierarchy shared by every module. Each error carries a stable
// identifier (e.g. "FieldTooSmall") that the command-line tool prints and
// scripts can match on.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krull {

class Error : public std::runtime_error {
public:
  Error(std::string id, const std::string& message)
      : std::runtime_error(message), id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

  // Usage errors are caused by malformed input (exit code 2 in the CLI);
  // everything else is a domain error (exit code 1).
  virtual bool is_usage_error() const noexcept { return false; }

private:
  std::string id_;
};

#define KRULL_DEFINE_ERROR(Name, Usage)                                      \
  class Name : public Error {                                                \
  public:                                                                    \
    explicit Name(const std::string& message) : Error(#Name, message) {}    \
    bool is_usage_error() const noexcept override { return Usage; }          \
  };

KRULL_DEFINE_ERROR(FieldMismatch, false)
KRULL_DEFINE_ERROR(RingMismatch, false)
KRULL_DEFINE_ERROR(DivisionByZero, false)
KRULL_DEFINE_ERROR(Exhausted, false)
KRULL_DEFINE_ERROR(InvalidArgument, false)
KRULL_DEFINE_ERROR(PreconditionViolated, false)
KRULL_DEFINE_ERROR(ZeroPolynomial, false)
KRULL_DEFINE_ERROR(FieldTooSmall, false)
KRULL_DEFINE_ERROR(NotHomogeneous, false)
KRULL_DEFINE_ERROR(NotMonic, false)
KRULL_DEFINE_ERROR(ZeroCoset, false)
KRULL_DEFINE_ERROR(DegenerateCharPoly, false)
KRULL_DEFINE_ERROR(InvalidFieldSpec, true)
KRULL_DEFINE_ERROR(InvalidRingSpec, true)
KRULL_DEFINE_ERROR(FieldLiteralError, true)

#undef KRULL_DEFINE_ERROR

/// Syntax error in a polynomial expression. `offset` is the byte position
/// of the offending token (equal to the input length at end of input).
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& message,
             std::vector<std::string> expected = {})
      : ParseError("ParseError", offset, message, std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  bool is_usage_error() const noexcept override { return true; }

protected:
  ParseError(std::string id, std::size_t offset, const std::string& message,
             std::vector<std::string> expected)
      : Error(std::move(id), format(offset, message, expected)),
        offset_(offset),
        expected_(std::move(expected)) {}

private:
  static std::string format(std::size_t offset, const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string out = "at offset " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownVariable : public ParseError {
public:
  UnknownVariable(std::size_t offset, const std::string& name)
      : ParseError("UnknownVariable", offset, "unknown variable '" + name + "'", {}),
        name_(name) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

}  // namespace krull
