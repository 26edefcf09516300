#pragma once

#include <stdexcept>
#include <string>

namespace amrseq {

enum class ErrorKind {
  UnbalancedParens,
  EmptyConcept,
  DuplicateVariableDefinition,
  DanglingRelation,
  UndefinedVariableReference,
  UnexpectedToken,
  Unreachable,
  TokenMismatch,
  Unrepairable,
  TooLarge,
  IdMismatch,
  LengthMismatch,
  BadPath,
  BadSpan,
  IoError,
};

const char* to_string(ErrorKind kind);

// Failure with a machine-checkable kind plus human-readable context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure; line is 1-based within the parsed text, -1 when unknown.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, int line = -1)
      : Error(kind, line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace amrseq
