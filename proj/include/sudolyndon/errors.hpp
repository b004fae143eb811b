#pragma once

#include <stdexcept>
#include <string>

namespace sudolyndon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound (enumeration length, hole count, grid size...) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// The solver ran out of its node budget before finishing.
class BudgetExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

/// An operation was called on an input that violates its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  Syntax,
  Header,
  Dimension,
  IllegalCharacter,
  CountOutOfRange,
  CountMismatch,
  BoxTiling,
  WildcardOutsideVariant,
  VariantMismatch,
};

const char* to_string(ParseErrorKind kind);

/// Malformed word, puzzle file or interchange document. Line and column are
/// 1-based; 0 means "not applicable" (e.g. JSON input).
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::string message, int line = 0, int column = 0);

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace sudolyndon
