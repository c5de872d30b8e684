#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rrmon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based (0 when not line-oriented),
/// `column` is a 0-based offset into the line or formula text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A value or argument violates a documented precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// RR3 and RR4 count pending requests; they have no regular-language form.
class NotRegular : public Error {
public:
  using Error::Error;
};

/// The requested (spec type, formalism) pair has no decider.
class UnsupportedFormalism : public Error {
public:
  using Error::Error;
};

/// A one-counter run exceeded the machine integer width.
class CounterOverflow : public Error {
public:
  using Error::Error;
};

} // namespace rrmon
