#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixlogic {

/// Raised by the term, formula and derivation readers. Line and column are
/// 1-based and point at the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// An operation was called outside its domain (e.g. head_reduce on a term
/// containing C).
class PreconditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mixlogic
