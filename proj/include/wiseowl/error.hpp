#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wiseowl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file cannot be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// The serialization is one we deliberately do not read (RDF/XML, JSON-LD).
class UnrecognizedSyntax : public Error {
 public:
  using Error::Error;
};

// Malformed Turtle / N-Triples. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string &message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string &message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Embedding service failure (network, HTTP status >= 400, bad payload).
class RemoteUnavailable : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

}  // namespace wiseowl
