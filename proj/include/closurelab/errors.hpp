#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace closurelab {

/// Precondition violated by the caller (bad n, improper ideal, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vectors or ideals over different variable counts were mixed.
class DimensionMismatch : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A configured resource cap (lattice points, faces, ...) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what + " (required " + std::to_string(required) + ", cap " + std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Two independent computations of the same quantity disagreed, or a
/// theorem-backed identity failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace closurelab
