#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torfib {

// Base of every error raised by the library. The CLI maps ParseError and
// UsageError to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

class NotInKernel : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class HomogeneityError : public Error {
 public:
  HomogeneityError(std::string side, std::size_t block)
      : Error(side + "-side configuration is not homogeneous: no rational degree map covers block " +
              std::to_string(block + 1)),
        side_(std::move(side)),
        block_(block) {}

  const std::string& side() const noexcept { return side_; }
  /// 0-based index of the first block that breaks solvability.
  std::size_t block() const noexcept { return block_; }

 private:
  std::string side_;
  std::size_t block_;
};

class NonPointedError : public Error {
 public:
  using Error::Error;
};

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// Malformed command lines and unreadable input files; exit code 2 like
// ParseError.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace torfib
