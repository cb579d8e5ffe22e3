#pragma once

#include <stdexcept>
#include <string>

namespace seqstate {

/// Broad failure class; the CLI maps each kind onto an exit code.
enum class ErrorKind {
  Domain,     // input outside an operation's mathematical domain
  Range,      // qubit count or value outside the supported range
  Capacity,   // a configured size cap would be exceeded
  Numeric,    // a numerical invariant was violated beyond tolerance
  Parse,      // malformed text input
  Format,     // well-formed tokens in an invalid arrangement
  Storage,    // filesystem failure
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorKind::Capacity, what) {}
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, double max_deviation)
      : Error(ErrorKind::Numeric, what), max_deviation_(max_deviation) {}

  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorKind::Parse, what), line_(line) {}

  /// 1-based line number of the offending input line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(ErrorKind::Format, what) {}
};

class StorageError : public Error {
 public:
  explicit StorageError(const std::string& what) : Error(ErrorKind::Storage, what) {}
};

}  // namespace seqstate
