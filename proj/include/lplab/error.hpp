#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace lplab {

enum class ErrorKind {
  invalid_argument,
  insufficient_data,
  numeric_overflow,
  numeric_failure,
  ill_conditioned,
  unsupported_root,
  parse_error,
  internal_invariant,
};

const char* to_string(ErrorKind kind);

/// Base of every exception raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what)
      : Error(ErrorKind::insufficient_data, what) {}
};

/// A recurrence produced a non-finite value; index() is the first offending sample.
class NumericOverflow : public Error {
 public:
  explicit NumericOverflow(Eigen::Index index);
  Eigen::Index index() const noexcept { return index_; }

 private:
  Eigen::Index index_;
};

class NumericFailure : public Error {
 public:
  explicit NumericFailure(const std::string& what)
      : Error(ErrorKind::numeric_failure, what) {}
};

class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double condition)
      : Error(ErrorKind::ill_conditioned, what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class UnsupportedRoot : public Error {
 public:
  explicit UnsupportedRoot(const std::string& what)
      : Error(ErrorKind::unsupported_root, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(ErrorKind::parse_error,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InternalInvariant : public Error {
 public:
  explicit InternalInvariant(const std::string& what)
      : Error(ErrorKind::internal_invariant, what) {}
};

}  // namespace lplab
