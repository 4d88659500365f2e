#pragma once

#include <stdexcept>
#include <string>

namespace rrtrop {

// Categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Parse,         // malformed polynomial, weight or input file
  Precondition,  // operation called outside its domain
  Violation,     // a user assertion was falsified (basis violation, product mismatch)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class ViolationError : public Error {
 public:
  explicit ViolationError(const std::string& what) : Error(ErrorKind::Violation, what) {}
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Precondition: return 3;
    case ErrorKind::Violation: return 4;
  }
  return 1;
}

}  // namespace rrtrop
