#pragma once

#include <stdexcept>
#include <string>

namespace frobtrace {

enum class ErrorKind {
  precondition,  // an argument violates an operation's precondition
  resource,      // a configured ceiling (enumeration size, sequence length) was hit
  numeric,       // an iterative method failed to converge or certify
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, double best_residual = 0.0)
      : Error(ErrorKind::numeric, what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::resource: return "resource";
    case ErrorKind::numeric: return "numeric";
  }
  return "unknown";
}

}  // namespace frobtrace
