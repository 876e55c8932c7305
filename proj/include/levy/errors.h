#pragma once

#include <stdexcept>
#include <string>

namespace levy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter or argument outside the admissible domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An adaptive integral failed to reach its tolerance. Carries the partial
// estimate so callers can report it.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double partial, double error)
      : Error(what), partial_(partial), error_(error) {}

  double partial_estimate() const noexcept { return partial_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double partial_;
  double error_;
};

}  // namespace levy
