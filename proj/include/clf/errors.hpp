#pragma once

#include <stdexcept>
#include <string>

namespace clf {

// Base for all library-specific failures.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An exact identity between two computation routes failed. Carries the
// identity text and the index at which it broke.
class IdentityError : public Error {
public:
  IdentityError(const std::string& identity, unsigned long n)
      : Error("identity violated at n=" + std::to_string(n) + ": " + identity),
        identity_(identity),
        n_(n) {}

  const std::string& identity() const { return identity_; }
  unsigned long n() const { return n_; }

private:
  std::string identity_;
  unsigned long n_;
};

// An iterative numerical procedure failed to meet its tolerance.
class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// A series order beyond what the implementation supports was requested.
class OrderError : public std::invalid_argument {
public:
  explicit OrderError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace clf
