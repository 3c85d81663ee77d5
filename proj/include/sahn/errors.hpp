#pragma once

#include <stdexcept>
#include <string>

namespace sahn {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (index out of range, bad size).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The requested linkage method is not supported by the chosen algorithm.
class MethodError : public Error {
 public:
  using Error::Error;
};

// Input values are present but unusable (negative, NaN, infinite).
class DataError : public Error {
 public:
  using Error::Error;
};

// Textual input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Problem too large for an exhaustive routine.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A benchmark plan names an illegal (algorithm, method) pair or bad cell.
class PlanError : public Error {
 public:
  using Error::Error;
};

}  // namespace sahn
