#pragma once

#include <stdexcept>
#include <string>

namespace franel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

// A rational function was evaluated at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace franel
