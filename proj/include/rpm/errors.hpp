#pragma once

#include <stdexcept>
#include <string>

namespace rpm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The g ansatz is undefined for even states when Q_0 = 0 (E = V(0)).
class SingularAnsatz : public Error {
 public:
  SingularAnsatz() : Error("g ansatz is singular: Q_0 = 0 for even states") {}
};

/// A truncated xi-series determinant had an all-zero pivot column.
class OrderDeficiency : public Error {
 public:
  using Error::Error;
};

class RootLost : public Error {
 public:
  using Error::Error;
};

class StateNotBound : public Error {
 public:
  using Error::Error;
};

}  // namespace rpm
