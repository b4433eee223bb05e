#pragma once

#include <stdexcept>
#include <string>

namespace graphlearn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Eigendecomposition or other numeric kernel failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Sign-pattern transform produced a negative entry.
class NegativeResultError : public Error {
 public:
  using Error::Error;
};

// Problem has no feasible point (e.g. connected design on a disconnected support).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Text input rejected; row/col are 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int row, int col)
      : Error(msg), row_(row), col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

}  // namespace graphlearn
