#pragma once

#include <stdexcept>
#include <string>

namespace graphcx {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatches, malformed graphs, inconsistent tensors.
class StructureError : public Error {
 public:
  using Error::Error;
};

class NondegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Wrong flavor (A-infinity vs L-infinity), wrong map parity, or a graph
/// kind that does not match the algebra flavor.
class FlavorError : public Error {
 public:
  using Error::Error;
};

class NotACocycleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedValenceError : public Error {
 public:
  using Error::Error;
};

class NotContractibleError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed; line() is one-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace graphcx
