#pragma once

#include <stdexcept>
#include <string>

namespace episodes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The edge relation of an episode contains a directed cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

// Two nodes with the same label are not connected by a path.
class NotStrictError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptySequenceError : public Error {
 public:
  using Error::Error;
};

// Raised by the brute-force routines when an input exceeds the enumeration cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace episodes
