#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rectdp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract user input.
class InputError : public Error {
 public:
  enum class Kind {
    MalformedLine,
    CoordinateOutOfRange,
    EmptyInstance,
    CountMismatch,
    InvalidArgument,
  };

  InputError(Kind kind, std::size_t line, const std::string& what)
      : Error(what), kind_(kind), line_(line) {}
  InputError(Kind kind, const std::string& what) : InputError(kind, 0, what) {}

  Kind kind() const { return kind_; }
  // 1-based physical line of the offending text, 0 when not line-related.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// A size guard (grid vertex limit, oracle limits, enumeration range) was hit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// The solver reached a state that cannot happen for a valid instance:
// an empty layer, no accepted final state, a non-Eulerian tour subgraph or a
// corrupt trace.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Raised by the validating canonicalizers.
class StateError : public Error {
 public:
  enum class Kind {
    CrossingPartition,
    OddCountViolation,
    SingletonNotEven,
    ParityComponentMismatch,
    BadShape,
  };

  StateError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace rectdp
