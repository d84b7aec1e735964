#pragma once

#include <stdexcept>
#include <string>

namespace regclosure {

/// Vectors of different lengths were combined.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string &what) : std::invalid_argument(what) {}
};

/// The operation has no meaning on this input (zero ideal, unit ideal, ...).
class UndefinedInputError : public std::invalid_argument {
public:
  explicit UndefinedInputError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// A documented precondition (stable input, CI input, ...) does not hold.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// Malformed structured input: Kamoi blocks, family specs, option values.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// Text or JSON ideal that cannot be parsed.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

/// Exponent arithmetic left the 64-bit range.
class ExponentOverflow : public std::overflow_error {
public:
  explicit ExponentOverflow(const std::string &what)
      : std::overflow_error(what) {}
};

/// A per-record wall-clock budget ran out.
class TimeoutError : public std::runtime_error {
public:
  explicit TimeoutError(const std::string &what) : std::runtime_error(what) {}
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string &what) : std::logic_error(what) {}
};

} // namespace regclosure
