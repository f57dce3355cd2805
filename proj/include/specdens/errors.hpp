#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specdens {

// Base of every error the library throws. Callers that only care about
// "the input was bad" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Combinatorial caps (variable count, brute-force ranges) were exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

// A finite sequence source (explicit list, digit string, bit list) ran out.
class ExhaustedError : public Error {
 public:
  using Error::Error;
};

// Arithmetic left the 64-bit range of machine naturals.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An oracle-backed membership predicate could not answer.
class OracleError : public Error {
 public:
  using Error::Error;
};

// A bounded search ended without an answer.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition does not hold for the given theory/spectrum.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace specdens
