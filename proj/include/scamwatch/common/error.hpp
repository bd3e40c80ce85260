#pragma once

#include <stdexcept>
#include <string>

namespace scamwatch {

// Base for all errors raised by the library. Callers that only care about
// "something in the input was wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (timestamps, URLs, hostnames, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on an operation's arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace scamwatch
