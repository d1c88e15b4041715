#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sf {

// All library failures derive from Error so callers (and the C API) can
// translate them into a status code in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on a value was violated (negative coefficient, unknown label,
// wrong family for a statistic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Text could not be parsed. position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A resource ceiling refused the request.
class LimitError : public Error {
 public:
  using Error::Error;
};

// An invariant that the mathematics guarantees failed to hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sf
