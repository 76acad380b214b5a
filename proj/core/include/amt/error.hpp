#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amt {

// Base of every exception thrown by the library. The CLI maps these to exit
// code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically invalid input: a fan that is not smooth, an inadmissible
// multidegree, a cover with a base point, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Shapes that do not line up (vector length vs. ray count, matrix sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input text could not be read. `position()` is a 0-based character offset
// into the parsed string, or npos when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? what
                  : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace amt
