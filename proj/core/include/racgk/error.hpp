#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace racgk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input text. `location` is a line number or a JSON field path.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// A graph that violates simplicity or the vertex cap.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Operands that do not live in the same ring, or arguments outside an operation's domain.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

}  // namespace racgk
