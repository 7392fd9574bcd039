#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circq {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Expression text could not be turned into a polynomial. `position` is the
/// zero-based byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position), detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

/// The metric determinant vanished (A = C or (A + C)^2 = 4B^2).
class SingularMetricError : public Error {
public:
  using Error::Error;
};

/// The point lies on an excluded locus of the manifold.
class DomainError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace circq
