#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace helisurf {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. Carries the byte offset of the offending token
/// and the set of tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// An evaluation point lies outside the natural domain of a function
/// (log of a non-positive value, sqrt of a negative one, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Degenerate geometry: singular metric, vanishing normal, parabolic point.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Invalid user configuration (bad pitch, empty domain, unknown kind...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace helisurf
