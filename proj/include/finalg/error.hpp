#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace finalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class NonPrime : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// An invariant that finiteness guarantees was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace finalg
