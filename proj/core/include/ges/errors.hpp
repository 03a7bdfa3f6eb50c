#pragma once

#include <stdexcept>
#include <string>

namespace ges {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad SecurityConfig or malformed injected instance material.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Modulus below 2 passed to a modular operation.
class InvalidModulusError : public Error {
 public:
  using Error::Error;
};

// lo > hi in a sampling request.
class InvalidRangeError : public Error {
 public:
  using Error::Error;
};

// Plaintext outside S = [2, 2^m - 1].
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Operation requiring equal encoding levels got mismatched ones.
class LevelMismatchError : public Error {
 public:
  using Error::Error;
};

// Problem instance over a solver's enforced size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed file content (JSON structure, hex fields, version).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ges
