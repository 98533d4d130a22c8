// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ranknet {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A key that is NaN or infinite.
class InvalidKey : public Error {
 public:
  using Error::Error;
};

/// A size or length that the operation cannot accept.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument outside the operation's domain (non-prime, wrong order).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PermutationError : public Error {
 public:
  using Error::Error;
};

/// A network that fails structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: key lists, network JSON.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ranknet
