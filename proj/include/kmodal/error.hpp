#pragma once

#include <stdexcept>
#include <string>

namespace kmodal {

// Base of every error raised by the library. Callers that do not care about
// the specific failure catch this one.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotAPermutation : public Error {
public:
  using Error::Error;
};

class InvalidPositions : public Error {
public:
  using Error::Error;
};

class DuplicateValues : public Error {
public:
  using Error::Error;
};

class EmptyPermutation : public Error {
public:
  EmptyPermutation() : Error("permutation is empty") {}
};

// Raised by exhaustive routines whose input exceeds their enumeration guard.
class TooLarge : public Error {
public:
  using Error::Error;
};

class InvalidParams : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

} // namespace kmodal
