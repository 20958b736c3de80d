#pragma once

#include <stdexcept>
#include <string>

namespace ssz {

// Error categories map one-to-one onto CLI exit codes (see tools/cli).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Query outside what the sieve horizon or an exact solver can answer.
class OutOfRange : public Error {
  public:
    using Error::Error;
};

class ResourceError : public Error {
  public:
    using Error::Error;
};

// Missing or inconsistent configuration (e.g. no applicable eta anchor).
class ConfigError : public Error {
  public:
    using Error::Error;
};

// An enclosure violated a mathematically forced sign or ordering.
class NumericalConsistencyError : public Error {
  public:
    using Error::Error;
};

} // namespace ssz
