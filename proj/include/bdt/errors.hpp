#pragma once

#include <stdexcept>

namespace bdt {

// Shape or extent mismatch between tensors.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's stated precondition was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid model or run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite value produced where the contract requires finite results.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unrecognized file structure (bad magic, bad header row).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File recognized but contents fail integrity checks (bad CRC, truncation).
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Persisted format version not supported by this build.
class VersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bdt
