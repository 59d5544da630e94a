#pragma once

#include <stdexcept>
#include <string>

namespace caat {

// Base class for all library errors. Subclasses map to distinct CLI exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Tensor/matrix dimension disagreement; message names both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value; message names the violated constraint.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Class label outside [0, k); message carries the offending index.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Flat parameter index or element index out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Unknown parameter path.
class PathError : public Error {
 public:
  using Error::Error;
};

// Precondition / API-contract violation.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Malformed file content (checkpoints, datasets, configs).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Missing or unreadable/unwritable file.
class FileError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Bad command-line usage (unknown mode, unknown attack name, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace caat
