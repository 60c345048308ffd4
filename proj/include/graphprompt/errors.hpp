#pragma once

#include <stdexcept>
#include <string>

namespace graphprompt {

// Base for all library errors so callers can catch one type at the CLI boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or missing configuration (bad key, missing dataset path, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries the offending line or byte offset.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Required dataset file absent.
class IngestError : public Error {
 public:
  using Error::Error;
};

// Tensor shape incompatibility; message carries both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// API contract violated (non-scalar backward seed, empty inputs, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Triplet sampling impossible on this graph.
class SamplingError : public Error {
 public:
  using Error::Error;
};

// k-shot task construction impossible; message names the class.
class TaskError : public Error {
 public:
  using Error::Error;
};

// Training could not proceed (no usable triplets anywhere).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Checkpoint/head document version not supported.
class VersionError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphprompt
