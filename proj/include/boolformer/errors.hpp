#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolformer {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A variable index exceeds the declared input dimension.
class dimension_error : public error {
 public:
  using error::error;
};

/// An operation would exceed a hard capacity bound (e.g. 2^D blowup).
class capacity_error : public error {
 public:
  using error::error;
};

/// Malformed token stream; carries the failing token position.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " (at token " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Invalid configuration value or combination.
class config_error : public error {
 public:
  using error::error;
};

/// Unreadable or inconsistent input data (files, tables, trajectories).
class data_error : public error {
 public:
  using error::error;
};

/// Model-side failure: bad checkpoint, no valid candidate, non-finite loss.
class model_error : public error {
 public:
  using error::error;
};

}  // namespace boolformer
