#pragma once

#include <stdexcept>
#include <string>

namespace extel {

/// Violated precondition on a physical quantity (negative speed, u >= c, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or unknown entries in a configuration source.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace extel
