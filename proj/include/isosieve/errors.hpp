#pragma once

#include <stdexcept>
#include <string>

namespace isosieve {

/// Input outside an operation's mathematical domain (bad discriminant,
/// non-prime argument, wrong field type, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation was refused because it would exceed a configured budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Sieve configuration that cannot produce a result.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isosieve
