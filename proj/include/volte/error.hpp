#pragma once

#include <stdexcept>
#include <string>

namespace volte {

/// Invalid or inconsistent configuration. `field` is the dotted path of the
/// offending key when one is known (e.g. "faults.p3").
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string field = {})
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace volte
