#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace manyopt {

/// Invalid experiment or engine configuration. Carries the name of the
/// offending config field so callers can report structured errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace manyopt
