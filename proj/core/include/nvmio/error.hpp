#pragma once

#include <stdexcept>
#include <string>

namespace nvmio {

/// Malformed configuration or input file. The message names the offending
/// key or line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Communication-parameter fitting could not produce a usable result.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A device name that is neither builtin nor supplied by configuration.
class UnknownDeviceError : public std::runtime_error {
 public:
  explicit UnknownDeviceError(const std::string& name)
      : std::runtime_error("unknown device '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace nvmio
