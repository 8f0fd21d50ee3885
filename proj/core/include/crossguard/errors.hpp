#pragma once

#include <stdexcept>
#include <string>

namespace crossguard {

/// Invalid configuration or parameter values supplied by the caller/user.
/// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem or parse failures while reading/writing external data.
/// The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crossguard
