#ifndef MICROSIM_ERRORS_HPP
#define MICROSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msim {

// Invalid configuration or parameter values. Maps to exit code 2 at the CLI.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem and serialization failures. Maps to exit code 3 at the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition (programming error, not user input).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace msim

#endif
