#pragma once

#include <stdexcept>
#include <string>

namespace gp {

/// Bad user input: malformed config, unknown key, invalid value.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or unreadable model / data file.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure at runtime: divergence, degenerate greedy step.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gp
