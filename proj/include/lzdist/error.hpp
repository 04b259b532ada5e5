#pragma once

#include <stdexcept>
#include <string>

namespace lzdist {

// Error classes map to CLI exit codes (see tools/lzdist_main.cpp):
//   InvalidInputError / DegenerateInputError / ValidationError -> 2
//   IoError -> 3, TransportError -> 4, anything else -> 1.

struct InvalidInputError : std::invalid_argument {
  explicit InvalidInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DegenerateInputError : std::invalid_argument {
  explicit DegenerateInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TransportError : std::runtime_error {
  TransportError(const std::string& msg, int status) : std::runtime_error(msg), last_status(status) {}
  int last_status;  // HTTP status of the last attempt, 0 if the transport itself failed
};

}  // namespace lzdist
