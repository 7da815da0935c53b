#pragma once

#include <stdexcept>
#include <string>

namespace reachrl {

// Exit-code mapping used by the CLI: ConfigError -> 2, NumericalError -> 3,
// OracleCheckError -> 4, anything else -> 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleCheckError : std::runtime_error {
    explicit OracleCheckError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace reachrl
