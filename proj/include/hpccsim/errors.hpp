#pragma once

#include <stdexcept>
#include <string>

namespace hpccsim {

/// Invalid or inconsistent configuration (board files, tuning values, CLI input).
/// The message names the offending field. Maps to process exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called with arguments outside its documented domain.
class ParamError : public std::runtime_error {
public:
    explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exactly-zero pivot or diagonal was met during factorization/solve.
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hpccsim
