#pragma once

#include <stdexcept>
#include <string>

namespace dpsm {

/// Malformed or inconsistent user input: files, parameters, configs.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A violated internal contract (caller misuse or broken invariant).
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Raised when an evaluation metric has no defined value, e.g. every
/// label pair was excluded as noise.
class metric_undefined_error : public std::runtime_error {
public:
    explicit metric_undefined_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dpsm
