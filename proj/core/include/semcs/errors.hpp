#pragma once

#include <stdexcept>
#include <string>

namespace semcs {

// Error taxonomy mirrored by the CLI exit codes: input errors exit 2,
// configuration errors exit 3, numerical aborts exit 4.

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the Fiedler vector is numerically constant and no foreground /
// background split exists. Callers may fall back to a full-image mask.
class DegenerateSegmentationError : public NumericalError {
public:
    explicit DegenerateSegmentationError(const std::string& what) : NumericalError(what) {}
};

} // namespace semcs
