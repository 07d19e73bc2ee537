#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Bad input: invalid tables, asymmetric weights, malformed configs, ...
// The message names the offending element/entry where possible.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical contract was breached (residual or tolerance check failed).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}
