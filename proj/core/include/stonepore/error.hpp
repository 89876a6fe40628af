#pragma once

#include <stdexcept>
#include <string>

namespace stonepore {

/// Violated precondition or invariant (bad geometry, mismatched
/// dimensions, out-of-range parameter). Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// File system or file format failure. Maps to CLI exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stonepore
