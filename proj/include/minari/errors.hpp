#pragma once

#include <stdexcept>
#include <string>

namespace minari {

/// Malformed or out-of-contract arguments.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An index whose defining ratio has a zero denominator (n < 2, r = s = 1, ...).
class UndefinedIndexError : public std::domain_error {
public:
    explicit UndefinedIndexError(const std::string& what) : std::domain_error(what) {}
};

/// A search space larger than the configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal consistency (should be unreachable for valid inputs).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace minari
