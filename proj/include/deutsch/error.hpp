#pragma once

#include <stdexcept>
#include <string>

namespace deutsch {

// Caller violated a precondition (bad index, mismatched orders, bad flag).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An assertion that must hold for correct code failed.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace deutsch
