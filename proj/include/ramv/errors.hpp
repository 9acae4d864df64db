#pragma once

#include <stdexcept>
#include <string>

namespace ramv {

// Argument outside a function's domain (e.g. x = 0 where a genuine pole sits).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A denominator collapsed onto a pole of the identity being evaluated.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A series failed to reach its tolerance within the term cap, or its terms grow.
class NotConverged : public std::runtime_error {
public:
    explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

// Inputs that make the statement collapse to 0 = 0 or divide by zero structurally.
class DegenerateInput : public std::runtime_error {
public:
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// Registry lookup miss.
class UnknownIdentity : public std::runtime_error {
public:
    explicit UnknownIdentity(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramv
