#pragma once

#include <stdexcept>
#include <string>

namespace outf3 {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke a documented precondition (bad indices, rank mismatch, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A bounded search ran past its cap.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// Data contradicts a structural fact that holds for genuine inputs.
/// Raised, for example, when eigenspace dimensions disagree inside one level,
/// or when a character fails to decompose into irreducibles.
class ViolationError : public Error {
public:
    explicit ViolationError(const std::string& what) : Error(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace outf3
