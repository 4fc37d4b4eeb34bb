#pragma once

#include <stdexcept>
#include <string>

namespace germ {

/// Malformed or out-of-domain user input (bad syntax, empty support, c <= 0, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure; carries the byte offset where the parser gave up.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was asked for a value outside its mathematical domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an invariant computation does not hold
/// (for example the pair is not lc before adding the curve).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The instance is valid but outside what the exact engine supports
/// (irrational special points, truncation exhausted).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace germ
