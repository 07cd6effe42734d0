#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intcol {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a byte offset for graph6 input
/// and a 1-based line number for line-oriented formats.
class ParseError : public Error {
public:
    enum class Unit { Byte, Line, None };

    ParseError(const std::string& what, Unit unit = Unit::None, std::size_t position = 0)
        : Error(what), unit_(unit), position_(position) {}

    Unit unit() const noexcept { return unit_; }
    std::size_t position() const noexcept { return position_; }

private:
    Unit unit_;
    std::size_t position_;
};

/// Input outside the sizes a format supports (graph6 short form: 1..62 vertices).
class UnsupportedSize : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition does not hold (disconnected graph, palette out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A theorem-backed internal check failed. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace intcol
