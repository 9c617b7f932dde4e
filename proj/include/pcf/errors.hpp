#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcf {

/// Violated mathematical precondition (division by zero, degree constraint, ...).
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed polynomial or rational text. position() is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A zero value appeared where the next step would have to divide by it.
class SingularError : public MathError {
public:
    SingularError(const std::string& what, long index) : MathError(what), index_(index) {}

    long index() const noexcept { return index_; }

private:
    long index_;
};

}  // namespace pcf
