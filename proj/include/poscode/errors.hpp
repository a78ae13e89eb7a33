#ifndef POSCODE_ERRORS_HPP
#define POSCODE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace poscode {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An index, coordinate or extent lies outside the valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// No sequence with the requested parameters can exist (pigeonhole).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Exhaustive search finished without finding a sequence.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// A window was looked up in a cyclic sequence that does not contain it.
class NotInSequenceError : public Error {
public:
    using Error::Error;
};

enum class DecodeFailure {
    corrupted_window,
    invalid_difference,
    not_a_rasnik_window,
    ambiguous_window,
    not_a_mesh_window,
};

inline const char* to_string(DecodeFailure f) {
    switch (f) {
        case DecodeFailure::corrupted_window: return "corrupted-window";
        case DecodeFailure::invalid_difference: return "invalid-difference";
        case DecodeFailure::not_a_rasnik_window: return "not-a-rasnik-window";
        case DecodeFailure::ambiguous_window: return "ambiguous-window";
        case DecodeFailure::not_a_mesh_window: return "not-a-mesh-window";
    }
    return "decode-failure";
}

/// Raised by the window decoders. `stage()` names the step that rejected the window.
class DecodeError : public Error {
public:
    DecodeError(DecodeFailure kind, std::string stage, const std::string& detail)
        : Error(std::string(to_string(kind)) + " [" + stage + "]: " + detail),
          kind_(kind), stage_(std::move(stage)) {}

    DecodeFailure kind() const noexcept { return kind_; }
    const std::string& stage() const noexcept { return stage_; }

private:
    DecodeFailure kind_;
    std::string stage_;
};

} // namespace poscode

#endif
