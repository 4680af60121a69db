#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition (wrong domain, pole, bad range).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at a pole. A special kind of domain violation so callers can
// give a sharper message.
struct PoleError : DomainError {
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Curve (or reduction) is singular where a nonsingular one is required.
struct SingularCurveError : DomainError {
    explicit SingularCurveError(const std::string& msg) : DomainError(msg) {}
};

// Malformed textual input: curve strings, graph files, CLI values.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A supposedly-impossible internal state. Reaching this is a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// Overflow / non-finite value escaped a numeric operation.
struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

} // namespace zetalab
