#pragma once

#include <map>
#include <string>

#include "zetalab/jsonio.hpp"
#include "zetalab/real.hpp"

namespace zetalab {

// One parsed invocation: a subcommand plus its options as strings.  The
// front end (or a test) fills this in; dispatch() validates and runs it.
// Flags arrive as "true"/"false".
struct CommandRequest {
    std::string subcommand;
    std::map<std::string, std::string> options;
    long precision = Real::kDefaultPrecision;
};

struct CommandOutcome {
    std::string subcommand;
    Json inputs = Json::object();  // resolved inputs, defaults filled in
    Json results = Json::object();
};

// Runs the request.  Throws ParseError for malformed options, DomainError
// (and subclasses) for out-of-domain inputs, InternalError when an internal
// consistency check fails.
CommandOutcome dispatch(const CommandRequest& req);

// Full output document.  format is "json" or "text"; elapsed_ms is appended
// last so consumers can strip it when comparing runs byte by byte.
std::string render_envelope(const CommandOutcome& outcome, const std::string& format,
                            long elapsed_ms);

// Formats a Real for the envelope: 17 significant digits, plain JSON number.
std::string format_real(const Real& x);

} // namespace zetalab
