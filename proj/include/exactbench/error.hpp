#pragma once

#include <stdexcept>
#include <string>

namespace exb {

// Precondition or domain violation inside the library.  CLI maps these to
// exit code 2 with a structured report.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed serialized input (schema, canonical-form or range failures).
// Carries a JSON-pointer-ish location so tools can report where.
struct ParseError : Error {
    std::string location;
    ParseError(std::string loc, const std::string& msg)
        : Error(loc.empty() ? msg : loc + ": " + msg), location(std::move(loc)) {}
};

}  // namespace exb
