#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontolink {

// Base class for all toolkit errors. The CLI maps subclasses to exit codes:
// input/parse/lookup/config -> 1, network -> 2, statistical degeneracy -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based; 0 when unknown.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no = 0)
        : Error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
    std::size_t line = 0;
};

// Bad or contradictory configuration (missing root, unknown flag value, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Identifier not present (or obsolete) in the structure being queried.
struct LookupError : Error {
    using Error::Error;
};

// Graph-shape violations: cycles, terms with no path to the root.
struct StructuralError : Error {
    using Error::Error;
};

// Transport failures and protocol violations talking to remote services.
struct NetworkError : Error {
    using Error::Error;
};

// Well-formed response that does not carry the expected payload.
struct ProtocolError : NetworkError {
    using NetworkError::NetworkError;
};

// A feature source has no value for a required query (offline cache miss).
struct MissingFeatureError : Error {
    using Error::Error;
};

// Statistically unusable input: zero-variance column, single-class labels,
// singular normal equations.
struct DegenerateError : Error {
    using Error::Error;
};

}  // namespace ontolink
