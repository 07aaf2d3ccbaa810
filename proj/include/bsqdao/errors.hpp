#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsq {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input at a specific line of a corpus, tag DB, alias, or spreadsheet file.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line), reason(reason) {}
    std::size_t line;
    std::string reason;
};

/// Aggregated per-transaction validation failures (strict parsing only).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

struct UnknownSource : ParseError {
    using ParseError::ParseError;
};

struct SchemaMismatch : Error {
    using Error::Error;
};

struct NegativeBurn : Error {
    using Error::Error;
};

struct NotATransfer : Error {
    using Error::Error;
};

struct NoOutputs : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct EmptyTag : Error {
    using Error::Error;
};

struct UnknownAddress : Error {
    using Error::Error;
};

struct InconsistentClustering : Error {
    using Error::Error;
};

struct EmptyGraph : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

struct UniverseMismatch : Error {
    using Error::Error;
};

struct ConservationViolation : Error {
    using Error::Error;
};

struct InfeasibleConfig : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace bsq
