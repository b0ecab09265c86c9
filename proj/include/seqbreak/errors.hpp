#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqbreak {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// normalize() on a series shorter than 2 samples.
struct TooShort : Error {
    explicit TooShort(std::size_t n)
        : Error("series too short to normalize: length " + std::to_string(n)) {}
};

/// normalize() on a constant series (population variance 0).
struct DegenerateVariance : Error {
    DegenerateVariance() : Error("degenerate variance: all samples equal") {}
};

/// smooth() window even, zero, or larger than the series.
struct BadWindow : Error {
    BadWindow(std::size_t window, std::size_t n)
        : Error("bad smoothing window " + std::to_string(window) + " for length " +
                std::to_string(n) + " (must be odd, 1 <= window <= length)") {}
};

/// Index pair out of order or out of bounds.
struct BadRange : Error {
    BadRange(std::size_t i, std::size_t j, std::size_t n)
        : Error("bad index range [" + std::to_string(i) + ", " + std::to_string(j) +
                "] for length " + std::to_string(n)) {}
};

/// Malformed pattern text. `offset` is the byte position of the failure.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
};

/// Interval outside the index bounds; carries the offending id and value.
struct IntervalOutOfBounds : Error {
    std::string id;
    long long value;
    IntervalOutOfBounds(std::string id_, long long value_, long long lo, long long hi)
        : Error("interval " + std::to_string(value_) + " of sequence '" + id_ +
                "' outside bounds [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          id(std::move(id_)), value(value_) {}
};

/// Unparsable sample file; `line` is 1-based.
struct ParseError : Error {
    std::size_t line;
    ParseError(const std::string& what, std::size_t line_)
        : Error(what + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

struct DuplicateId : Error {
    explicit DuplicateId(const std::string& id) : Error("id already in catalog: '" + id + "'") {}
};

struct UnknownId : Error {
    explicit UnknownId(const std::string& id) : Error("unknown id: '" + id + "'") {}
};

/// Generator spec with parameters outside their documented ranges.
struct BadSpec : Error {
    using Error::Error;
};

/// File-level I/O or format failure (missing file, bad header, ...).
struct IoError : Error {
    using Error::Error;
};

}  // namespace seqbreak
