#pragma once

#include <stdexcept>
#include <string>

namespace nakarep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of a map, profile or operation.
struct DomainError : Error {
    using Error::Error;
};

struct NotBijective : Error {
    using Error::Error;
};

// Circle homeomorphism supplied without a degree-1 lift.
struct DegreeError : Error {
    using Error::Error;
};

// Malformed piecewise map (gaps, overlaps, poles inside a piece, decreasing jumps).
struct InvalidMap : Error {
    using Error::Error;
};

struct InvalidMorphism : Error {
    using Error::Error;
};

struct IncompatibleModule : Error {
    using Error::Error;
};

struct InvalidSeries : Error {
    using Error::Error;
};

struct InvalidModule : Error {
    using Error::Error;
};

struct NotGridAligned : Error {
    using Error::Error;
};

}  // namespace nakarep
